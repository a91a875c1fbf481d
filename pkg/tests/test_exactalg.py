from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qbernoulli.barnes import bernoulli
from qbernoulli.exactalg import (
    NonUnitError,
    OrderMismatchError,
    PoleError,
    Poly,
    PowerSeries,
    RatFun,
    ZeroDenominatorError,
    evaluate,
    normalize,
    poly_gcd,
    ratfun_arith,
    series_invert,
    series_mul,
    subst_power,
)

Q = sympy.Symbol("q")


def P(*coeffs):
    return Poly(coeffs)


def to_sympy(f: RatFun):
    return sympy.sympify(f.render().replace("^", "**"), locals={"q": Q})


# -- normalize -------------------------------------------------------------

def test_normalize_cancels_common_factor():
    f = normalize(P(-1, 0, 1), P(-1, 1))
    assert f.num == P(1, 1) and f.den == P(1)


def test_normalize_zero_numerator():
    f = normalize(Poly(), P(0, 5))
    assert f.num.is_zero() and f.den == P(1)
    assert f.render() == "0"


def test_normalize_against_sympy_gcd():
    num, den = P(-1, -1, 2), P(-1, 0, 1)
    g = sympy.gcd(2 * Q**2 - Q - 1, Q**2 - 1)
    assert sympy.expand(g - (Q - 1)) == 0
    f = normalize(num, den)
    assert f.render() == "(2*q + 1)/(q + 1)"


def test_normalize_zero_denominator():
    with pytest.raises(ZeroDenominatorError):
        normalize(P(1), Poly())


def test_denominator_is_monic():
    f = normalize(P(2), P(6, 4))
    assert f.den == P(Fraction(3, 2), 1)
    assert f.render() == "(1/2)/(q + 3/2)"


# -- arithmetic --------------------------------------------------------------

def test_add_to_one():
    a = RatFun(P(1), P(1, 1))
    b = RatFun(P(0, 1), P(1, 1))
    assert ratfun_arith(a, b, "add") == RatFun(1)


def test_mul_identity():
    f = RatFun(P(3, 0, -1), P(1, 2, 7))
    assert ratfun_arith(f, RatFun(1), "mul") == f


def test_sub_cross_multiplication():
    a = RatFun(P(2), P(1, 1))
    b = RatFun(P(3), P(1, 1, 1))
    # 2(q^2 + q + 1) - 3(q + 1) over (q + 1)(q^2 + q + 1)
    assert ratfun_arith(a, b, "sub").render() == "(2*q^2 - q - 1)/(q^3 + 2*q^2 + 2*q + 1)"


def test_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        ratfun_arith(RatFun(1), RatFun(0), "div")


def test_negative_power_of_q_is_cleared():
    f = RatFun.monomial(-3, 2)
    assert f.num == P(2) and f.den == P(0, 0, 0, 1)


# -- evaluation and substitution ------------------------------------------------

def test_eval_polynomial():
    assert evaluate(RatFun(P(1, 1)), 2) == 3


def test_eval_pole():
    with pytest.raises(PoleError):
        evaluate(RatFun(P(1), P(-1, 1)), 1)


def test_eval_first_moment_at_one():
    assert evaluate(RatFun(P(-1), P(1, 1)), 1) == Fraction(-1, 2)


@pytest.mark.parametrize(
    "poly, s, expected",
    [((1, 1), 2, (1, 0, 1)), ((1, 1, 1), 2, (1, 0, 1, 0, 1)), ((3, 0, 2), 1, (3, 0, 2))],
)
def test_subst_power(poly, s, expected):
    assert subst_power(RatFun(P(*poly)), s) == RatFun(P(*expected))


def test_render_golden():
    f = RatFun(P(-1, -2), P(1, 2, 2, 1))
    assert f.render() == "(-2*q - 1)/(q^3 + 2*q^2 + 2*q + 1)"
    assert RatFun(P(1, 1)).render() == "q + 1"
    assert RatFun(P(2), P(1, 1)).render() == "2/(q + 1)"
    assert RatFun(P(0, 0, -1), P(1, 1)).render() == "-q^2/(q + 1)"


def test_poly_gcd_matches_sympy():
    a = P(-1, 0, 0, 0, 0, 0, 1)  # q^6 - 1
    b = P(1, 0, 0, 0, 1)  # q^4 + 1 ... coprime to q^6 - 1
    assert poly_gcd(a, b) == P(1)
    c = P(-1, 0, 0, 1)  # q^3 - 1
    g = poly_gcd(a, c * P(2, 1))
    assert g == c


# -- power series ---------------------------------------------------------------

def test_series_mul_difference_of_squares():
    assert series_mul(PowerSeries([1, 1], 3), PowerSeries([1, -1], 3)) == PowerSeries([1, 0, -1], 3)


def test_series_mul_identity():
    a = PowerSeries([2, Fraction(1, 3), -5, 7], 4)
    assert series_mul(a, PowerSeries.one(4)) == a


def test_exp_times_exp_minus():
    e = PowerSeries.exp(1, 5)
    assert series_mul(e, PowerSeries.exp(-1, 5)) == PowerSeries.one(5)


def test_series_order_mismatch():
    with pytest.raises(OrderMismatchError):
        series_mul(PowerSeries([1], 2), PowerSeries([1], 3))


def test_invert_one_and_geometric():
    assert series_invert(PowerSeries.one(4)) == PowerSeries.one(4)
    assert series_invert(PowerSeries([1, 1], 4)) == PowerSeries([1, -1, 1, -1], 4)


def test_invert_gives_bernoulli_numbers():
    from math import factorial

    order = 9
    inv = series_invert(PowerSeries([Fraction(1, factorial(k + 1)) for k in range(order)], order))
    assert inv[1] == Fraction(-1, 2)
    bs = bernoulli(order - 1)
    assert [inv[k] * factorial(k) for k in range(order)] == bs


def test_invert_non_unit():
    with pytest.raises(NonUnitError):
        series_invert(PowerSeries([0, 1], 3))


# -- properties ------------------------------------------------------------------

small = st.integers(-4, 4)
polys = st.lists(small, min_size=1, max_size=4).map(lambda c: Poly(c))
nonzero_polys = polys.filter(lambda p: not p.is_zero())
ratfuns = st.tuples(polys, nonzero_polys).map(lambda t: RatFun(*t))


@settings(max_examples=120, deadline=None)
@given(ratfuns, ratfuns, ratfuns)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f - f == RatFun(0)
    assert f * g == g * f


def poly_sym(p: Poly):
    return sum(c * Q**k for k, c in enumerate(p.coeffs))


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys)
def test_normalize_against_sympy(a, b):
    f = normalize(a, b)
    num, den = poly_sym(f.num), poly_sym(f.den)
    assert sympy.cancel(num / den - poly_sym(a) / poly_sym(b)) == 0
    assert sympy.degree(sympy.gcd(num, den), Q) <= 0
    assert f.den.leading() == 1


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys, nonzero_polys)
def test_canonical_uniqueness(a, b, c):
    assert normalize(a * c, b * c) == normalize(a, b)


@settings(max_examples=50, deadline=None)
@given(ratfuns, st.integers(1, 4), st.integers(1, 4))
def test_subst_composition(f, s, t):
    assert subst_power(subst_power(f, s), t) == subst_power(f, s * t)


@settings(max_examples=60, deadline=None)
@given(ratfuns, st.integers(1, 3), st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_eval_commutes_with_subst(f, s, q0):
    try:
        expected = evaluate(f, q0 ** s)
    except PoleError:
        return
    assert evaluate(subst_power(f, s), q0) == expected


series = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=1, max_size=7
).filter(lambda c: c[0] != 0)


@settings(max_examples=40, deadline=None)
@given(series)
def test_invert_then_multiply_is_one(coeffs):
    a = PowerSeries(coeffs)
    assert series_mul(a, series_invert(a)) == PowerSeries.one(a.order)
