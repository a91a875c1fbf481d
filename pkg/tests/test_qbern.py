from fractions import Fraction
from itertools import product
from math import factorial

import pytest
import sympy

from qbernoulli.barnes import barnes_poly
from qbernoulli.exactalg import Poly, RatFun
from qbernoulli.qbern import (
    BetaParams,
    PoleAtOneError,
    SingularFactorError,
    beta,
    beta_numbers,
    beta_w_expansion,
    limit_q1,
    moment,
    q_int,
    theorem2_rhs,
    theorem3_lhs,
    theorem3_rhs,
    verify_h_recurrence,
)

Q = sympy.Symbol("q")


def sym(f: RatFun):
    return sympy.sympify(f.render().replace("^", "**"), locals={"q": Q})


def sym_qint(k, s=1):
    return (1 - Q ** (s * k)) / (1 - Q**s)


def sym_beta(n, h, alphas, w=0, s=1):
    """Closed form written out independently in sympy."""
    total = 0
    for j in range(n + 1):
        term = sympy.binomial(n, j) * (-1) ** j * Q ** (s * w * j)
        for l, a in enumerate(alphas, start=1):
            k = j * a + h - l + 1
            term *= k / sym_qint(k, s)
        total += term
    return sympy.cancel(total / (1 - Q**s) ** n)


def same(f: RatFun, expr) -> bool:
    return sympy.cancel(sym(f) - expr) == 0


# -- q-integers -------------------------------------------------------------------

def test_q_int_examples():
    assert q_int(3) == RatFun(Poly([1, 1, 1]))
    assert q_int(0, 4) == RatFun(0)
    assert q_int(-2).render() == "(-q - 1)/(q^2)"


def test_q_int_rational_argument():
    # [1/2 : q^2] = (1 - q) / (1 - q^2) = 1/(1 + q)
    assert q_int(Fraction(1, 2), 2) == RatFun(1, Poly([1, 1]))
    with pytest.raises(ValueError):
        q_int(Fraction(1, 3), 2)


@pytest.mark.parametrize("x", range(-5, 11))
def test_q_int_limit(x):
    assert limit_q1(q_int(x)) == x


# -- moments --------------------------------------------------------------------------

def test_moment_zero_is_total_mass():
    assert moment(0) == RatFun(1)


def test_moment_one_hand_expansion():
    # (1 - q)^{-1} (1 - 2/[2]) = -1/(q + 1)
    assert moment(1).render() == "-1/(q + 1)"
    assert moment(1)(4) == Fraction(-1, 5)


def test_moment_two_limit_is_b2():
    assert limit_q1(moment(2)) == Fraction(1, 6)


@pytest.mark.parametrize("n", range(7))
def test_moment_is_h1_specialization(n):
    assert beta(BetaParams(n, 1, (1,))) == moment(n)


# -- closed form ----------------------------------------------------------------------------

@pytest.mark.parametrize("h", range(1, 7))
def test_beta_zero_degree(h):
    assert beta(BetaParams(0, h, (1,))) == RatFun(h) / q_int(h)


def test_beta_0_21():
    assert beta(BetaParams(0, 2, (1,))).render() == "2/(q + 1)"


def test_beta_1_21_sign():
    # (1 - q)^{-1} (2/[2] - 3/[3]) = -(2q + 1)/([2][3]); printed with a + sign
    f = beta(BetaParams(1, 2, (1,)))
    hand = (2 / sym_qint(2) - 3 / sym_qint(3)) / (1 - Q)
    assert same(f, hand)
    assert same(f, -(2 * Q + 1) / (sym_qint(2) * sym_qint(3)))
    assert limit_q1(f) == Fraction(-1, 2)


@pytest.mark.parametrize("r", range(1, 5))
def test_beta_0_rr_is_positive(r):
    expected = RatFun(factorial(r))
    for k in range(1, r + 1):
        expected = expected / q_int(k)
    assert beta(BetaParams(0, r, (1,) * r)) == expected


def test_singular_factor():
    with pytest.raises(SingularFactorError) as exc:
        beta(BetaParams(1, 0, (1,)))
    assert (exc.value.j, exc.value.l) == (0, 1)


def test_non_integer_exponent_rejected():
    with pytest.raises(ValueError):
        BetaParams(1, 2, (1,), Fraction(1, 2), 1)


@pytest.mark.parametrize(
    "n,h,alphas,w,s",
    [(2, 2, (1,), 0, 1), (3, 3, (1, 2), 1, 1), (2, 2, (2, 1), Fraction(1, 3), 3), (1, -1, (3,), 2, 2)],
)
def test_beta_matches_independent_sympy(n, h, alphas, w, s):
    assert same(beta(BetaParams(n, h, alphas, w, s)), sym_beta(n, h, alphas, w, s))


@pytest.mark.parametrize("n,h,alphas", [(n, h, a) for n in range(4) for h in (1, 2, 3) for a in [(1,), (2, 1)]
                                        if not (h == 1 and len(a) == 2)])
def test_remark2_w_zero(n, h, alphas):
    assert beta(BetaParams(n, h, alphas, 0)) == beta_numbers(n, h, alphas)


# -- w expansion ------------------------------------------------------------------------------

def test_w_expansion_trivial_cases():
    assert beta_w_expansion(3, 2, (1,), 0) == beta(BetaParams(3, 2, (1,)))
    for w in range(4):
        assert beta_w_expansion(0, 2, (1, 1), w) == beta(BetaParams(0, 2, (1, 1)))


@pytest.mark.parametrize("n,w", list(product(range(4), range(4))))
@pytest.mark.parametrize("h,alphas", [(2, (1,)), (3, (2,)), (2, (1, 2)), (3, (2, 1))])
def test_w_expansion_equals_beta(n, w, h, alphas):
    assert beta_w_expansion(n, h, alphas, w) == beta(BetaParams(n, h, alphas, w))


# -- distribution relation ------------------------------------------------------------------

def test_theorem2_d1_is_identity():
    p = BetaParams(2, 3, (1, 2), 1)
    assert theorem2_rhs(p, 1) == beta(p)


@pytest.mark.parametrize(
    "n,h,alphas,w,d", [(1, 1, (1,), 0, 2), (2, 2, (1, 2), 1, 3), (3, 2, (2,), 3, 2), (0, 2, (1, 1), 0, 3)]
)
def test_theorem2(n, h, alphas, w, d):
    p = BetaParams(n, h, alphas, w)
    assert theorem2_rhs(p, d) == beta(p)


def test_theorem2_alternate_form():
    # shift w d on the left, w + (a.i)/d inside: same relation with w -> w d
    for d in (2, 3):
        p = BetaParams(2, 2, (1, 2), 2 * d)
        assert theorem2_rhs(p, d) == beta(p)


# -- inversion formula ----------------------------------------------------------------------

def test_theorem3_m0_is_product():
    for h, alphas in [(2, (1,)), (3, (1, 2)), (4, (2, 2, 1))]:
        assert theorem3_lhs(0, h, alphas) == theorem3_rhs(0, h, alphas)


def test_theorem3_m1_hand_expansion():
    expected = RatFun(2, Poly([1, 1]))
    assert theorem3_lhs(1, 1, (1,)) == expected
    assert theorem3_rhs(1, 1, (1,)) == expected


def test_theorem3_m3():
    assert theorem3_lhs(3, 2, (1, 1)) == theorem3_rhs(3, 2, (1, 1))


# -- h recurrence ----------------------------------------------------------------------------

def test_h_recurrence_derived_holds_printed_fails():
    rep = verify_h_recurrence(0, 2, 1)
    assert rep.derived_holds
    assert not rep.printed_holds
    # beta_0^{(2,1)} = (q - 1) beta_1^{(1,1)} + beta_0^{(1,1)}, checked by hand
    assert RatFun(Poly([-1, 1])) * moment(1) + RatFun(1) == beta(BetaParams(0, 2, (1,)))


def test_h_recurrence_singular():
    with pytest.raises(SingularFactorError):
        verify_h_recurrence(0, 2, 2)


@pytest.mark.parametrize("m,h,r", [(m, h, r) for m in range(5) for h in (2, 3, 4) for r in (1, 2)
                                   if not (h == 2 and r == 2)])
def test_h_recurrence_sweep(m, h, r):
    rep = verify_h_recurrence(m, h, r)
    assert rep.derived_holds
    assert not rep.printed_holds


# -- q -> 1 ---------------------------------------------------------------------------------

def test_limit_examples():
    assert limit_q1(beta(BetaParams(1, 2, (1,)))) == Fraction(-1, 2)
    with pytest.raises(PoleAtOneError):
        limit_q1(RatFun(1, Poly([-1, 1])))


@pytest.mark.parametrize("n,alphas,w", [(3, (1, 2), 1), (4, (3,), 2), (2, (2, 3), 0)])
def test_limit_is_barnes_and_h_independent(n, alphas, w):
    r = len(alphas)
    values = {limit_q1(beta(BetaParams(n, h, alphas, w))) for h in (r, r + 1, r + 2, r + 5)}
    assert values == {barnes_poly(n, alphas, w)}
