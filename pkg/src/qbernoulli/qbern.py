"""Barnes-type multiple q-Bernoulli numbers as exact rational functions.

Notation used throughout: ``beta(n, h, alphas, w, s)`` is the r-fold
q-integral of ``[w + a_1 x_1 + ... + a_r x_r]^n`` against the weight
``q^{sum_l (h - l) x_l}``, taken over the base ``Q = q^s``.  Its closed form is

    (1 - Q)^{-n} sum_j C(n, j) (-Q^w)^j prod_l k_{jl} / [k_{jl} : Q],
    k_{jl} = j a_l + h - l + 1.

When some ``k_{jl}`` is zero the integral is not a rational function of q
(a p-adic logarithm appears), so such parameters are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Sequence

from .exactalg import PoleError, RatFun, evaluate, normalize, Poly

__all__ = [
    "SingularFactorError",
    "BetaParams",
    "q_int",
    "moment",
    "beta",
    "beta_numbers",
    "beta_w_expansion",
    "theorem2_rhs",
    "theorem3_lhs",
    "theorem3_rhs",
    "HRecurrenceReport",
    "verify_h_recurrence",
    "limit_q1",
]


class SingularFactorError(ValueError):
    """A factor k/[k] with k = 0 would appear; carries the offending (j, l)."""

    def __init__(self, j: int, l: int, h: int, alphas: Sequence[int]):
        self.j, self.l = j, l
        super().__init__(
            f"singular factor at j={j}, l={l}: {j}*{alphas[l - 1]} + {h} - {l} + 1 = 0"
        )


def check_nonsingular(n: int, h: int, alphas: Sequence[int], degrees=None) -> None:
    """Raise SingularFactorError if j*alpha_l + h - l + 1 == 0 for some j."""
    js = range(n + 1) if degrees is None else degrees
    for j in js:
        for l, a in enumerate(alphas, start=1):
            if j * a + h - l + 1 == 0:
                raise SingularFactorError(j, l, h, alphas)


@dataclass(frozen=True)
class BetaParams:
    n: int
    h: int
    alphas: tuple[int, ...]
    w: Fraction = Fraction(0)
    s: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))
        object.__setattr__(self, "w", Fraction(self.w))
        if self.n < 0:
            raise ValueError("degree n must be non-negative")
        if not self.alphas:
            raise ValueError("need at least one alpha (r >= 1)")
        if self.s < 1:
            raise ValueError("base power s must be positive")
        if (self.s * self.w).denominator != 1:
            raise ValueError(f"s*w must be an integer (s={self.s}, w={self.w})")
        check_nonsingular(self.n, self.h, self.alphas)

    @property
    def r(self) -> int:
        return len(self.alphas)


def q_int(x, s: int = 1) -> RatFun:
    """The q-integer [x : q^s] = (1 - q^{s x}) / (1 - q^s)."""
    x = Fraction(x)
    k = s * x
    if k.denominator != 1:
        raise ValueError(f"non-integer exponent s*x = {k}")
    k = int(k)
    if k == 0:
        return RatFun.constant(0)
    if k % s == 0:
        m = k // s
        geo = Poly([1 if i % s == 0 else 0 for i in range(s * (abs(m) - 1) + 1)])
        if m > 0:
            return RatFun._raw(geo, Poly.constant(1))
        # [-m : Q] = -[m : Q] / Q^m
        return RatFun._raw(-geo, Poly.monomial(s * -m))
    one_minus_qs = Poly([1] + [0] * (s - 1) + [-1])
    if k > 0:
        return normalize(Poly([1] + [0] * (k - 1) + [-1]), one_minus_qs)
    return normalize(Poly([-1] + [0] * (-k - 1) + [1]), Poly.monomial(-k) * one_minus_qs)


def _ratio(k: int, s: int) -> RatFun:
    """k / [k : q^s] for k != 0."""
    return q_int(k, s).inverse() * k


def moment(m: int) -> RatFun:
    """Integral of [x]^m against mu_q over Z_p."""
    if m < 0:
        raise ValueError("moment order must be non-negative")
    total = RatFun.constant(0)
    for i in range(m + 1):
        term = _ratio(i + 1, 1) * (comb(m, i) * (-1) ** i)
        total = total + term
    return total * _one_minus_Q_pow(m, 1)


def _one_minus_Q_pow(n: int, s: int) -> RatFun:
    """(1 - q^s)^{-n}."""
    if n == 0:
        return RatFun.constant(1)
    base = Poly([1] + [0] * (s - 1) + [-1])
    return normalize(Poly.constant(1), base ** n)


def beta(p: BetaParams) -> RatFun:
    """Closed form of the extended q-Bernoulli number described by ``p``."""
    n, h, alphas, w, s = p.n, p.h, p.alphas, p.w, p.s
    shift = int(s * w)  # Q^w = q^{s w}
    ratios: dict[int, RatFun] = {}
    total = RatFun.constant(0)
    for j in range(n + 1):
        prod_ = RatFun.constant(comb(n, j) * (-1) ** j)
        for l, a in enumerate(alphas, start=1):
            k = j * a + h - l + 1
            if k not in ratios:
                ratios[k] = _ratio(k, s)
            prod_ = prod_ * ratios[k]
        if shift and j:
            prod_ = prod_ * RatFun.monomial(shift * j)
        total = total + prod_
    return total * _one_minus_Q_pow(n, s)


def beta_numbers(n: int, h: int, alphas: Sequence[int]) -> RatFun:
    """w-free closed form (base q): (1-q)^{-n} sum_j C(n,j) (-1)^j prod_l k/[k]."""
    check_nonsingular(n, h, alphas)
    total = RatFun.constant(0)
    for j in range(n + 1):
        term = RatFun.constant(comb(n, j) * (-1) ** j)
        for l, a in enumerate(alphas, start=1):
            term = term * _ratio(j * a + h - l + 1, 1)
        total = total + term
    return total * _one_minus_Q_pow(n, 1)


def beta_w_expansion(n: int, h: int, alphas: Sequence[int], w: int) -> RatFun:
    """sum_j C(n,j) q^{w j} beta_j(q|alphas) [w]^{n-j}, built from the w-free numbers."""
    check_nonsingular(n, h, alphas)
    qw = q_int(w)
    total = RatFun.constant(0)
    for j in range(n + 1):
        if n - j and qw.is_zero():
            continue
        term = beta_numbers(j, h, alphas) * comb(n, j)
        if w * j:
            term = term * RatFun.monomial(w * j)
        total = total + term * qw ** (n - j)
    return total


def theorem2_rhs(p: BetaParams, d: int) -> RatFun:
    """Distribution-relation side: value at modulus d with base q^d."""
    if p.s != 1:
        raise ValueError("theorem2_rhs expects base power s = 1")
    if p.w.denominator != 1:
        raise ValueError("theorem2_rhs expects an integer shift w")
    if d < 1:
        raise ValueError("d must be positive")
    n, h, alphas, r = p.n, p.h, p.alphas, p.r
    total = RatFun.constant(0)
    for idx in product(range(d), repeat=r):
        expo = sum((h - k + 1) * i for k, i in enumerate(idx, start=1))
        shifted = Fraction(p.w + sum(a * i for a, i in zip(alphas, idx)), d)
        inner = beta(BetaParams(n, h, alphas, shifted, d))
        total = total + RatFun.monomial(expo) * inner
    return total * q_int(d) ** (n - r)


def theorem3_lhs(m: int, h: int, alphas: Sequence[int]) -> RatFun:
    """sum_i C(m,i) (q-1)^i beta_i(q|alphas)."""
    check_nonsingular(m, h, alphas)
    q_minus_1 = RatFun(Poly([-1, 1]))
    total = RatFun.constant(0)
    for i in range(m + 1):
        total = total + beta(BetaParams(i, h, alphas)) * q_minus_1 ** i * comb(m, i)
    return total


def theorem3_rhs(m: int, h: int, alphas: Sequence[int]) -> RatFun:
    """prod_j (m a_j + h - j + 1) / [m a_j + h - j + 1]."""
    check_nonsingular(m, h, alphas, degrees=[m])
    total = RatFun.constant(1)
    for l, a in enumerate(alphas, start=1):
        total = total * _ratio(m * a + h - l + 1, 1)
    return total


@dataclass(frozen=True)
class HRecurrenceReport:
    m: int
    h: int
    r: int
    lhs: RatFun
    derived_rhs: RatFun
    printed_rhs: RatFun
    derived_residual: RatFun = field(compare=False)
    printed_residual: RatFun = field(compare=False)

    @property
    def derived_holds(self) -> bool:
        return self.derived_residual.is_zero()

    @property
    def printed_holds(self) -> bool:
        return self.printed_residual.is_zero()


def verify_h_recurrence(m: int, h: int, r: int) -> HRecurrenceReport:
    """Compare beta_m^{(h,r)}(q|1..1) with both readings of the h-lowering identity.

    derived: (q-1) beta_{m+1}^{(h-1,r)} + beta_m^{(h-1,r)}
    printed: (q-1) beta_m^{(h-1,r)} + beta_m^{(h-1,r)}
    """
    ones = (1,) * r
    check_nonsingular(m, h, ones)
    check_nonsingular(m + 1, h - 1, ones)
    q_minus_1 = RatFun(Poly([-1, 1]))
    lhs = beta(BetaParams(m, h, ones))
    lower_m = beta(BetaParams(m, h - 1, ones))
    lower_m1 = beta(BetaParams(m + 1, h - 1, ones))
    derived = q_minus_1 * lower_m1 + lower_m
    printed = q_minus_1 * lower_m + lower_m
    return HRecurrenceReport(m, h, r, lhs, derived, printed, lhs - derived, lhs - printed)


class PoleAtOneError(PoleError):
    pass


def limit_q1(f: RatFun) -> Fraction:
    """Value at q = 1; a vanishing canonical denominator is a genuine pole."""
    try:
        return evaluate(f, 1)
    except PoleError as exc:
        raise PoleAtOneError(f"{f.render()} has a pole at q = 1") from exc
