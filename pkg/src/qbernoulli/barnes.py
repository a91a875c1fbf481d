"""Barnes' multiple Bernoulli polynomials from their generating function

    prod_j (w_j t / (e^{w_j t} - 1)) * e^{x t} = sum_n B_n^{(r)}(x | w) t^n / n!

computed formally over exact rationals.  Weights may be any nonzero
rationals; the analytic region of the generating function plays no role
in coefficient extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .exactalg import PowerSeries, series_invert, series_mul

__all__ = ["BarnesParams", "bernoulli", "bernoulli_poly", "barnes_poly"]


@dataclass(frozen=True)
class BarnesParams:
    n: int
    weights: tuple[Fraction, ...]
    x: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        object.__setattr__(self, "x", Fraction(self.x))
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not self.weights:
            raise ValueError("need at least one weight")
        if any(w == 0 for w in self.weights):
            raise ValueError("weights must be nonzero")


def bernoulli(upto: int) -> list[Fraction]:
    """B_0..B_upto (B_1 = -1/2) from sum_{k<=n} C(n+1, k) B_k = 0."""
    out: list[Fraction] = []
    for n in range(upto + 1):
        if n == 0:
            out.append(Fraction(1))
            continue
        s = sum(comb(n + 1, k) * out[k] for k in range(n))
        out.append(-s / (n + 1))
    return out


def bernoulli_poly(n: int, x) -> Fraction:
    """Classical B_n(x) = sum_k C(n, k) B_k x^{n-k}."""
    x = Fraction(x)
    bs = bernoulli(n)
    return sum((comb(n, k) * bs[k] * x ** (n - k) for k in range(n + 1)), Fraction(0))


def _todd_factor(w: Fraction, order: int) -> PowerSeries:
    # w t / (e^{w t} - 1) = 1 / sum_k (w t)^k / (k+1)!
    denom = PowerSeries([w ** k / factorial(k + 1) for k in range(order)], order)
    return series_invert(denom)


def barnes_poly(p: BarnesParams | int, weights: Sequence | None = None, x=0) -> Fraction:
    """B_n^{(r)}(x | w_1..w_r).

    Accepts either a :class:`BarnesParams` or ``(n, weights, x)``.
    """
    if not isinstance(p, BarnesParams):
        p = BarnesParams(p, tuple(weights), x)
    order = p.n + 1
    series = PowerSeries.exp(p.x, order)
    for w in p.weights:
        series = series_mul(series, _todd_factor(w, order))
    return series[p.n] * factorial(p.n)
