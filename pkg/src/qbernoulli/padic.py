"""Independent p-adic oracle for the defining q-integrals.

The q-integrals are limits of Riemann sums

    S_N = sum_{a in [0, d p^N)^r} f(a) prod_l q0^{a_l} / [d p^N : q0]

evaluated here at a concrete integer q0 = 1 (mod p) in fixed-precision
p-adic arithmetic.  Nothing in this module touches the closed forms except
:func:`closed_form_padic`, which only evaluates a finished rational
function at q0 for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Optional, Sequence

from .characters import DirichletCharacter, primitive_root
from .cyclo import CycloElem
from .exactalg import evaluate
from .qbern import BetaParams

__all__ = [
    "PrecisionExhaustedError",
    "PadicApprox",
    "padic_arith",
    "teichmuller",
    "root_of_unity",
    "OracleJob",
    "riemann_sum",
    "closed_form_padic",
    "OracleRow",
    "OracleReport",
    "oracle_compare",
]

DEFAULT_PRECISION = 20


class PrecisionExhaustedError(ArithmeticError):
    pass


def valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True)
class PadicApprox:
    """p^valuation * unit, known modulo p^(valuation + precision).

    When ``zero`` is set the value is only known to be divisible by
    p^valuation; unit is 0 and precision is irrelevant.
    """

    p: int
    precision: int
    valuation: int
    unit: int
    zero: bool = False

    @property
    def absolute_precision(self) -> int:
        return self.valuation if self.zero else self.valuation + self.precision

    @classmethod
    def from_int(cls, x: int, p: int, abs_prec: int) -> PadicApprox:
        """An integer known modulo p^abs_prec."""
        x %= p ** abs_prec
        if x == 0:
            return cls(p, 0, abs_prec, 0, True)
        v = valuation(x, p)
        m = abs_prec - v
        return cls(p, m, v, (x // p ** v) % p ** m)

    @classmethod
    def from_rational(cls, x, p: int, rel_prec: int) -> PadicApprox:
        """An exact rational, to ``rel_prec`` digits of unit precision."""
        x = Fraction(x)
        if x == 0:
            return cls(p, 0, rel_prec, 0, True)
        vn = valuation(x.numerator, p)
        vd = valuation(x.denominator, p)
        mod = p ** rel_prec
        un = x.numerator // p ** vn
        ud = x.denominator // p ** vd
        return cls(p, rel_prec, vn - vd, un * pow(ud, -1, mod) % mod)

    def _check(self, other: PadicApprox) -> None:
        if self.p != other.p:
            raise ValueError("mixed primes")

    def __add__(self, other: PadicApprox) -> PadicApprox:
        self._check(other)
        prec = min(self.absolute_precision, other.absolute_precision)
        if self.zero and other.zero:
            return PadicApprox(self.p, 0, prec, 0, True)
        base = min(x.valuation for x in (self, other) if not x.zero)
        if prec <= base:
            return PadicApprox(self.p, 0, prec, 0, True)
        mod = self.p ** (prec - base)
        total = 0
        for x in (self, other):
            if not x.zero:
                total += x.unit * self.p ** (x.valuation - base)
        total %= mod
        if total == 0:
            return PadicApprox(self.p, 0, prec, 0, True)
        v = valuation(total, self.p)
        m = prec - base - v
        return PadicApprox(self.p, m, base + v, (total // self.p ** v) % self.p ** m)

    def __neg__(self) -> PadicApprox:
        if self.zero:
            return self
        return PadicApprox(self.p, self.precision, self.valuation, (-self.unit) % self.p ** self.precision)

    def __sub__(self, other: PadicApprox) -> PadicApprox:
        return self + (-other)

    def __mul__(self, other: PadicApprox) -> PadicApprox:
        self._check(other)
        if self.zero or other.zero:
            # divisible by p^(a + b) where a, b bound the factors' valuations
            return PadicApprox(self.p, 0, self.valuation + other.valuation, 0, True)
        m = min(self.precision, other.precision)
        mod = self.p ** m
        return PadicApprox(self.p, m, self.valuation + other.valuation, self.unit * other.unit % mod)

    def __truediv__(self, other: PadicApprox) -> PadicApprox:
        self._check(other)
        if other.zero:
            raise ZeroDivisionError("division by a p-adic zero")
        if self.zero:
            return PadicApprox(self.p, 0, self.valuation - other.valuation, 0, True)
        m = min(self.precision, other.precision)
        mod = self.p ** m
        return PadicApprox(
            self.p, m, self.valuation - other.valuation, self.unit * pow(other.unit, -1, mod) % mod
        )

    def to_fraction(self) -> Fraction:
        """Representative p^v * unit with 0 <= unit < p^precision."""
        if self.zero:
            return Fraction(0)
        return Fraction(self.p) ** self.valuation * self.unit


def padic_arith(a: PadicApprox, b: PadicApprox, op: str) -> PadicApprox:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def teichmuller(p: int, M: int, a: int) -> PadicApprox:
    """The (p-1)-th root of unity congruent to a mod p, to M digits."""
    if a % p == 0:
        raise ValueError("a must be a unit mod p")
    mod = p ** M
    x = a % mod
    while True:
        y = pow(x, p, mod)
        if y == x:
            return PadicApprox(p, M, 0, x)
        x = y


def root_of_unity(p: int, M: int, e: int) -> int:
    """A primitive e-th root of unity in Z_p (mod p^M); requires e | p - 1."""
    if (p - 1) % e:
        raise ValueError(f"order {e} does not divide p - 1 = {p - 1}")
    g = teichmuller(p, M, primitive_root(p)).unit
    return pow(g, (p - 1) // e, p ** M)


@dataclass(frozen=True)
class OracleJob:
    p: int
    N: int
    params: BetaParams
    q0: Optional[int] = None
    d: int = 1
    chi: Optional[DirichletCharacter] = None
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if self.q0 is None:
            object.__setattr__(self, "q0", 1 + self.p)
        if self.p < 3 or any(self.p % f == 0 for f in range(2, int(self.p ** 0.5) + 1)):
            raise ValueError(f"p = {self.p} must be an odd prime")
        if (self.q0 - 1) % self.p:
            raise ValueError("q0 must be congruent to 1 mod p")
        if self.N < 0 or self.d < 1:
            raise ValueError("need N >= 0 and d >= 1")
        if self.params.s != 1 or self.params.w.denominator != 1:
            raise ValueError("oracle supports base power 1 and integer shifts only")
        if self.chi is not None:
            if gcd(self.d, self.p) != 1:
                raise ValueError("d must be prime to p when a character is present")
            if self.d % self.chi.modulus:
                raise ValueError("character modulus must divide d")
            if (self.p - 1) % self.chi.order:
                raise ValueError(f"character order {self.chi.order} must divide p - 1")

    @property
    def working_precision(self) -> int:
        r = self.params.r
        log_d, x = 0, 1
        while x < self.d:
            x *= self.p
            log_d += 1
        return self.precision + r * (self.N + log_d + 2)


def riemann_sum(job: OracleJob) -> PadicApprox:
    """Level-N Riemann sum of the defining integral."""
    p, q0, d, N = job.p, job.q0, job.d, job.N
    n, h, alphas, w = job.params.n, job.params.h, job.params.alphas, int(job.params.w)
    r = len(alphas)
    W = job.working_precision
    v1 = valuation(q0 - 1, p)
    big = p ** (W + v1)
    mod = p ** W
    u1 = pow((q0 - 1) // p ** v1, -1, mod)

    def qint(k: int) -> int:
        # [k : q0] mod p^W; exact integer division of q0^k - 1 by p^v1
        t = (pow(q0, k, big) - 1) % big
        return (t // p ** v1) * u1 % mod

    L = d * p ** N
    if job.chi is not None:
        omega = root_of_unity(p, W, job.chi.order)
        char = []
        for a in range(L):
            k = job.chi(a)
            char.append(0 if k is None else pow(omega, k, mod))
    else:
        char = [1] * L
    # per-coordinate weight: q0^{(h - l) a} (integrand) * q0^a (measure) * chi(a)
    weights = [[pow(q0, (h - l + 1) * a, mod) * char[a] % mod for a in range(L)] for l in range(1, r + 1)]
    powers: dict[int, int] = {}
    total = 0
    for point in product(range(L), repeat=r):
        wt = 1
        for l, a in enumerate(point):
            wt = wt * weights[l][a] % mod
            if not wt:
                break
        if not wt:
            continue
        k = w + sum(al * a for al, a in zip(alphas, point))
        if k not in powers:
            powers[k] = pow(qint(k), n, mod)
        total = (total + wt * powers[k]) % mod
    num = PadicApprox.from_int(total, p, W)
    den = PadicApprox.from_int(qint(L), p, W)
    result = num
    for _ in range(r):
        result = result / den
    if result.absolute_precision < job.precision:
        raise PrecisionExhaustedError(
            f"only {result.absolute_precision} digits left, wanted {job.precision}"
        )
    return result


def closed_form_padic(closed, p: int, q0: int, digits: int, omega: Optional[int] = None) -> PadicApprox:
    """Evaluate a RatFun (or CycloElem, with z -> omega) at q0 in Z_p."""
    if isinstance(closed, CycloElem):
        if omega is None:
            omega = root_of_unity(p, digits + 8, closed.order)
        total = PadicApprox(p, 0, digits + 8, 0, True)
        for k, c in enumerate(closed.coeffs):
            if c.is_zero():
                continue
            val = PadicApprox.from_rational(evaluate(c, q0), p, digits + 8)
            total = total + val * PadicApprox.from_int(pow(omega, k, p ** (digits + 8)), p, digits + 8)
        return total
    return PadicApprox.from_rational(evaluate(closed, q0), p, digits + 8)


@dataclass(frozen=True)
class OracleRow:
    N: int
    residual_valuation: Optional[int]  # None: residual vanishes to working precision
    working_precision: int
    passed: bool

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "residual_valuation": self.residual_valuation,
            "working_precision": self.working_precision,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class OracleReport:
    rows: tuple[OracleRow, ...]
    passed: bool
    n_max: int = field(default=0)

    def valuations(self) -> list[Optional[int]]:
        return [row.residual_valuation for row in self.rows]


def oracle_compare(closed, jobs: Sequence[OracleJob]) -> OracleReport:
    """Residual valuations of Riemann sums against a closed form.

    A level passes when its residual vanishes to working precision or its
    valuation strictly exceeds the previous level's.  Overall PASS also
    needs the last level to vanish or reach valuation >= N_max.
    """
    jobs = sorted(jobs, key=lambda j: j.N)
    rows = []
    prev: Optional[int] = None
    prev_exact = False
    ok = True
    for job in jobs:
        omega = root_of_unity(job.p, job.working_precision, job.chi.order) if job.chi else None
        if isinstance(closed, CycloElem) and omega is None:
            raise ValueError("a cyclotomic closed form needs a character in the job")
        target = closed_form_padic(closed, job.p, job.q0, job.working_precision, omega)
        residual = riemann_sum(job) - target
        v = None if residual.zero else residual.valuation
        if v is None:
            passed = True
        elif prev_exact:
            passed = False
        else:
            passed = prev is None or v > prev
        ok = ok and passed
        rows.append(OracleRow(job.N, v, job.working_precision, passed))
        prev, prev_exact = v, v is None
    if rows:
        last = rows[-1].residual_valuation
        n_max = rows[-1].N
        ok = ok and (last is None or last >= n_max)
    else:
        n_max = 0
    return OracleReport(tuple(rows), ok, n_max)
