"""Exact arithmetic substrate: polynomials in q over the rationals, canonical
rational functions, and truncated formal power series.

Rationals are :class:`fractions.Fraction`.  A :class:`Poly` stores its
coefficients as a tuple of integers over one positive common denominator,
which keeps the inner loops in plain ``int`` arithmetic; the public
``coeffs`` view is a tuple of ``Fraction``.

A :class:`RatFun` is always held in canonical form: numerator and
denominator coprime over Q and the denominator monic.  Structural equality
is therefore field equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "ZeroDenominatorError",
    "PoleError",
    "OrderMismatchError",
    "NonUnitError",
    "Poly",
    "RatFun",
    "PowerSeries",
    "normalize",
    "ratfun_arith",
    "evaluate",
    "subst_power",
    "series_mul",
    "series_invert",
    "poly_gcd",
]


class ZeroDenominatorError(ZeroDivisionError):
    """Raised when a rational function would get a zero denominator."""


class PoleError(ZeroDivisionError):
    """Raised when evaluating a rational function at a root of its denominator."""


class OrderMismatchError(ValueError):
    """Raised when combining power series truncated at different orders."""


class NonUnitError(ZeroDivisionError):
    """Raised when inverting a power series whose constant term is zero."""


def _trim(nums: list[int]) -> list[int]:
    while nums and nums[-1] == 0:
        nums.pop()
    return nums


def _content(nums: Sequence[int]) -> int:
    g = 0
    for c in nums:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _conv(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return out


def _primitive(nums: Sequence[int]) -> list[int]:
    c = _content(nums)
    if c in (0, 1):
        return list(nums)
    return [x // c for x in nums]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials: lc(b)^k * a mod b."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        lr = rem[-1]
        g = gcd(lr, lb)
        mr, mb = lb // g, lr // g
        rem = [x * mr for x in rem]
        for i, bi in enumerate(b):
            rem[i + shift] -= mb * bi
        rem.pop()
        _trim(rem)
    return rem


class Poly:
    """Dense univariate polynomial over Q, coefficients in ascending degree.

    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("_nums", "_den")

    def __init__(self, coeffs: Iterable = ()):
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = _trim([int(c * den) for c in coeffs])
        self._set(nums, den)

    def _set(self, nums: list[int], den: int) -> None:
        if not nums:
            self._nums, self._den = (), 1
            return
        g = gcd(_content(nums), den)
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
        self._nums, self._den = tuple(nums), den

    @classmethod
    def _from_ints(cls, nums: list[int], den: int = 1) -> Poly:
        obj = cls.__new__(cls)
        if den < 0:
            nums, den = [-x for x in nums], -den
        obj._set(_trim(nums), den)
        return obj

    @classmethod
    def constant(cls, c) -> Poly:
        c = Fraction(c)
        return cls._from_ints([c.numerator], c.denominator)

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        if k < 0:
            raise ValueError("negative exponent in a polynomial")
        c = Fraction(c)
        return cls._from_ints([0] * k + [c.numerator], c.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._nums)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._nums) - 1

    def is_zero(self) -> bool:
        return not self._nums

    def is_one(self) -> bool:
        return self._nums == (1,) and self._den == 1

    def leading(self) -> Fraction:
        if not self._nums:
            return Fraction(0)
        return Fraction(self._nums[-1], self._den)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._nums):
            return Fraction(self._nums[k], self._den)
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._nums == other._nums and self._den == other._den
        if isinstance(other, (int, Rational)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._nums, self._den))

    def __repr__(self) -> str:
        return f"Poly({render_poly(self)!r})"

    def __neg__(self) -> Poly:
        return Poly._from_ints([-x for x in self._nums], self._den)

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._nums, other._nums
        da, db = self._den, other._den
        g = gcd(da, db)
        ma, mb = db // g, da // g
        n = max(len(a), len(b))
        out = [0] * n
        for i, x in enumerate(a):
            out[i] = x * ma
        for i, x in enumerate(b):
            out[i] += x * mb
        return Poly._from_ints(out, da * ma)

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly._from_ints(_conv(self._nums, other._nums), self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.constant(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        # work on integer numerators; a/da = (qn/qd)*(b/db) + rem
        rem = list(self._nums)
        b = other._nums
        db_ = len(b) - 1
        lb = b[-1]
        quo = [Fraction(0)] * max(len(rem) - db_, 0)
        rem_f = None
        while len(rem) - 1 >= db_ and rem:
            shift = len(rem) - 1 - db_
            if rem_f is None and rem[-1] % lb == 0:
                c = rem[-1] // lb
                for i, bi in enumerate(b):
                    rem[i + shift] -= c * bi
                quo[shift] = Fraction(c)
                rem.pop()
                _trim(rem)
                continue
            if rem_f is None:
                rem_f = [Fraction(x) for x in rem]
                rem = rem_f
            c = rem[-1] / lb
            for i, bi in enumerate(b):
                rem[i + shift] -= c * bi
            quo[shift] = c
            rem.pop()
            _trim(rem)
        # quotient of numerators times db/da; remainder over da
        scale = Fraction(other._den, self._den)
        q = Poly([c * scale for c in quo])
        r = Poly([Fraction(x) / self._den for x in rem])
        return q, r

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        lc = self._nums[-1]
        return Poly._from_ints(list(self._nums), lc) if lc > 0 else Poly._from_ints([-x for x in self._nums], -lc)

    def primitive_ints(self) -> list[int]:
        """Integer primitive part with positive leading coefficient."""
        nums = _primitive(self._nums)
        if nums and nums[-1] < 0:
            nums = [-x for x in nums]
        return nums

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._nums):
            acc = acc * x + c
        return acc / self._den

    def eval_mod(self, x: int, modulus: int) -> int:
        """Evaluate at an integer modulo ``modulus``; the common denominator must be invertible."""
        acc = 0
        for c in reversed(self._nums):
            acc = (acc * x + c) % modulus
        return acc * pow(self._den, -1, modulus) % modulus

    def subst_power(self, s: int) -> Poly:
        """Substitute q -> q**s."""
        if s < 1:
            raise ValueError("substitution power must be positive")
        if s == 1 or len(self._nums) <= 1:
            return self
        out = [0] * (s * (len(self._nums) - 1) + 1)
        for i, c in enumerate(self._nums):
            out[s * i] = c
        return Poly._from_ints(out, self._den)

    def render(self, var: str = "q") -> str:
        return render_poly(self, var)


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Rational)):
        return Poly.constant(x)
    return NotImplemented


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q, via a primitive pseudo-remainder sequence over Z."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    x, y = a.primitive_ints(), b.primitive_ints()
    if len(x) < len(y):
        x, y = y, x
    while y:
        if len(y) == 1:
            return Poly.constant(1)
        r = _prem(x, y)
        x, y = y, _primitive(r)
    return Poly._from_ints(list(x)).monic()


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_poly(p: Poly, var: str = "q") -> str:
    """Fully expanded, decreasing degree, explicit ``*`` and ``^``."""
    if p.is_zero():
        return "0"
    parts = []
    coeffs = p.coeffs
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _fmt_coeff(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{_fmt_coeff(mag)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


class RatFun:
    """Canonical quotient of polynomials in q: coprime, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        n, d = normalize(_coerce_poly(num), _coerce_poly(den))._pair()
        self.num, self.den = n, d

    def _pair(self) -> tuple[Poly, Poly]:
        return self.num, self.den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> RatFun:
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def constant(cls, c) -> RatFun:
        return cls._raw(Poly.constant(c), _ONE_POLY)

    @classmethod
    def q(cls) -> RatFun:
        return cls._raw(Poly.monomial(1), _ONE_POLY)

    @classmethod
    def monomial(cls, k: int, c=1) -> RatFun:
        """``c * q**k`` for any integer k; negative k lands in the denominator."""
        if Fraction(c) == 0:
            return cls.constant(0)
        if k >= 0:
            return cls._raw(Poly.monomial(k, c), _ONE_POLY)
        return cls._raw(Poly.constant(c), Poly.monomial(-k))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Rational, Poly)):
            return self == _coerce_ratfun(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFun({self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    def __neg__(self) -> RatFun:
        return RatFun._raw(-self.num, self.den)

    def __add__(self, other) -> RatFun:
        other = _coerce_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        if b.is_one() and d.is_one():
            return RatFun._raw(a + c, _ONE_POLY)
        if b == d:
            return normalize(a + c, b)
        # Henrici: only gcd(num, g) can remain after the cross terms
        g = poly_gcd(b, d)
        if g.is_one():
            return _canon_coprime(a * d + c * b, b * d)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        num = a * d1 + c * b1
        if num.is_zero():
            return RatFun.constant(0)
        g2 = poly_gcd(num, g)
        if not g2.is_one():
            num, g = num.exact_div(g2), g.exact_div(g2)
        return _canon_coprime(num, b1 * d1 * g)

    __radd__ = __add__

    def __sub__(self, other) -> RatFun:
        other = _coerce_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFun:
        return (-self) + other

    def __mul__(self, other) -> RatFun:
        other = _coerce_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RatFun.constant(0)
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not g1.is_one():
            a, d = a.exact_div(g1), d.exact_div(g1)
        if not g2.is_one():
            c, b = c.exact_div(g2), b.exact_div(g2)
        return _canon_coprime(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> RatFun:
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return _canon_coprime(self.den, self.num)

    def __truediv__(self, other) -> RatFun:
        other = _coerce_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("rational function division by zero")
        return self * other.inverse()

    def __rtruediv__(self, other) -> RatFun:
        return _coerce_ratfun(other) / self

    def __pow__(self, k: int) -> RatFun:
        if k < 0:
            return self.inverse() ** (-k)
        # coprime parts stay coprime under powers
        return RatFun._raw(self.num ** k, self.den ** k)

    def __call__(self, q0) -> Fraction:
        return evaluate(self, q0)

    def subst_power(self, s: int) -> RatFun:
        return subst_power(self, s)

    def render(self, var: str = "q") -> str:
        num = render_poly(self.num, var)
        if self.den.is_one():
            return num
        terms = sum(1 for c in self.num.coeffs if c != 0)
        non_int = any(c.denominator != 1 for c in self.num.coeffs)
        if terms > 1 or non_int:
            num = f"({num})"
        return f"{num}/({render_poly(self.den, var)})"


_ONE_POLY = Poly.constant(1)


def _canon_coprime(num: Poly, den: Poly) -> RatFun:
    """Make an already coprime pair canonical (monic denominator)."""
    if den.is_zero():
        raise ZeroDenominatorError("zero denominator")
    if num.is_zero():
        return RatFun.constant(0)
    lc = den.leading()
    if lc != 1:
        inv = 1 / lc
        num, den = num * inv, den * inv
    return RatFun._raw(num, den)


def _coerce_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Rational)):
        return Poly.constant(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


def _coerce_ratfun(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, Poly):
        return RatFun._raw(x, _ONE_POLY)
    if isinstance(x, (int, Rational)):
        return RatFun.constant(x)
    return NotImplemented


def normalize(num: Poly, den: Poly) -> RatFun:
    """Reduce num/den to canonical form."""
    if den.is_zero():
        raise ZeroDenominatorError("zero denominator")
    if num.is_zero():
        return RatFun.constant(0)
    g = poly_gcd(num, den)
    if not g.is_one():
        num, den = num.exact_div(g), den.exact_div(g)
    return _canon_coprime(num, den)


def ratfun_arith(a: RatFun, b: RatFun, op: str) -> RatFun:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def evaluate(f: RatFun, q0) -> Fraction:
    """Exact value of f at a rational point."""
    d = f.den(q0)
    if d == 0:
        raise PoleError(f"pole of {f.render()} at q = {q0}")
    return f.num(q0) / d


def subst_power(f: RatFun, s: int) -> RatFun:
    """Replace q by q**s.  Coprimality survives the substitution, so no gcd is needed."""
    return RatFun._raw(f.num.subst_power(s), f.den.subst_power(s))


class PowerSeries:
    """Formal power series in t truncated below ``order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs)
        if order < 0:
            raise ValueError("negative truncation order")
        coeffs = (coeffs + [Fraction(0)] * order)[:order]
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls([1], order)

    @classmethod
    def exp(cls, c, order: int) -> PowerSeries:
        """Truncation of exp(c t)."""
        c = Fraction(c)
        out, term = [], Fraction(1)
        for k in range(order):
            out.append(term)
            term = term * c / (k + 1)
        return cls(out, order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        return series_mul(self, other)

    def inverse(self) -> PowerSeries:
        return series_invert(self)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} vs {b.order}")
    n = a.order
    out = [Fraction(0)] * n
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j in range(n - i):
                out[i + j] += ai * b.coeffs[j]
    return PowerSeries(out, n)


def series_invert(a: PowerSeries) -> PowerSeries:
    if a.order == 0:
        return a
    a0 = a.coeffs[0]
    if a0 == 0:
        raise NonUnitError("constant term is zero")
    n = a.order
    inv = [Fraction(0)] * n
    inv[0] = 1 / a0
    for k in range(1, n):
        s = sum(a.coeffs[i] * inv[k - i] for i in range(1, k + 1))
        inv[k] = -s / a0
    return PowerSeries(inv, n)
