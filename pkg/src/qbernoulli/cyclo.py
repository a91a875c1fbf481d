"""The cyclotomic extension Q(q)[z] / Phi_e(z).

Elements are coefficient vectors in the power basis 1, z, ..., z^{phi(e)-1}
with canonical :class:`RatFun` entries.  Mixing orders is an error; no
implicit embedding into a compositum is attempted.
"""

from __future__ import annotations

from typing import Iterable

from .exactalg import Poly, RatFun

__all__ = [
    "NotRationalError",
    "cyclotomic_poly",
    "euler_phi",
    "CycloElem",
    "cyclo_arith",
    "cyclo_as_ratfun",
]


class NotRationalError(ValueError):
    """Raised when downcasting an element with a nonzero z^k part, k >= 1."""


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def cyclotomic_poly(e: int) -> Poly:
    """Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d, by exact division."""
    if e < 1:
        raise ValueError("order must be positive")
    poly = Poly([-1] + [0] * (e - 1) + [1])
    for d in range(1, e):
        if e % d == 0:
            poly = poly.exact_div(cyclotomic_poly(d))
    return poly


class CycloElem:
    __slots__ = ("order", "coeffs", "_phi")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 1:
            raise ValueError("order must be positive")
        phi = cyclotomic_poly(order)
        self.order = order
        self._phi = phi
        self.coeffs = _reduce([_as_ratfun(c) for c in coeffs], phi)

    @classmethod
    def _raw(cls, order: int, coeffs: tuple, phi: Poly) -> CycloElem:
        obj = cls.__new__(cls)
        obj.order, obj.coeffs, obj._phi = order, coeffs, phi
        return obj

    @classmethod
    def constant(cls, f, order: int) -> CycloElem:
        return cls(order, [f])

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> CycloElem:
        """z^k, reduced; k is taken mod the order."""
        k %= order
        return cls(order, [0] * k + [1])

    @property
    def degree(self) -> int:
        return self._phi.degree

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def _check(self, other: CycloElem) -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other) -> CycloElem:
        other = self._lift(other)
        self._check(other)
        return CycloElem._raw(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self._phi
        )

    __radd__ = __add__

    def __neg__(self) -> CycloElem:
        return CycloElem._raw(self.order, tuple(-c for c in self.coeffs), self._phi)

    def __sub__(self, other) -> CycloElem:
        return self + (-self._lift(other))

    def __mul__(self, other) -> CycloElem:
        if isinstance(other, (RatFun, int)) or hasattr(other, "denominator"):
            f = _as_ratfun(other)
            return CycloElem._raw(self.order, tuple(c * f for c in self.coeffs), self._phi)
        self._check(other)
        n = len(self.coeffs)
        out = [RatFun.constant(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return CycloElem._raw(self.order, _reduce(out, self._phi), self._phi)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycloElem:
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = CycloElem.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def _lift(self, other) -> CycloElem:
        if isinstance(other, CycloElem):
            return other
        return CycloElem.constant(other, self.order)

    def render(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            mono = "" if k == 0 else ("*z" if k == 1 else f"*z^{k}")
            parts.append(f"({c.render()}){mono}")
        return " + ".join(parts) + f" mod Phi_{self.order}(z)"

    def __repr__(self) -> str:
        return f"CycloElem({self.render()!r})"


def _as_ratfun(c) -> RatFun:
    return c if isinstance(c, RatFun) else RatFun(c)


def _reduce(coeffs: list, phi: Poly) -> tuple:
    deg = phi.degree
    ints = [int(c) for c in phi.coeffs]  # Phi_e is monic with integer coefficients
    coeffs = list(coeffs) + [RatFun.constant(0)] * max(0, deg - len(coeffs))
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c.is_zero():
            continue
        base = k - deg
        for i in range(deg):
            if ints[i]:
                coeffs[base + i] = coeffs[base + i] - c * ints[i]
        coeffs[k] = RatFun.constant(0)
    return tuple(coeffs[:deg])


def cyclo_arith(a: CycloElem, b: CycloElem, op: str) -> CycloElem:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def cyclo_as_ratfun(a: CycloElem) -> RatFun:
    if any(not c.is_zero() for c in a.coeffs[1:]):
        raise NotRationalError(f"element has irrational part: {a.render()}")
    return a.coeffs[0]
