"""Dirichlet characters modulo d and the character-twisted q-Bernoulli numbers.

A character of order e stores, for every residue a in [0, d), either
``None`` (a not a unit) or an exponent k meaning chi(a) = zeta_e^k.

Enumeration decomposes (Z/d)^* into cyclic factors by CRT: one primitive
root per odd prime power, -1 for 4, and {-1, 5} for 2^k with k >= 3.
The output order is lexicographic in the exponent tuple over those
generators, so ``chi_{d}_0`` is always the principal character.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Mapping, Optional, Sequence

from .cyclo import CycloElem
from .exactalg import RatFun
from .qbern import BetaParams, beta, check_nonsingular, q_int

__all__ = [
    "CharacterError",
    "DirichletCharacter",
    "validate",
    "enumerate_characters",
    "character_by_name",
    "beta_chi",
    "factorize",
    "primitive_root",
]


class CharacterError(ValueError):
    """A value table fails one of the character invariants."""


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    order: int
    values: tuple[Optional[int], ...]
    index: Optional[int] = None

    def __call__(self, a: int) -> Optional[int]:
        """Exponent of chi(a) in zeta_order, or None when chi(a) = 0."""
        return self.values[a % self.modulus]

    @property
    def name(self) -> str:
        return f"chi_{self.modulus}_{self.index}" if self.index is not None else f"chi_{self.modulus}"

    def is_principal(self) -> bool:
        return self.order == 1

    def value(self, a: int) -> CycloElem:
        k = self(a)
        if k is None:
            return CycloElem.constant(0, self.order)
        return CycloElem.zeta(self.order, k)

    def to_json(self) -> str:
        return json.dumps({str(a): v for a, v in enumerate(self.values)})


def validate(modulus: int, order: int, values: Mapping[int, Optional[int]] | Sequence) -> DirichletCharacter:
    """Check a value table and return the character it describes."""
    d, e = modulus, order
    if d < 1:
        raise CharacterError("modulus must be positive")
    if e < 1:
        raise CharacterError("order must be positive")
    if not isinstance(values, Mapping):
        values = dict(enumerate(values))
    if set(values) != set(range(d)):
        raise CharacterError(f"table must cover exactly the residues 0..{d - 1}")
    table = tuple(values[a] for a in range(d))
    for a, v in enumerate(table):
        unit = gcd(a, d) == 1
        if unit and v is None:
            raise CharacterError(f"zero-set violation at a={a}: unit mapped to zero")
        if not unit and v is not None:
            raise CharacterError(f"zero-set violation at a={a}: non-unit has a nonzero value")
        if v is not None and not 0 <= v < e:
            raise CharacterError(f"exponent {v} at a={a} outside [0, {e})")
    if table[1 % d] != 0:
        raise CharacterError("chi(1) != 1")
    units = [a for a in range(d) if table[a] is not None]
    for a in units:
        for b in units:
            if (table[a] + table[b] - table[a * b % d]) % e:
                raise CharacterError(f"not multiplicative at pair ({a}, {b})")
    g = e
    for a in units:
        g = gcd(g, table[a])
    if g != 1:
        raise CharacterError(f"values lie in a subgroup of order {e // g}; declared order {e} is not exact")
    return DirichletCharacter(d, e, table)


def factorize(n: int) -> list[tuple[int, int]]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def primitive_root(p: int) -> int:
    """Smallest primitive root modulo an odd prime p."""
    phi = p - 1
    qs = [f for f, _ in factorize(phi)]
    for g in range(2, p):
        if all(pow(g, phi // f, p) != 1 for f in qs):
            return g
    if p == 2:
        return 1
    raise ValueError(f"{p} is not prime")


def _local_generators(p: int, k: int) -> list[tuple[int, int]]:
    """Cyclic generators (g, order) of (Z/p^k)^*."""
    pk = p ** k
    if p == 2:
        if k == 1:
            return []
        if k == 2:
            return [(3, 2)]
        return [(pk - 1, 2), (5, 2 ** (k - 2))]
    g = primitive_root(p)
    if k > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return [(g, (p - 1) * p ** (k - 1))]


def unit_group_generators(d: int) -> list[tuple[int, int]]:
    """Generators of (Z/d)^* lifted by CRT, with their orders."""
    gens = []
    for p, k in factorize(d):
        pk = p ** k
        rest = d // pk
        for g, n in _local_generators(p, k):
            # x = g mod p^k, x = 1 mod rest
            x = g if rest == 1 else (g * rest * pow(rest, -1, pk) + pk * pow(pk, -1, rest)) % d
            gens.append((x, n))
    return gens


def enumerate_characters(d: int) -> list[DirichletCharacter]:
    """All phi(d) characters mod d in deterministic order."""
    if d < 1:
        raise ValueError("modulus must be positive")
    gens = unit_group_generators(d)
    orders = [n for _, n in gens]
    # discrete logs of every unit with respect to the generators
    logs: dict[int, tuple[int, ...]] = {}
    for exps in product(*(range(n) for n in orders)):
        a = 1 % d
        for (g, _), k in zip(gens, exps):
            a = a * pow(g, k, d) % d
        logs[a] = exps
    out = []
    for index, cs in enumerate(product(*(range(n) for n in orders))):
        e = 1
        for c, n in zip(cs, orders):
            part = n // gcd(c, n)
            e = e * part // gcd(e, part)
        table: list[Optional[int]] = [None] * d
        for a, exps in logs.items():
            table[a] = sum(c * x * e // n for c, x, n in zip(cs, exps, orders)) % e
        chi = validate(d, e, table)
        out.append(DirichletCharacter(chi.modulus, chi.order, chi.values, index))
    return out


def character_by_name(name: str) -> DirichletCharacter:
    """Look up ``chi_{d}_{index}``."""
    try:
        _, d, idx = name.split("_")
        d, idx = int(d), int(idx)
        return enumerate_characters(d)[idx]
    except (ValueError, IndexError) as exc:
        raise CharacterError(f"unknown character name {name!r}") from exc


def beta_chi(m: int, h: int, alphas: Sequence[int], chi: DirichletCharacter) -> CycloElem:
    """Character-twisted number as a finite sum over residues mod d.

    [d]^{m-r} sum_i q^{sum_k (h-k+1) i_k} prod_k chi(i_k) beta_m((a.i)/d, q^d | a)
    """
    alphas = tuple(alphas)
    r = len(alphas)
    if r < 1:
        raise ValueError("need at least one alpha")
    check_nonsingular(m, h, alphas)
    d, e = chi.modulus, chi.order
    total = CycloElem.constant(0, e)
    for idx in product(range(d), repeat=r):
        exps = [chi(i) for i in idx]
        if any(k is None for k in exps):
            continue
        expo = sum((h - k + 1) * i for k, i in enumerate(idx, start=1))
        shift = Fraction(sum(a * i for a, i in zip(alphas, idx)), d)
        coeff = RatFun.monomial(expo) * beta(BetaParams(m, h, alphas, shift, d))
        total = total + CycloElem.zeta(e, sum(exps)) * coeff
    return total * q_int(d) ** (m - r)
