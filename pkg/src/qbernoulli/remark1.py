"""Reconciliation of the printed low-order values against the closed form.

Each entry pairs a value as printed in the source table with the value
computed from the closed form, and classifies the pair as ``exact``,
``sign-flip`` or ``mismatch``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .exactalg import RatFun
from .qbern import BetaParams, beta, q_int

__all__ = ["Remark1Entry", "remark1_table", "classify", "REQUIRED_EXACT", "REQUIRED_UP_TO_SIGN"]


def classify(printed: RatFun, computed: RatFun) -> str:
    if printed == computed:
        return "exact"
    if printed == -computed:
        return "sign-flip"
    return "mismatch"


@dataclass(frozen=True)
class Remark1Entry:
    label: str
    n: int
    h: int
    alphas: tuple[int, ...]
    printed: RatFun
    computed: RatFun

    @property
    def verdict(self) -> str:
        return classify(self.printed, self.computed)

    def as_row(self) -> dict:
        return {
            "entry": self.label,
            "paper_value": self.printed.render(),
            "computed_value": self.computed.render(),
            "verdict": self.verdict,
        }


def _qi(k: int) -> RatFun:
    return q_int(k)


def _printed_values() -> list[tuple[str, int, int, tuple[int, ...], RatFun]]:
    q = RatFun.q()
    rows = [
        ("beta_0^(2,1)", 0, 2, (1,), RatFun.constant(2) / _qi(2)),
        ("beta_1^(2,1)", 1, 2, (1,), (2 * q + 1) / (_qi(2) * _qi(3))),
        ("beta_2^(2,1)", 2, 2, (1,), 2 * q ** 2 / (_qi(3) * _qi(4))),
        (
            "beta_3^(2,1)", 3, 2, (1,),
            -(q ** 2) * (q - 1) * (2 * _qi(3) + q) / (_qi(3) * _qi(4) * _qi(5)),
        ),
    ]
    for h in range(1, 7):
        rows.append((f"beta_0^(h,1)[h={h}]", 0, h, (1,), RatFun.constant(h) / _qi(h)))
    for h in range(1, 7):
        # [h] + q[h-1] + ... + q^{h-1}[1]
        num = sum((q ** k * _qi(h - k) for k in range(h)), RatFun.constant(0))
        rows.append((f"beta_1^(h,1)[h={h}]", 1, h, (1,), -num / (_qi(h) * _qi(h + 1))))
    rows += [
        ("beta_0^(2,2)", 0, 2, (1, 1), RatFun.constant(2) / (_qi(2) * _qi(1))),
        ("beta_1^(2,2)", 1, 2, (1, 1), -2 * (q + 2) / (_qi(2) * _qi(3))),
        ("beta_2^(2,2)", 2, 2, (1, 1), -2 * ((q - 1) ** 2 + 5 * q) / (_qi(3) * _qi(4))),
    ]
    for r in range(1, 5):
        den = RatFun.constant(1)
        for k in range(1, r + 1):
            den = den * _qi(k)
        rows.append((f"beta_0^(r,r)[r={r}]", 0, r, (1,) * r, -RatFun.constant(factorial(r)) / den))
    return rows


# entries whose printed value must agree exactly / at least up to sign
REQUIRED_EXACT = frozenset(
    ["beta_0^(2,1)", "beta_0^(2,2)"] + [f"beta_0^(h,1)[h={h}]" for h in range(1, 7)]
)
REQUIRED_UP_TO_SIGN = frozenset(["beta_1^(2,1)"] + [f"beta_0^(r,r)[r={r}]" for r in range(1, 5)])


def remark1_table() -> list[Remark1Entry]:
    out = []
    for label, n, h, alphas, printed in _printed_values():
        computed = beta(BetaParams(n, h, alphas))
        out.append(Remark1Entry(label, n, h, alphas, printed, computed))
    return out
