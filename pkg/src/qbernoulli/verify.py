"""Identity-verification sweeps and their reports.

Each identity enumerates parameter tuples in a fixed order and produces one
record per tuple.  Records carry a ``role``: ``check`` records decide the
exit status, ``info`` records (e.g. the as-printed h-recurrence, the
non-required low-order table entries) are tallied separately.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field, fields
from datetime import datetime, timezone
from itertools import product
from typing import Callable, Iterator, Optional

from .barnes import barnes_poly
from .characters import beta_chi, enumerate_characters
from .cyclo import cyclo_as_ratfun
from .padic import OracleJob, oracle_compare
from .qbern import (
    BetaParams,
    SingularFactorError,
    beta,
    beta_w_expansion,
    limit_q1,
    theorem2_rhs,
    theorem3_lhs,
    theorem3_rhs,
    verify_h_recurrence,
)
from .remark1 import REQUIRED_EXACT, REQUIRED_UP_TO_SIGN, remark1_table

__all__ = [
    "IDENTITIES",
    "ConfigError",
    "SweepConfig",
    "Record",
    "Report",
    "run_sweep",
    "CSV_COLUMNS",
]

IDENTITIES = (
    "thm1_vs_oracle",
    "thm2",
    "thm3",
    "thm4",
    "w_expansion",
    "h_recurrence",
    "remark1",
    "remark3_limit",
)

CSV_COLUMNS = ("identity", "role", "status", "params", "lhs", "rhs", "residual")

PASS, FAIL, SKIPPED = "pass", "fail", "skipped-singular"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    identity: str
    n_max: int = 3
    m_max: int = 2
    r_max: int = 2
    h_set: Optional[tuple[int, ...]] = None
    h_offset: tuple[int, ...] = (0, 1)
    alpha_set: tuple[int, ...] = (1, 2)
    w_set: tuple[int, ...] = (0, 1)
    d_set: tuple[int, ...] = (1, 2, 3)
    p: int = 3
    N_max: int = 4
    q0: Optional[int] = None
    output: Optional[str] = None
    format: str = "json"

    def __post_init__(self):
        if self.identity not in IDENTITIES:
            raise ConfigError(f"unknown identity {self.identity!r}; choose from {', '.join(IDENTITIES)}")
        for name in ("alpha_set", "w_set", "d_set", "h_offset"):
            if not getattr(self, name):
                raise ConfigError(f"--{name.replace('_', '-')} must be non-empty")
        if self.h_set is not None and not self.h_set:
            raise ConfigError("--h-set must be non-empty")
        for name in ("n_max", "m_max", "N_max"):
            if getattr(self, name) < 0:
                raise ConfigError(f"--{name.replace('_', '-')} must be non-negative")
        if self.r_max < 1:
            raise ConfigError("--r-max must be at least 1")
        if any(d < 1 for d in self.d_set):
            raise ConfigError("--d-set entries must be positive")
        if any(a == 0 for a in self.alpha_set):
            raise ConfigError("--alpha-set entries must be nonzero")
        if self.format not in ("json", "csv"):
            raise ConfigError("--format must be json or csv")

    @classmethod
    def from_mapping(cls, identity: str, data: dict) -> SweepConfig:
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        kwargs = {}
        for key, value in data.items():
            if key in ("h_set", "h_offset", "alpha_set", "w_set", "d_set") and value is not None:
                value = tuple(int(v) for v in value)
            kwargs[key] = value
        kwargs["identity"] = identity
        return cls(**kwargs)

    def hs(self, r: int) -> tuple[int, ...]:
        if self.h_set is not None:
            return self.h_set
        return tuple(r + k for k in self.h_offset)

    def alpha_tuples(self) -> Iterator[tuple[int, ...]]:
        for r in range(1, self.r_max + 1):
            yield from product(self.alpha_set, repeat=r)


@dataclass(frozen=True)
class Record:
    identity: str
    params: dict
    status: str
    lhs: str = ""
    rhs: str = ""
    residual: str = ""
    role: str = "check"

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "role": self.role,
            "params": self.params,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
        }


@dataclass
class Report:
    records: list[Record] = field(default_factory=list)
    config: Optional[dict] = None

    @property
    def summary(self) -> dict:
        out = {"total": 0, PASS: 0, FAIL: 0, SKIPPED: 0, "info_pass": 0, "info_fail": 0, "info_skipped": 0}
        for rec in self.records:
            if rec.role == "info":
                out[{PASS: "info_pass", FAIL: "info_fail", SKIPPED: "info_skipped"}[rec.status]] += 1
                continue
            out["total"] += 1
            out[rec.status] += 1
        return out

    @property
    def exit_code(self) -> int:
        return 1 if self.summary[FAIL] else 0

    def to_json(self, timestamp: bool = True) -> str:
        payload = {
            "config": self.config,
            "records": [r.to_json() for r in self.records],
            "summary": self.summary,
        }
        if timestamp:
            payload["generated_at"] = datetime.now(timezone.utc).isoformat()
        return json.dumps(payload, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rec in self.records:
            writer.writerow([
                rec.identity, rec.role, rec.status,
                json.dumps(rec.params, sort_keys=True), rec.lhs, rec.rhs, rec.residual,
            ])
        return buf.getvalue()

    def emit(self, fmt: str = "json", path: Optional[str] = None) -> str:
        text = self.to_json() if fmt == "json" else self.to_csv()
        if path:
            try:
                with open(path, "w", encoding="utf-8") as fh:
                    fh.write(text if text.endswith("\n") else text + "\n")
            except OSError as exc:
                raise OSError(f"cannot write report to {path}: {exc.strerror}") from exc
        return text


def _equality_record(identity: str, params: dict, compute: Callable) -> Record:
    try:
        lhs, rhs = compute()
    except SingularFactorError as exc:
        return Record(identity, params, SKIPPED, residual=str(exc))
    diff = lhs - rhs
    status = PASS if diff == 0 else FAIL
    render = lambda x: x.render() if hasattr(x, "render") else str(x)
    return Record(identity, params, status, render(lhs), render(rhs), render(diff))


def _thm1_vs_oracle(cfg: SweepConfig) -> Iterator[Record]:
    # total-mass anchor first: n = 0, h = 1 must be exactly 1 at every level
    cases = [(0, 1, (1,), 0)]
    for alphas in cfg.alpha_tuples():
        r = len(alphas)
        for n in range(cfg.n_max + 1):
            for h in cfg.hs(r):
                for w in cfg.w_set:
                    cases.append((n, h, alphas, w))
    for n, h, alphas, w in cases:
        params = {"n": n, "h": h, "alphas": list(alphas), "w": w, "p": cfg.p, "N_max": cfg.N_max}
        try:
            bp = BetaParams(n, h, alphas, w)
        except SingularFactorError as exc:
            yield Record("thm1_vs_oracle", params, SKIPPED, residual=str(exc))
            continue
        closed = beta(bp)
        jobs = [OracleJob(cfg.p, N, bp, q0=cfg.q0) for N in range(1, cfg.N_max + 1)]
        report = oracle_compare(closed, jobs)
        yield Record(
            "thm1_vs_oracle", params, PASS if report.passed else FAIL,
            closed.render(), "riemann sums N=1..%d" % cfg.N_max,
            json.dumps(report.valuations()),
        )


def _oracle_prime(p: int, d: int, e: int) -> int:
    """p itself if usable for a character mod d of order e, else the next usable prime."""
    cand = max(p, 3)
    while True:
        is_prime = all(cand % f for f in range(2, int(cand ** 0.5) + 1))
        if is_prime and (cand - 1) % e == 0 and d % cand:
            return cand
        cand += 1


def _thm4(cfg: SweepConfig) -> Iterator[Record]:
    hs_default = cfg.h_set
    for d in cfg.d_set:
        for chi in enumerate_characters(d):
            for alphas in cfg.alpha_tuples():
                r = len(alphas)
                for h in (hs_default if hs_default is not None else cfg.hs(r)):
                    for m in range(cfg.m_max + 1):
                        params = {"chi": chi.name, "m": m, "h": h, "alphas": list(alphas)}
                        try:
                            closed = beta_chi(m, h, alphas, chi)
                        except SingularFactorError as exc:
                            yield Record("thm4", params, SKIPPED, residual=str(exc))
                            continue
                        if d == 1:
                            params["mode"] = "exact"
                            yield _equality_record(
                                "thm4", params,
                                lambda: (cyclo_as_ratfun(closed), beta(BetaParams(m, h, alphas))),
                            )
                            continue
                        p = _oracle_prime(cfg.p, d, chi.order)
                        params.update(mode="oracle", p=p, N_max=cfg.N_max)
                        bp = BetaParams(m, h, alphas)
                        jobs = [OracleJob(p, N, bp, q0=None, d=d, chi=chi) for N in range(1, cfg.N_max + 1)]
                        report = oracle_compare(closed, jobs)
                        yield Record(
                            "thm4", params, PASS if report.passed else FAIL,
                            closed.render(), "character-weighted riemann sums N=1..%d" % cfg.N_max,
                            json.dumps(report.valuations()),
                        )


def _thm2(cfg: SweepConfig) -> Iterator[Record]:
    for alphas in cfg.alpha_tuples():
        r = len(alphas)
        for n in range(cfg.n_max + 1):
            for h in cfg.hs(r):
                for w in cfg.w_set:
                    for d in cfg.d_set:
                        params = {"n": n, "h": h, "alphas": list(alphas), "w": w, "d": d}

                        def compute(n=n, h=h, alphas=alphas, w=w, d=d):
                            bp = BetaParams(n, h, alphas, w)
                            return beta(bp), theorem2_rhs(bp, d)

                        yield _equality_record("thm2", params, compute)


def _thm3(cfg: SweepConfig) -> Iterator[Record]:
    for alphas in cfg.alpha_tuples():
        r = len(alphas)
        for m in range(cfg.m_max + 1):
            for h in cfg.hs(r):
                params = {"m": m, "h": h, "alphas": list(alphas)}
                yield _equality_record(
                    "thm3", params,
                    lambda m=m, h=h, a=alphas: (theorem3_lhs(m, h, a), theorem3_rhs(m, h, a)),
                )


def _w_expansion(cfg: SweepConfig) -> Iterator[Record]:
    for alphas in cfg.alpha_tuples():
        r = len(alphas)
        for n in range(cfg.n_max + 1):
            for h in cfg.hs(r):
                for w in cfg.w_set:
                    params = {"n": n, "h": h, "alphas": list(alphas), "w": w}
                    yield _equality_record(
                        "w_expansion", params,
                        lambda n=n, h=h, a=alphas, w=w: (
                            beta(BetaParams(n, h, a, w)), beta_w_expansion(n, h, a, w)
                        ),
                    )


def _h_recurrence(cfg: SweepConfig) -> Iterator[Record]:
    hs = cfg.h_set if cfg.h_set is not None else (2, 3, 4)
    for r in range(1, cfg.r_max + 1):
        for m in range(cfg.n_max + 1):
            for h in hs:
                base = {"m": m, "h": h, "r": r}
                try:
                    rep = verify_h_recurrence(m, h, r)
                except SingularFactorError as exc:
                    yield Record("h_recurrence", {**base, "variant": "derived"}, SKIPPED, residual=str(exc))
                    yield Record(
                        "h_recurrence", {**base, "variant": "as-printed"}, SKIPPED,
                        residual=str(exc), role="info",
                    )
                    continue
                yield Record(
                    "h_recurrence", {**base, "variant": "derived"},
                    PASS if rep.derived_holds else FAIL,
                    rep.lhs.render(), rep.derived_rhs.render(), rep.derived_residual.render(),
                )
                yield Record(
                    "h_recurrence", {**base, "variant": "as-printed"},
                    PASS if rep.printed_holds else FAIL,
                    rep.lhs.render(), rep.printed_rhs.render(), rep.printed_residual.render(),
                    role="info",
                )


def _remark1(cfg: SweepConfig) -> Iterator[Record]:
    for entry in remark1_table():
        verdict = entry.verdict
        params = {"entry": entry.label, "n": entry.n, "h": entry.h,
                  "alphas": list(entry.alphas), "verdict": verdict}
        if entry.label in REQUIRED_EXACT:
            role, ok = "check", verdict == "exact"
        elif entry.label in REQUIRED_UP_TO_SIGN:
            role, ok = "check", verdict in ("exact", "sign-flip")
        else:
            role, ok = "info", verdict == "exact"
        yield Record(
            "remark1", params, PASS if ok else FAIL,
            entry.printed.render(), entry.computed.render(),
            (entry.printed - entry.computed).render(), role=role,
        )


def _remark3_limit(cfg: SweepConfig) -> Iterator[Record]:
    for alphas in cfg.alpha_tuples():
        r = len(alphas)
        for n in range(cfg.n_max + 1):
            for w in cfg.w_set:
                target = barnes_poly(n, alphas, w)
                for h in cfg.hs(r):
                    params = {"n": n, "h": h, "alphas": list(alphas), "w": w}
                    yield _equality_record(
                        "remark3_limit", params,
                        lambda n=n, h=h, a=alphas, w=w, t=target: (limit_q1(beta(BetaParams(n, h, a, w))), t),
                    )


_RUNNERS = {
    "thm1_vs_oracle": _thm1_vs_oracle,
    "thm2": _thm2,
    "thm3": _thm3,
    "thm4": _thm4,
    "w_expansion": _w_expansion,
    "h_recurrence": _h_recurrence,
    "remark1": _remark1,
    "remark3_limit": _remark3_limit,
}


def run_sweep(cfg: SweepConfig) -> Report:
    cfg_dict = {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(cfg).items()
                if k not in ("output", "format")}
    return Report(list(_RUNNERS[cfg.identity](cfg)), cfg_dict)
