"""Command-line interface.

Exit status: 0 when no check failed, 1 on any failure, 2 on usage or
configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .barnes import barnes_poly
from .characters import CharacterError, beta_chi, character_by_name
from .padic import OracleJob, oracle_compare
from .qbern import BetaParams, SingularFactorError, beta, moment
from .remark1 import remark1_table
from .verify import IDENTITIES, ConfigError, SweepConfig, run_sweep


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _frac_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}")


SWEEP_FLAGS = {
    # flag: (dest, type)
    "--n-max": ("n_max", int),
    "--m-max": ("m_max", int),
    "--r-max": ("r_max", int),
    "--h-set": ("h_set", _int_list),
    "--h-offset": ("h_offset", _int_list),
    "--alpha-set": ("alpha_set", _int_list),
    "--w-set": ("w_set", _int_list),
    "--d-set": ("d_set", _int_list),
    "--p": ("p", int),
    "--N-max": ("N_max", int),
    "--q0": ("q0", int),
    "--output": ("output", str),
    "--format": ("format", str),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbernoulli",
        description="Exact multiple q-Bernoulli numbers, Barnes polynomials and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("beta", help="closed form of beta_n^{(h,r)}(w, q^s | alphas)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--alphas", type=_int_list, required=True)
    p.add_argument("--w", type=_frac, default=Fraction(0))
    p.add_argument("--s", type=int, default=1)

    p = sub.add_parser("moment", help="integral of [x]^m against mu_q")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("barnes", help="Barnes multiple Bernoulli polynomial B_n^{(r)}(x|w)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", type=_frac_list, required=True)
    p.add_argument("--x", type=_frac, default=Fraction(0))

    p = sub.add_parser("chi-beta", help="character-twisted number for chi_{d}_{index}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--alphas", type=_int_list, required=True)
    p.add_argument("--chi", required=True, help="character name, e.g. chi_3_1")

    p = sub.add_parser("verify", help="run an identity sweep and write a report")
    p.add_argument("identity", choices=IDENTITIES)
    p.add_argument("--config", help="JSON file with sweep settings; flags override it")
    for flag, (dest, typ) in SWEEP_FLAGS.items():
        p.add_argument(flag, dest=dest, type=typ, default=None)

    p = sub.add_parser("oracle", help="p-adic Riemann sums against one closed form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--alphas", type=_int_list, required=True)
    p.add_argument("--w", type=int, default=0)
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--q0", type=int, default=None)
    p.add_argument("--N-max", dest="N_max", type=int, default=4)
    p.add_argument("--chi", default=None, help="character name; twists the integrand (w must be 0)")
    p.add_argument("--output", default=None)

    p = sub.add_parser("report-remark1", help="printed-vs-computed table for the low-order values")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", default=None)
    return parser


def _sweep_config(args) -> SweepConfig:
    data: dict = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc.strerror}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {args.config} is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a JSON object")
        data.pop("identity", None)
    for dest, _ in SWEEP_FLAGS.values():
        value = getattr(args, dest)
        if value is not None:
            data[dest] = value
    return SweepConfig.from_mapping(args.identity, data)


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _remark1_text(fmt: str) -> str:
    rows = [e.as_row() for e in remark1_table()]
    if fmt == "json":
        return json.dumps(rows, indent=2)
    if fmt == "csv":
        import csv
        import io

        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    width = max(len(r["entry"]) for r in rows)
    lines = [f"{'entry':<{width}}  {'verdict':<9}  paper_value  |  computed_value"]
    for r in rows:
        lines.append(f"{r['entry']:<{width}}  {r['verdict']:<9}  {r['paper_value']}  |  {r['computed_value']}")
    return "\n".join(lines)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "beta":
            print(beta(BetaParams(args.n, args.h, args.alphas, args.w, args.s)).render())
        elif args.command == "moment":
            if args.m < 0:
                raise UsageError("--m must be non-negative")
            print(moment(args.m).render())
        elif args.command == "barnes":
            print(barnes_poly(args.n, args.weights, args.x))
        elif args.command == "chi-beta":
            chi = character_by_name(args.chi)
            print(beta_chi(args.m, args.h, args.alphas, chi).render())
        elif args.command == "verify":
            cfg = _sweep_config(args)
            report = run_sweep(cfg)
            text = report.emit(cfg.format, cfg.output)
            if not cfg.output:
                print(text)
            s = report.summary
            print(
                f"{cfg.identity}: {s['pass']} pass, {s['fail']} fail, "
                f"{s['skipped-singular']} skipped-singular", file=sys.stderr,
            )
            return report.exit_code
        elif args.command == "oracle":
            chi = character_by_name(args.chi) if args.chi else None
            bp = BetaParams(args.n, args.h, args.alphas, args.w)
            if chi is not None:
                if args.w:
                    raise UsageError("--w must be 0 when --chi is given")
                closed = beta_chi(args.n, args.h, args.alphas, chi)
                d = chi.modulus
            else:
                closed, d = beta(bp), 1
            jobs = [OracleJob(args.p, N, bp, q0=args.q0, d=d, chi=chi) for N in range(1, args.N_max + 1)]
            report = oracle_compare(closed, jobs)
            out = json.dumps({"rows": [r.to_json() for r in report.rows], "pass": report.passed}, indent=2)
            _write(out, args.output)
            return 0 if report.passed else 1
        elif args.command == "report-remark1":
            _write(_remark1_text(args.format), args.output)
    except SingularFactorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, CharacterError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
