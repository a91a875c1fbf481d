#!/usr/bin/env python3
"""Residual valuations of the Riemann sums against the closed form, per level.

Prints one row per parameter tuple with v_3(S_N - beta(q0)) for N = 1..N_max,
flags whether the sequence is strictly increasing, and whether v_N >= N.
"""

import argparse
from itertools import product

from qbernoulli.padic import OracleJob, oracle_compare
from qbernoulli.qbern import BetaParams, SingularFactorError, beta


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--N-max", dest="N_max", type=int, default=4)
    ap.add_argument("--n-max", dest="n_max", type=int, default=2)
    ap.add_argument("--r-max", dest="r_max", type=int, default=2)
    args = ap.parse_args()

    n_mono = n_bound = total = 0
    print(f"{'n':>2} {'h':>2} {'alphas':8s} {'w':>2}  valuations          increasing  v_N>=N")
    for r in range(1, args.r_max + 1):
        for alphas in product((1, 2), repeat=r):
            for n in range(args.n_max + 1):
                for h in (r, r + 1):
                    for w in (0, 1):
                        try:
                            bp = BetaParams(n, h, alphas, w)
                        except SingularFactorError:
                            continue
                        jobs = [OracleJob(args.p, N, bp) for N in range(1, args.N_max + 1)]
                        vals = oracle_compare(beta(bp), jobs).valuations()
                        xs = [float("inf") if v is None else v for v in vals]
                        mono = all(a < b or a == b == float("inf") for a, b in zip(xs, xs[1:]))
                        bound = all(x >= N for N, x in enumerate(xs, start=1))
                        total += 1
                        n_mono += mono
                        n_bound += bound
                        print(f"{n:>2} {h:>2} {str(alphas):8s} {w:>2}  {str(vals):20s} {str(mono):11s} {bound}")
    print(f"\nstrictly increasing: {n_mono}/{total}   lower bound v_N >= N: {n_bound}/{total}")


if __name__ == "__main__":
    main()
