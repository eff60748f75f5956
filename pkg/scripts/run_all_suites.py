"""Run every property suite at ranks 1..3 and print a timing table.

Usage: python3 scripts/run_all_suites.py [--samples N] [--seed S]
"""
import argparse
import time

from wittbialg.scalars import AlgebraConfig
from wittbialg.suites import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--ranks", type=int, nargs="+", default=[1, 2, 3])
    args = ap.parse_args()

    bad = 0
    print(f"{'suite':<22}{'rank':>5}{'samples':>9}{'fail':>6}{'secs':>8}")
    for name in SUITES:
        for n in args.ranks:
            t0 = time.perf_counter()
            res = run_suite(name, AlgebraConfig(n, seed=args.seed), args.samples)
            dt = time.perf_counter() - t0
            bad += len(res.failures)
            print(f"{name:<22}{n:>5}{res.samples:>9}{len(res.failures):>6}{dt:>8.2f}")
    print("all passed" if not bad else f"{bad} failures")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
