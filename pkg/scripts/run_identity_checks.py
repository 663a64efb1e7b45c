#!/usr/bin/env python3
"""Run the whole identity-check catalog and print a summary table.

Usage: python scripts/run_identity_checks.py [--trials N] [--seed S]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from seqcalc import run_all  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=500)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--min-len", type=int, default=2)
    parser.add_argument("--max-len", type=int, default=12)
    args = parser.parse_args()

    started = time.perf_counter()
    reports = run_all(args.trials, args.seed, args.min_len, args.max_len)
    elapsed = time.perf_counter() - started

    width = max(len(r.name) for r in reports)
    print(f"{'check':<{width}}  {'cases':>7}  result")
    print("-" * (width + 18))
    for report in reports:
        verdict = "pass" if report.passed else "FAIL"
        print(f"{report.name:<{width}}  {report.trials_run:>7}  {verdict}")
        for failure in report.failures[:5]:
            print(f"    {failure}")

    failed = [r for r in reports if not r.passed]
    print("-" * (width + 18))
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed in {elapsed:.2f}s "
          f"(trials={args.trials}, seed={args.seed})")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
