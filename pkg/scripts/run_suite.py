#!/usr/bin/env python3
"""Run the seeded random suite and print per-statement failure counts.

    python3 scripts/run_suite.py --count 500 --seed 0
"""

import argparse
import json
import time
from collections import Counter

from bnreduce.verify import run_suite, suite_cases


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--witnesses", type=int, default=3, help="failing witnesses to show per statement")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = run_suite(suite_cases(args.count, args.seed))
    took = time.perf_counter() - t0

    total = Counter(r.statement for r in reports)
    failed = Counter(r.statement for r in reports if not r.passed)
    if args.json:
        print(json.dumps({
            "count": args.count,
            "seed": args.seed,
            "seconds": round(took, 2),
            "statements": {k: {"checked": total[k], "failed": failed[k]} for k in sorted(total)},
            "failures": [r.to_dict() for r in reports if not r.passed],
        }, indent=2))
        return

    width = max(map(len, total))
    for name in sorted(total):
        print(f"{name:<{width}}  {total[name]:5d} checked  {failed[name]:3d} failed")
        shown = [r for r in reports if r.statement == name and not r.passed][: args.witnesses]
        for r in shown:
            print(f"    {r.fingerprint}: {r.witness}")
    print(f"{args.count} networks in {took:.1f}s")


if __name__ == "__main__":
    main()
