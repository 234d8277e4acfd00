#!/usr/bin/env python3
"""Large randomized sweep of the vanishing/connectedness equivalence.

Usage: python scripts/run_sweep.py --vars 3 4 5 --trials 100 --seed 1 [--log out.jsonl]
"""

import argparse
import json
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from svtlab.analysis import random_svt_sweep
from svtlab.fields import FieldSpec


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--vars", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--trials", type=int, default=100, help="trials per variable count")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--generator-bound", type=int, default=4)
    ap.add_argument("--field", default="0")
    ap.add_argument("--log", help="append one JSONL summary per variable count")
    args = ap.parse_args()
    field = FieldSpec.parse(args.field)

    total_failures = 0
    for n in args.vars:
        t0 = time.monotonic()
        summary = random_svt_sweep(
            n=n,
            generator_bound=args.generator_bound,
            trials=args.trials,
            seed=args.seed + n,
            field=field,
        )
        dt = time.monotonic() - t0
        total_failures += summary.failures
        print(
            f"n={n}: {summary.agreements}/{summary.trials} agree "
            f"({summary.failures} failures) in {dt:.1f}s"
        )
        if summary.first_counterexample:
            print(f"  first counterexample: {summary.first_counterexample}")
        if args.log:
            with open(args.log, "a") as fh:
                fh.write(json.dumps(summary.to_json(), sort_keys=True) + "\n")
    return 0 if total_failures == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
