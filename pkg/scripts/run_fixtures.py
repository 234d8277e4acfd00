#!/usr/bin/env python3
"""Analyze every shipped fixture and print one verdict line each.

Usage: python scripts/run_fixtures.py [--field CHAR]
"""

import argparse
import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from svtlab.analysis import svt_check
from svtlab.cech import CapExceededError, local_cohomology_table
from svtlab.cli import parse_ideal_document
from svtlab.fields import FieldSpec

FIXTURES = os.path.abspath(
    os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", default="0", help="field characteristic (0 or a prime)")
    args = ap.parse_args()
    field = FieldSpec.parse(args.field)

    for name in sorted(os.listdir(FIXTURES)):
        if not name.endswith(".json"):
            continue
        with open(os.path.join(FIXTURES, name)) as fh:
            ideal = parse_ideal_document(json.load(fh))
        try:
            table = local_cohomology_table(ideal, field)
        except CapExceededError as e:
            print(f"{name:22s} SKIPPED (cap): {e}")
            continue
        report = svt_check(ideal, field, table=table)
        print(
            f"{name:22s} n={ideal.context.n} dim={report.dim_quotient} "
            f"depth={report.depth} cd={report.cd} q={report.q} "
            f"connected={report.connected} "
            f"H^(n-1)=0:{report.vanishing_top_minus_one} "
            f"agreement={report.agreement}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
