#!/usr/bin/env python3
"""Print the bundled catalog's capacity and break-even tables and check
them against the committed goldens. Exit 0 iff both match byte-for-byte.

Usage: python scripts/reproduce_tables.py [--electricity-rate R] ...
Any workload flag changes the tables (and then the golden check is
skipped, since goldens are defined at the default workload).
"""

import argparse
import sys
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

from llm_tco.breakeven import break_even_matrix
from llm_tco.dataset import builtin_catalog
from llm_tco.engine import WorkloadProfile
from llm_tco.reporting import RenderSpec, render_breakeven_matrix, render_capacity_table

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--hours-per-day", type=Decimal, default=Decimal(8))
    parser.add_argument("--days-per-month", type=Decimal, default=Decimal(22))
    parser.add_argument("--electricity-rate", type=Decimal, default=Decimal("0.15"))
    parser.add_argument("--output-share", type=Fraction, default=Fraction(2, 3))
    args = parser.parse_args()

    w = WorkloadProfile(
        hours_per_day=args.hours_per_day,
        days_per_month=args.days_per_month,
        electricity_rate=args.electricity_rate,
        output_share=args.output_share,
    )
    is_default = w == WorkloadProfile()

    catalog = builtin_catalog()
    r = RenderSpec(format="paper")
    capacity = render_capacity_table(catalog, w, r)
    matrix = render_breakeven_matrix(
        break_even_matrix(catalog, w), r,
        {o.id: o.name for o in catalog.offerings},
        {d.id: d.name for d in catalog.deployments})

    print(capacity)
    print(matrix, end="")

    if not is_default:
        print("\n(custom workload: golden comparison skipped)", file=sys.stderr)
        return 0

    ok = True
    for name, text in (("capacity_paper.txt", capacity), ("matrix_paper.txt", matrix)):
        golden = (GOLDEN / name).read_text(encoding="utf-8")
        status = "matches" if text == golden else "DIFFERS FROM"
        ok &= text == golden
        print(f"{name}: output {status} the committed golden", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
