#!/usr/bin/env python3
"""Tabulate per-s magic-square counts from all four counting routes.

Usage:
    python scripts/count_table.py [--max-s N] [--no-brute]

Columns: s, magic sum m = 3s, closed form, series coefficient, family
enumeration, brute force.  The run aborts with a nonzero exit if any two
routes ever disagree, so the table doubles as a consistency sweep.
"""

from __future__ import annotations

import argparse

from magic3 import reconcile


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-s", type=int, default=30)
    parser.add_argument("--no-brute", action="store_true")
    args = parser.parse_args()

    print(f"{'s':>4} {'m':>5} {'closed':>8} {'series':>8} {'families':>9} {'brute':>8}")
    total = 0
    for s in range(args.max_s + 1):
        report = reconcile(s, include_brute=not args.no_brute)
        brute = "-" if report.brute is None else str(report.brute)
        print(
            f"{s:>4} {3 * s:>5} {report.closed_form:>8} {report.series:>8} "
            f"{report.families:>9} {brute:>8}"
        )
        total += report.families
    print(f"total squares through s={args.max_s}: {total}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
