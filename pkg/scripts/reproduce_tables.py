"""Reproduce every closed-form table on an x grid and print per-row agreement.

Usage: python3 scripts/reproduce_tables.py [--x 0.5,1,2,5] [--tables T1,T2]
Exits 1 if any evaluated row misses its tolerance.
"""

import argparse
import sys

from whittaker.cli import parse_xs
from whittaker.tables import TABLE_IDS
from whittaker.verify import reproduce_table, table_tolerance


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--x", default="0.5,1,2,5")
    ap.add_argument("--tables", default=",".join(TABLE_IDS))
    args = ap.parse_args(argv)
    xs = parse_xs(args.x)
    bad = 0
    for tid in args.tables.split(","):
        tol = table_tolerance(tid)
        rows = reproduce_table(tid, xs)
        done = [r for r in rows if r.status == "ok"]
        fails = [r for r in done if not r.rel_diff <= tol]
        worst = max((r.rel_diff for r in done), default=0.0)
        skipped = len(rows) - len(done)
        print(f"{tid:5s} rows={len(rows):4d} skipped={skipped:3d} worst_rel={worst:.2e} tol={tol:.0e} "
              f"{'PASS' if not fails else 'FAIL'}")
        for r in fails:
            print(f"    kappa={r.kappa} mu={r.mu} x={r.x} closed={r.closed_value!r} "
                  f"independent={r.independent_value!r} via {r.independent_route}")
        bad += len(fails)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
