"""Print the maximum SLEE of each diameter class for fixed n.

Exploratory only: nothing here is asserted.
"""

import argparse

from slee.search import ClassFilter, sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6)
    args = ap.parse_args()
    previous = None
    for d in range(1, args.n):
        report = sweep(args.n, ClassFilter.diameter_equals(d))
        trend = "" if previous is None else ("down" if report.max_slee < previous else "NOT down")
        print(f"n={args.n} d={d} max SLEE={report.max_slee:.10g} "
              f"maximizers={report.representatives} {trend}")
        previous = report.max_slee


if __name__ == "__main__":
    main()
