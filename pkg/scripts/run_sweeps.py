"""Run every theorem sweep for n = 5..7 and write the reports as JSON.

    python scripts/run_sweeps.py --out reports/ --workers 4
"""

import argparse
import json
import os
import time

from slee import families as fam
from slee.search import ClassFilter, sweep


def cases(n_values):
    for n in n_values:
        for d in range(3, n - 1):
            yield f"diameter_n{n}_d{d}", n, ClassFilter.diameter_equals(d), fam.h_extremal(n, d)
        for r in range(1, n - 2):
            yield f"cut_n{n}_r{r}", n, ClassFilter.cut_vertices_equals(r), fam.g_extremal(n, r)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="reports")
    ap.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--n", type=int, nargs="*", default=[5, 6, 7])
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    summary = {}
    for name, n, flt, predicted in cases(args.n):
        t0 = time.perf_counter()
        report = sweep(n, flt, predicted, workers=args.workers)
        elapsed = time.perf_counter() - t0
        with open(os.path.join(args.out, name + ".json"), "w") as fh:
            fh.write(report.to_json() + "\n")
        summary[name] = report.matched_prediction
        print(f"{name:24s} class={report.class_size:8d} ties={len(report.tie_set):5d} "
              f"iso={report.iso_classes} match={report.matched_prediction} ({elapsed:.1f}s)")
    with open(os.path.join(args.out, "summary.json"), "w") as fh:
        json.dump(summary, fh, indent=2)
    raise SystemExit(0 if all(summary.values()) else 1)


if __name__ == "__main__":
    main()
