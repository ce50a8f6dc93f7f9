"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from typing import Iterable, Optional

from . import families as fam
from . import verify as ver
from .graph import Graph, GraphError, parse_graph6, read_graph6_lines, write_graph6
from .search import ClassFilter, SearchError, sweep
from .spectra import JACOBI_TOL, SERIES_TOL, estrada_indices, moment_table, slee_series, spectrum
from .walks import walk_counts

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt(x: float) -> float:
    """Round to 12 significant digits for output."""
    return float(f"{x:.12g}")


def clean(obj):
    if isinstance(obj, float):
        return fmt(obj) if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    return obj


def dump_json(obj) -> str:
    return json.dumps(clean(obj), indent=2)


def _read_input(source: Optional[str]) -> Iterable[tuple[int, Graph]]:
    if source is None:
        lines = sys.stdin.read().splitlines()
    elif os.path.isfile(source):
        with open(source) as fh:
            lines = fh.read().splitlines()
    else:
        lines = source.split()
    return list(read_graph6_lines(lines))


def _single_graph(source: Optional[str]) -> Graph:
    graphs = _read_input(source)
    if len(graphs) != 1:
        raise UsageError(f"expected exactly one graph, got {len(graphs)}")
    return graphs[0][1]


def _int_list(text: Optional[str]) -> list[int]:
    if not text:
        return []
    return [int(t) for t in text.replace(",", " ").split()]


# ---------------------------------------------------------------------------
# subcommands

def compute_record(G: Graph, tol: float = JACOBI_TOL, series_tol: float = SERIES_TOL) -> dict:
    idx = estrada_indices(G, tol)
    return {
        "graph6": write_graph6(G),
        "n": G.n,
        "m": G.m,
        "EE": idx.EE,
        "LEE": idx.LEE,
        "SLEE": idx.SLEE,
        "slee_series": slee_series(G, series_tol),
        "q_spectrum": list(spectrum(G, "Q", tol).values),
    }


def cmd_compute(args) -> int:
    records = [compute_record(G, args.tol) for _, G in _read_input(args.input)]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if records:
            writer.writerow(["graph6", "n", "m", "EE", "LEE", "SLEE", "slee_series", "q_spectrum"])
        for r in records:
            writer.writerow([r["graph6"], r["n"], r["m"]]
                            + [repr(fmt(r[k])) for k in ("EE", "LEE", "SLEE", "slee_series")]
                            + [";".join(repr(fmt(q)) for q in r["q_spectrum"])])
        sys.stdout.write(buf.getvalue())
    elif records:
        print(dump_json(records))
    return EXIT_OK


def cmd_moments(args) -> int:
    out = []
    for _, G in _read_input(args.input):
        table = moment_table(G, args.kmax)
        out.append({"graph6": write_graph6(G), "k_max": args.kmax,
                    "traces": [str(t) if args.strings else t for t in table.traces]})
    if out:
        print(dump_json(out))
    return EXIT_OK


def cmd_walks(args) -> int:
    out = []
    for _, G in _read_input(args.input):
        counts = walk_counts(G, args.k)
        rec = {"graph6": write_graph6(G), "k": args.k}
        if args.x is not None and args.y is not None:
            rec["x"], rec["y"], rec["count"] = args.x, args.y, counts[args.x][args.y]
        else:
            rec["counts"] = counts
        out.append(rec)
    if out:
        print(dump_json(out))
    return EXIT_OK


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join('--' + m for m in missing)}")


def cmd_family(args) -> int:
    name = args.family
    if name == "h":
        _need(args, "n", "d", "j")
        graphs = list(fam.enumerate_h_family(args.n, args.d, args.j))
    elif name == "h1":
        _need(args, "n", "d")
        graphs = [fam.h_extremal(args.n, args.d)]
    elif name == "g":
        _need(args, "n", "r")
        graphs = [fam.g_extremal(args.n, args.r)]
    else:
        _need(args, "n")
        graphs = [{"path": fam.path, "complete": fam.complete,
                   "complete_minus_edge": fam.complete_minus_edge}[name](args.n)]
    for G in graphs:
        print(write_graph6(G))
    return EXIT_OK


def _filter_from(args) -> ClassFilter:
    if args.filter == "connected":
        return ClassFilter.all_connected()
    _need(args, "value")
    if args.filter == "diameter":
        return ClassFilter.diameter_equals(args.value)
    return ClassFilter.cut_vertices_equals(args.value)


def cmd_sweep(args) -> int:
    _need(args, "n")
    predicted = parse_graph6(args.predicted) if args.predicted else None
    report = sweep(args.n, _filter_from(args), predicted, workers=args.workers)
    print(report.to_json())
    if predicted is not None and not report.matched_prediction:
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    t = args.target
    if t == "theorem-diameter":
        _need(args, "n", "d")
        if args.n > 7:
            raise UsageError("theorem-diameter sweeps need n <= 7")
        report = ver.verify_theorem_diameter(args.n, args.d, args.workers)
    elif t == "theorem-cut":
        _need(args, "n", "r")
        if args.n > 7:
            raise UsageError("theorem-cut sweeps need n <= 7")
        report = ver.verify_theorem_cut(args.n, args.r, args.workers)
    elif t == "lemma-edge-add":
        if args.input:
            G = _single_graph(args.input)
            e = _int_list(args.edge)
            if len(e) != 2:
                raise UsageError("--edge needs two vertices, e.g. --edge 0,1")
            res = ver.verify_edge_addition(G, tuple(e))
            print(dump_json({**res.to_dict(), "passed": res.gap > 0}))
            return EXIT_OK if res.gap > 0 else EXIT_FAIL
        report = ver.edge_addition_battery(args.count or 500, args.nmax or 8, args.seed)
    elif t == "lemma-shift":
        if args.input:
            _need(args, "v", "u")
            G = _single_graph(args.input)
            report = ver.verify_edge_shift(G, args.v, args.u, _int_list(args.ws), args.kmax)
        else:
            report = ver.edge_shift_battery(args.count or 200, args.nmax or 7, args.seed, args.kmax)
    elif t == "lemma-relocate":
        report = ver.relocation_battery(args.count or 20, args.seed)
    elif t == "lemma-dominance":
        report = ver.dominance_preservation(args.nmax or 5, args.kmax or 12)
    elif t == "h-descent":
        _need(args, "n", "d", "j")
        report = ver.verify_h_descent(args.n, args.d, args.j)
    elif t == "neighbor-bound":
        if args.input:
            report = ver.verify_diametral_neighbor_bound(_single_graph(args.input))
        else:
            report = ver.neighbor_bound_battery(args.nmax or 6)
    elif t == "moment-walk":
        report = ver.verify_moment_walk(args.n or 5, 6 if args.kmax is None else args.kmax)
    else:  # argparse restricts choices
        raise UsageError(f"unknown target {t}")
    print(dump_json({"target": t, **report.to_dict(), "passed": report.passed}))
    return EXIT_OK if report.passed else EXIT_FAIL


# ---------------------------------------------------------------------------

VERIFY_TARGETS = ["theorem-diameter", "theorem-cut", "lemma-edge-add", "lemma-shift",
                  "lemma-relocate", "lemma-dominance", "h-descent", "neighbor-bound",
                  "moment-walk"]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="slee", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("-i", "--input", help="graph6 string or file path (default: stdin)")

    sp = sub.add_parser("compute", help="EE, LEE, SLEE and Q-spectrum per graph")
    with_input(sp)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--tol", type=float, default=JACOBI_TOL)
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("moments", help="exact spectral moments T_0..T_kmax")
    with_input(sp)
    sp.add_argument("--kmax", type=int, default=10)
    sp.add_argument("--strings", action="store_true", help="emit moments as decimal strings")
    sp.set_defaults(func=cmd_moments)

    sp = sub.add_parser("walks", help="semi-edge walk counts (entries of Q^k)")
    with_input(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--x", type=int)
    sp.add_argument("--y", type=int)
    sp.set_defaults(func=cmd_walks)

    sp = sub.add_parser("family", help="emit family members as graph6")
    sp.add_argument("family", choices=["h", "h1", "g", "path", "complete", "complete_minus_edge"])
    for name in ("n", "d", "j", "r"):
        sp.add_argument(f"--{name}", type=int)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("sweep", help="exhaustive SLEE maximizer search")
    sp.add_argument("--n", type=int)
    sp.add_argument("--filter", choices=["diameter", "cut", "connected"], default="connected")
    sp.add_argument("--value", type=int)
    sp.add_argument("--predicted", help="graph6 of the predicted maximizer")
    sp.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("verify", help="check a theorem or lemma at desk scale")
    sp.add_argument("target", choices=VERIFY_TARGETS)
    with_input(sp)
    for name in ("n", "d", "j", "r", "v", "u", "count", "nmax", "kmax"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--ws", help="comma-separated vertices for lemma-shift")
    sp.add_argument("--edge", help="u,v for a single lemma-edge-add instance")
    sp.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, SearchError, ValueError) as exc:
        print(f"slee {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
