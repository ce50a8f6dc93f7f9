"""Desk-scale checks of the extremal results and the lemmas behind them.

Each ``verify_*`` function returns a small report object with a ``passed``
flag and a ``to_dict`` for JSON output. Batteries draw random instances from
a seeded ``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import families as fam
from .graph import (Graph, GraphError, add_edge, add_edges, are_isomorphic,
                    attach_pendent_path, coalescence, coalescence_map, cut_vertices,
                    distance_matrix, is_connected, isomorphism_classes, remove_edges,
                    structural_summary, write_graph6)
from .search import (ClassFilter, SearchError, SearchReport, _adjacency_batch,
                     batch_connected, graph_from_index, sweep)
from .spectra import slee
from .walks import (DominanceVerdict, count_walks_by_enumeration, default_depth,
                    s_dominance, s_dominance_pair, walk_count_sequences)

SLEE_RTOL = 1e-10


class VerificationError(ValueError):
    """Raised for instances that violate a verifier's preconditions."""


def _g6(G: Graph) -> str:
    return write_graph6(G)


# ---------------------------------------------------------------------------
# graph pools

def connected_labeled(n: int) -> list[Graph]:
    """Every connected labeled graph on ``n`` vertices."""
    total = 1 << (n * (n - 1) // 2)
    idx = np.arange(total, dtype=np.int64)
    ok = batch_connected(_adjacency_batch(n, idx))
    return [graph_from_index(n, int(i)) for i in np.flatnonzero(ok)]


def connected_unlabeled(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on ``n`` vertices."""
    buckets: dict = {}
    for G in connected_labeled(n):
        key = (G.m, tuple(sorted(G.degrees())))
        buckets.setdefault(key, []).append(G)
    reps = []
    for key in sorted(buckets):
        reps.extend(cls[0] for cls in isomorphism_classes(buckets[key]))
    return reps


def random_graph(rng: random.Random, n: int, p: Optional[float] = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph(n, frozenset((i, j) for j in range(n) for i in range(j) if rng.random() < p))


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        G = random_graph(rng, n)
        if is_connected(G):
            return G


# ---------------------------------------------------------------------------
# theorems

def verify_theorem_diameter(n: int, d: int, workers: int = 1) -> SearchReport:
    try:
        fam.check_h_bounds(n, d)
    except GraphError as exc:
        raise VerificationError(str(exc)) from None
    return sweep(n, ClassFilter.diameter_equals(d), fam.h_extremal(n, d), workers=workers)


def verify_theorem_cut(n: int, r: int, workers: int = 1) -> SearchReport:
    if not 1 <= r <= n - 3:
        raise VerificationError(f"theorem-cut needs 1 <= r <= n-3, got r={r}, n={n}")
    return sweep(n, ClassFilter.cut_vertices_equals(r), fam.g_extremal(n, r), workers=workers)


# ---------------------------------------------------------------------------
# edge addition and edge shifting

@dataclass
class EdgeAdditionResult:
    graph: str
    edge: tuple
    slee_before: float
    slee_after: float

    @property
    def gap(self) -> float:
        return self.slee_after - self.slee_before

    def to_dict(self) -> dict:
        return {"graph": self.graph, "edge": list(self.edge), "slee_before": self.slee_before,
                "slee_after": self.slee_after, "gap": self.gap}


def verify_edge_addition(G: Graph, e: tuple[int, int]) -> EdgeAdditionResult:
    H = add_edge(G, *e)
    return EdgeAdditionResult(_g6(G), tuple(sorted(e)), slee(G), slee(H))


@dataclass
class BatteryReport:
    name: str
    instances: int
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"name": self.name, "instances": self.instances, "passed": self.passed,
                "failures": self.failures, "details": self.details}


def edge_addition_battery(count: int = 500, n_max: int = 8, seed: int = 0,
                          margin: float = 1e-9) -> BatteryReport:
    rng = random.Random(seed)
    report = BatteryReport("lemma-edge-add", 0)
    smallest = math.inf
    while report.instances < count:
        G = random_graph(rng, rng.randint(2, n_max))
        missing = list(G.non_edges())
        if not missing:
            continue
        res = verify_edge_addition(G, rng.choice(missing))
        report.instances += 1
        smallest = min(smallest, res.gap)
        if not res.gap > margin:
            report.failures.append(res.to_dict())
    report.details = {"min_gap": smallest, "margin": margin, "seed": seed}
    return report


@dataclass
class EdgeShiftReport:
    graph: str
    v: int
    u: int
    ws: tuple
    depth: int
    vu_verdict: DominanceVerdict
    pair_verdicts: list
    slee_v: Optional[float] = None
    slee_u: Optional[float] = None

    @property
    def hypotheses_met(self) -> bool:
        return self.vu_verdict.relation == "strict" and all(p.holds for p in self.pair_verdicts)

    @property
    def gap(self) -> Optional[float]:
        if self.slee_u is None:
            return None
        return self.slee_u - self.slee_v

    @property
    def status(self) -> str:
        if not self.hypotheses_met:
            return "hypotheses_unmet"
        return "confirmed" if self.gap > 0 else "violated"

    @property
    def passed(self) -> bool:
        return self.status != "violated"

    def to_dict(self) -> dict:
        return {
            "graph": self.graph, "v": self.v, "u": self.u, "ws": list(self.ws),
            "depth": self.depth, "status": self.status,
            "vu_verdict": self.vu_verdict.to_dict(),
            "pair_verdicts": [p.to_dict() for p in self.pair_verdicts],
            "slee_v": self.slee_v, "slee_u": self.slee_u, "gap": self.gap,
        }


def verify_edge_shift(G: Graph, v: int, u: int, ws: Sequence[int],
                      K_max: Optional[int] = None) -> EdgeShiftReport:
    """Compare ``G + {v w_i}`` against ``G + {u w_i}`` after checking dominance hypotheses."""
    ws = tuple(ws)
    if v == u:
        raise VerificationError("v and u must differ")
    if len(set(ws)) != len(ws) or {v, u} & set(ws):
        raise VerificationError("ws must be distinct and exclude v and u")
    for w in ws:
        for z in (v, u):
            if not 0 <= w < G.n:
                raise VerificationError(f"vertex {w} out of range")
            if G.has_edge(z, w):
                raise VerificationError(f"edge {tuple(sorted((z, w)))} already present")
    K = default_depth(G) if K_max is None else K_max
    powers = walk_count_sequences(G, K)
    report = EdgeShiftReport(
        _g6(G), v, u, ws, K,
        s_dominance(G, v, u, K, powers),
        [s_dominance_pair(G, w, v, u, K, powers) for w in ws],
    )
    if report.hypotheses_met:
        report.slee_v = slee(add_edges(G, [(v, w) for w in ws]))
        report.slee_u = slee(add_edges(G, [(u, w) for w in ws]))
    return report


def edge_shift_battery(count: int = 200, n_max: int = 7, seed: int = 0,
                       K_max: Optional[int] = None) -> BatteryReport:
    rng = random.Random(seed)
    report = BatteryReport("lemma-shift", 0)
    met = 0
    while report.instances < count:
        n = rng.randint(3, n_max)
        G = random_graph(rng, n)
        v, u = rng.sample(range(n), 2)
        free = [w for w in range(n) if w not in (v, u)
                and not G.has_edge(v, w) and not G.has_edge(u, w)]
        if not free:
            continue
        ws = rng.sample(free, rng.randint(1, len(free)))
        res = verify_edge_shift(G, v, u, ws, K_max)
        report.instances += 1
        met += res.hypotheses_met
        if not res.passed:
            report.failures.append(res.to_dict())
    report.details = {"hypotheses_met": met, "seed": seed}
    return report


# ---------------------------------------------------------------------------
# dominance preservation under edge addition

def dominance_preservation(n_max: int = 5, K: int = 12) -> BatteryReport:
    """Check finite-depth dominance survives adding the edge ``uv``.

    Closed walks: a strict/weak verdict for ``(G;v)`` vs ``(G;u)`` must give
    the same verdict in ``G + uv``. Pair walks: if additionally
    ``(G;x,v)`` is dominated by ``(G;x,u)``, the domination persists in
    ``G + uv``, strictly when the pair hypothesis is strict.
    """
    report = BatteryReport("lemma-dominance-preservation", 0)
    closed_checked = pair_checked = pair_strict_expected = pair_strict_seen = 0
    for n in range(2, n_max + 1):
        for G in connected_labeled(n):
            PG = walk_count_sequences(G, K)
            for a, b in G.non_edges():
                H = add_edge(G, a, b)
                PH = walk_count_sequences(H, K)
                for v, u in ((a, b), (b, a)):
                    before = s_dominance(G, v, u, K, PG)
                    if not before.holds:
                        continue
                    report.instances += 1
                    closed_checked += 1
                    after = s_dominance(H, v, u, K, PH)
                    if after.relation != before.relation:
                        report.failures.append({"graph": _g6(G), "v": v, "u": u,
                                                "kind": "closed", "before": before.to_dict(),
                                                "after": after.to_dict()})
                    for x in range(n):
                        pb = s_dominance_pair(G, x, v, u, K, PG)
                        if not pb.holds:
                            continue
                        report.instances += 1
                        pair_checked += 1
                        pa = s_dominance_pair(H, x, v, u, K, PH)
                        bad = not pa.holds
                        if pb.relation == "strict":
                            pair_strict_expected += 1
                            bad = bad or pa.relation != "strict"
                        if before.relation == "strict" or pb.relation == "strict":
                            pair_strict_seen += pa.relation == "strict"
                        if bad:
                            report.failures.append({"graph": _g6(G), "x": x, "v": v, "u": u,
                                                    "kind": "pair", "before": pb.to_dict(),
                                                    "after": pa.to_dict()})
    report.details = {"depth": K, "closed_checked": closed_checked,
                      "pair_checked": pair_checked,
                      "pair_strict_expected": pair_strict_expected,
                      "pair_strict_observed": pair_strict_seen}
    return report


# ---------------------------------------------------------------------------
# moments vs walks

def verify_moment_walk(n_max: int = 5, k_max: int = 6, labeled: bool = False) -> BatteryReport:
    """Enumerated walk counts against exact ``Q^k`` entries and traces."""
    report = BatteryReport("moment-walk", 0)
    graphs = 0
    for n in range(1, n_max + 1):
        pool = connected_labeled(n) if labeled else connected_unlabeled(n)
        for G in pool:
            graphs += 1
            powers = walk_count_sequences(G, k_max)
            for k in range(k_max + 1):
                closed = 0
                for x in range(n):
                    counts = count_walks_by_enumeration(G, x, k)
                    closed += counts[x]
                    for y in range(n):
                        report.instances += 1
                        if counts[y] != powers[k][x][y]:
                            report.failures.append({"graph": _g6(G), "x": x, "y": y, "k": k,
                                                    "enumerated": counts[y],
                                                    "matrix": powers[k][x][y]})
                trace = sum(powers[k][i][i] for i in range(n))
                if closed != trace:
                    report.failures.append({"graph": _g6(G), "k": k, "closed_walks": closed,
                                            "T_k": trace})
    report.details = {"graphs": graphs, "n_max": n_max, "k_max": k_max, "labeled": labeled}
    return report


# ---------------------------------------------------------------------------
# pendant relocation

@dataclass
class RelocationReport:
    before: str
    after: str
    n_before: int
    n_after: int
    moved_edges: int
    slee_before: float
    slee_after: float
    cut_before: int
    cut_after: int

    @property
    def degenerate(self) -> bool:
        return self.moved_edges == 0

    @property
    def gap(self) -> float:
        return self.slee_after - self.slee_before

    @property
    def passed(self) -> bool:
        if self.degenerate:
            return self.before == self.after
        return self.gap > 0 and self.n_before == self.n_after

    def to_dict(self) -> dict:
        return {"before": self.before, "after": self.after, "n_before": self.n_before,
                "n_after": self.n_after, "moved_edges": self.moved_edges,
                "degenerate": self.degenerate, "slee_before": self.slee_before,
                "slee_after": self.slee_after, "gap": self.gap,
                "cut_before": self.cut_before, "cut_after": self.cut_after,
                "passed": self.passed}


def build_relocation_graph(H1: Graph, x: int, y: int, H2: Graph, u: int, s: int,
                           path_vertices: Sequence[int]):
    """Return ``(G, G_after, moved)`` for the pendant-path relocation.

    ``G`` hangs a path of ``s`` vertices (starting at ``y``) on ``H1`` and glues
    ``H2`` onto ``x`` through ``u``. ``G_after`` moves every edge ``yw``
    (``w`` a neighbour of ``y`` in ``H1`` other than ``x``) to ``x_1 w``.
    """
    if x == y or not H1.has_edge(x, y):
        raise VerificationError("xy must be an edge of H1 with x != y")
    if s < 1:
        raise VerificationError("path order s must be at least 1")
    path_vertices = list(path_vertices)
    if len(path_vertices) != s + 1:
        raise VerificationError(f"H2 path must list x_1..x_{s + 1} ({s + 1} vertices)")
    chain = [u] + path_vertices
    if len(set(chain)) != len(chain) or not all(0 <= c < H2.n for c in chain):
        raise VerificationError("H2 path vertices must be distinct vertices of H2")
    for a, b in zip(chain, chain[1:]):
        if not H2.has_edge(a, b):
            raise VerificationError(f"H2 lacks path edge {(a, b)}")
    G1 = attach_pendent_path(H1, y, s - 1)
    G = coalescence(G1, x, H2, u)
    where = coalescence_map(G1, x, H2, u)
    x1 = where[path_vertices[0]]
    ws = sorted(H1.adj[y] - {x})
    after = add_edges(remove_edges(G, [(y, w) for w in ws]), [(x1, w) for w in ws])
    return G, after, len(ws)


def verify_pendant_relocation(H1: Graph, x: int, y: int, H2: Graph, u: int, s: int,
                              path_vertices: Sequence[int]) -> RelocationReport:
    G, after, moved = build_relocation_graph(H1, x, y, H2, u, s, path_vertices)
    return RelocationReport(
        before=_g6(G), after=_g6(after), n_before=G.n, n_after=after.n, moved_edges=moved,
        slee_before=slee(G), slee_after=slee(after),
        cut_before=len(cut_vertices(G)), cut_after=len(cut_vertices(after)),
    )


def relocation_instances(count: int = 20, seed: int = 0) -> list[tuple]:
    """Random instances shaped like the cut-vertex extremal argument.

    ``H1`` is a clique containing ``x = 0`` and ``y = 1``; ``H2`` is a path
    ``u, x_1, ..., x_{s+1}`` that may carry a clique or a pendent path at its
    far end, or extra pendent paths along the way.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        H1 = fam.complete(rng.randint(3, 5))
        s = rng.randint(1, 3)
        H2 = fam.path(s + 2)
        tail = rng.choice(["none", "clique", "path"])
        if tail == "clique":
            H2 = coalescence(H2, s + 1, fam.complete(rng.randint(3, 4)), 0)
        elif tail == "path":
            H2 = attach_pendent_path(H2, s + 1, rng.randint(1, 2))
        out.append((H1, 0, 1, H2, 0, s, list(range(1, s + 2))))
    return out


def relocation_battery(count: int = 20, seed: int = 0) -> BatteryReport:
    report = BatteryReport("lemma-relocate", 0)
    for args in relocation_instances(count, seed):
        res = verify_pendant_relocation(*args)
        report.instances += 1
        ok = res.passed and not res.degenerate and res.cut_before == res.cut_after
        if not ok:
            report.failures.append(res.to_dict())
    report.details = {"seed": seed}
    return report


# ---------------------------------------------------------------------------
# H-family descent

@dataclass
class DescentReport:
    n: int
    d: int
    j: int
    members: list = field(default_factory=list)
    extremal_slee: float = 0.0
    previous_max: Optional[float] = None
    vacuous: bool = False
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "j": self.j, "vacuous": self.vacuous,
                "extremal_slee": self.extremal_slee, "previous_max": self.previous_max,
                "members": self.members, "passed": self.passed, "failures": self.failures}


def verify_h_descent(n: int, d: int, j: int) -> DescentReport:
    try:
        fam.check_h_bounds(n, d, j)
    except GraphError as exc:
        raise VerificationError(str(exc)) from None
    H1 = fam.h_extremal(n, d)
    report = DescentReport(n, d, j, extremal_slee=slee(H1))
    if j == 1:
        report.vacuous = True
        return report
    prev = [slee(fam.h_member(fam.HFamilySpec(n, d, j - 1, a)))
            for a in fam.h_assignments(n, d, j - 1)]
    report.previous_max = max(prev)
    for a in fam.h_assignments(n, d, j):
        H = fam.h_member(fam.HFamilySpec(n, d, j, a))
        value = slee(H)
        in_prev = fam.in_h_class(d, j - 1, a)
        iso = are_isomorphic(H, H1)
        entry = {"assignment": list(a), "graph": _g6(H), "slee": value,
                 "in_previous_class": in_prev, "isomorphic_to_extremal": iso,
                 "diameter": structural_summary(H).diameter}
        report.members.append(entry)
        if not in_prev and not value < report.previous_max:
            report.failures.append({**entry, "reason": "no SLEE descent into previous class"})
        tie = abs(value - report.extremal_slee) <= SLEE_RTOL * report.extremal_slee
        if value > report.extremal_slee and not tie:
            report.failures.append({**entry, "reason": "exceeds extremal SLEE"})
        elif tie and not iso:
            report.failures.append({**entry, "reason": "ties extremal SLEE but not isomorphic"})
    return report


# ---------------------------------------------------------------------------
# diametral path neighbour bound

def diametral_path(G: Graph) -> list[int]:
    """Lexicographically first shortest path whose length equals the diameter."""
    dist = distance_matrix(G)
    if any(-1 in row for row in dist):
        raise VerificationError("graph is disconnected")
    d = max(max(row) for row in dist)
    for a in range(G.n):
        if max(dist[a]) != d:
            continue
        route = [a]

        def extend() -> bool:
            if len(route) == d + 1:
                return True
            for w in sorted(G.adj[route[-1]]):
                if dist[a][w] == len(route):
                    route.append(w)
                    if extend():
                        return True
                    route.pop()
            return False

        if extend():
            return route
    raise AssertionError("no diametral path found")  # unreachable for connected graphs


@dataclass
class NeighborBoundReport:
    graph: str
    diameter: int
    path: list
    max_path_neighbors: int

    @property
    def passed(self) -> bool:
        return self.max_path_neighbors <= 3

    def to_dict(self) -> dict:
        return {"graph": self.graph, "diameter": self.diameter, "path": self.path,
                "max_path_neighbors": self.max_path_neighbors, "passed": self.passed}


def verify_diametral_neighbor_bound(G: Graph) -> NeighborBoundReport:
    summary = structural_summary(G)
    if not summary.connected:
        raise VerificationError("graph is disconnected")
    if summary.diameter < 2:
        raise VerificationError("diameter must be at least 2")
    route = diametral_path(G)
    on_path = set(route)
    counts = [len(G.adj[w] & on_path) for w in range(G.n) if w not in on_path]
    return NeighborBoundReport(_g6(G), summary.diameter, route, max(counts, default=0))


def neighbor_bound_battery(n_max: int = 6) -> BatteryReport:
    report = BatteryReport("neighbor-bound", 0)
    worst = 0
    for n in range(3, n_max + 1):
        for G in connected_labeled(n):
            if G.m == n * (n - 1) // 2:
                continue  # K_n has diameter 1
            res = verify_diametral_neighbor_bound(G)
            report.instances += 1
            worst = max(worst, res.max_path_neighbors)
            if not res.passed:
                report.failures.append(res.to_dict())
    report.details = {"n_max": n_max, "max_observed": worst}
    return report
