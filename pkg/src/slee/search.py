"""Exhaustive sweeps over labeled graphs for SLEE maximizers.

Labeled graphs on ``n`` vertices are indexed by integers ``0 <= m < 2^(n(n-1)/2)``;
bit ``b`` of ``m`` is the ``b``-th vertex pair in graph6 order
``(0,1), (0,2), (1,2), (0,3), ...``. The index range is cut into fixed-size
chunks that are processed as numpy batches, so results do not depend on how
chunks are spread over worker processes.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import (Graph, are_isomorphic, isomorphism_classes, structural_summary,
                    write_graph6)
from .spectra import slee

SWEEP_MAX_ORDER = 7
CHUNK = 1 << 14
TIE_RTOL = 1e-10
CROSSCHECK_RTOL = 1e-9


class SearchError(ValueError):
    pass


def pair_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_index(n: int, index: int) -> Graph:
    return Graph(n, frozenset(p for b, p in enumerate(pair_order(n)) if index >> b & 1))


def index_of_graph(G: Graph) -> int:
    return sum(1 << b for b, p in enumerate(pair_order(G.n)) if p in G.edges)


@dataclass(frozen=True)
class ClassFilter:
    """``kind`` is ``diameter``, ``cut_vertices`` or ``connected``."""

    kind: str
    value: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("diameter", "cut_vertices", "connected"):
            raise SearchError(f"unknown filter kind {self.kind!r}")
        if self.kind != "connected" and self.value is None:
            raise SearchError(f"filter {self.kind} needs a value")

    @classmethod
    def diameter_equals(cls, d: int) -> "ClassFilter":
        return cls("diameter", d)

    @classmethod
    def cut_vertices_equals(cls, r: int) -> "ClassFilter":
        return cls("cut_vertices", r)

    @classmethod
    def all_connected(cls) -> "ClassFilter":
        return cls("connected")

    def check_range(self, n: int) -> None:
        if self.kind == "diameter" and not 1 <= self.value <= max(n - 1, 1):
            raise SearchError(f"diameter {self.value} impossible for connected n={n}")
        if self.kind == "cut_vertices" and not 0 <= self.value <= max(n - 2, 0):
            raise SearchError(f"cut-vertex count {self.value} impossible for n={n}")

    def accepts(self, G: Graph) -> bool:
        s = structural_summary(G)
        if not s.connected:
            return False
        if self.kind == "diameter":
            return s.diameter == self.value
        if self.kind == "cut_vertices":
            return len(s.cut_vertices) == self.value
        return True

    def to_dict(self) -> dict:
        return {"kind": self.kind, "value": self.value}


# ---------------------------------------------------------------------------
# batched structure

def _adjacency_batch(n: int, indices: np.ndarray) -> np.ndarray:
    pairs = pair_order(n)
    A = np.zeros((len(indices), n, n), dtype=np.uint8)
    if not pairs:
        return A
    bits = ((indices[:, None] >> np.arange(len(pairs), dtype=np.int64)) & 1).astype(np.uint8)
    I = np.array([p[0] for p in pairs])
    J = np.array([p[1] for p in pairs])
    A[:, I, J] = bits
    A[:, J, I] = bits
    return A


def batch_distances(A: np.ndarray) -> np.ndarray:
    """All-pairs hop distances; ``-1`` where unreachable."""
    B, n, _ = A.shape
    eye = np.eye(n, dtype=bool)
    reach = np.broadcast_to(eye, (B, n, n)).copy()
    dist = np.where(reach, 0, -1).astype(np.int16)
    step_matrix = (A.astype(np.int16) + eye)
    for step in range(1, n):
        nxt = (reach.astype(np.int16) @ step_matrix) > 0
        new = nxt & ~reach
        if not new.any():
            break
        dist[new] = step
        reach = nxt
    return dist


def batch_connected(A: np.ndarray) -> np.ndarray:
    return (batch_distances(A) >= 0).all(axis=(1, 2))


def batch_cut_vertex_counts(A: np.ndarray) -> np.ndarray:
    """Cut vertex counts, assuming every graph in the batch is connected."""
    B, n, _ = A.shape
    counts = np.zeros(B, dtype=np.int16)
    if n < 3:
        return counts
    for v in range(n):
        keep = np.ones(n, dtype=bool)
        keep[v] = False
        sub = A[:, keep][:, :, keep].astype(np.int16)
        reach = np.zeros((B, n - 1), dtype=bool)
        reach[:, 0] = True
        for _ in range(n - 2):
            reach = reach | ((reach[:, None, :].astype(np.int16) @ sub)[:, 0, :] > 0)
        counts += ~reach.all(axis=1)
    return counts


def batch_slee(A: np.ndarray) -> np.ndarray:
    Q = A.astype(np.float64)
    deg = Q.sum(axis=2)
    idx = np.arange(Q.shape[1])
    Q[:, idx, idx] = deg
    return np.exp(np.linalg.eigvalsh(Q)).sum(axis=1)


def _sweep_chunk(args) -> tuple:
    n, kind, value, start, stop = args
    indices = np.arange(start, stop, dtype=np.int64)
    A = _adjacency_batch(n, indices)
    dist = batch_distances(A)
    keep = (dist >= 0).all(axis=(1, 2))
    if kind == "diameter":
        keep &= dist.max(axis=(1, 2)) == value
    elif kind == "cut_vertices":
        sel = np.flatnonzero(keep)
        counts = batch_cut_vertex_counts(A[sel])
        keep[sel[counts != value]] = False
    sel = np.flatnonzero(keep)
    if len(sel) == 0:
        return 0, -math.inf, []
    values = batch_slee(A[sel])
    best = float(values.max())
    near = np.flatnonzero(values >= best - TIE_RTOL * best)
    return len(sel), best, [(int(indices[sel[i]]), float(values[i])) for i in near]


def _chunks(n: int, kind: str, value) -> list[tuple]:
    total = 1 << (n * (n - 1) // 2)
    return [(n, kind, value, s, min(s + CHUNK, total)) for s in range(0, total, CHUNK)]


def _merge(parts: list[tuple]) -> tuple[int, float, list[tuple[int, float]]]:
    class_size = sum(p[0] for p in parts)
    best = max((p[1] for p in parts), default=-math.inf)
    ties = [c for p in parts for c in p[2] if c[1] >= best - TIE_RTOL * best]
    return class_size, best, ties


# ---------------------------------------------------------------------------
# reports

def _round12(x: Optional[float]) -> Optional[float]:
    if x is None or not math.isfinite(x):
        return None
    return float(f"{x:.12g}")


@dataclass
class SearchReport:
    n: int
    filter: ClassFilter
    graphs_scanned: int
    class_size: int
    max_slee: Optional[float]
    tie_set: list = field(default_factory=list)
    iso_classes: int = 0
    representatives: list = field(default_factory=list)
    max_slee_jacobi: Optional[float] = None
    predicted: Optional[str] = None
    matched_prediction: Optional[bool] = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "filter": self.filter.to_dict(),
            "graphs_scanned": self.graphs_scanned,
            "class_size": self.class_size,
            "max_slee": _round12(self.max_slee),
            "max_slee_jacobi": _round12(self.max_slee_jacobi),
            "tie_set_size": len(self.tie_set),
            "iso_classes": self.iso_classes,
            "representatives": list(self.representatives),
            "predicted": self.predicted,
            "matched_prediction": self.matched_prediction,
            "tie_set": list(self.tie_set),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @property
    def passed(self) -> bool:
        return bool(self.matched_prediction)


def sweep(n: int, flt: ClassFilter, predicted: Optional[Graph] = None,
          workers: int = 1) -> SearchReport:
    """Scan every labeled graph on ``n`` vertices and collect the SLEE maximizers
    of the connected graphs passing ``flt``."""
    if not 1 <= n <= SWEEP_MAX_ORDER:
        raise SearchError(f"sweeps support 1 <= n <= {SWEEP_MAX_ORDER}, got {n}")
    flt.check_range(n)
    if predicted is not None and predicted.n != n:
        raise SearchError(f"predicted graph has order {predicted.n}, sweep is over n={n}")
    chunks = _chunks(n, flt.kind, flt.value)
    if workers <= 1 or len(chunks) == 1:
        parts = [_sweep_chunk(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep_chunk, chunks, chunksize=max(1, len(chunks) // (4 * workers))))
    class_size, best, ties = _merge(parts)

    graphs = sorted((write_graph6(graph_from_index(n, i)), graph_from_index(n, i)) for i, _ in ties)
    for _, G in graphs:
        if not flt.accepts(G):
            raise AssertionError(f"tie member {write_graph6(G)} fails filter re-validation")
    classes = isomorphism_classes(G for _, G in graphs)
    report = SearchReport(
        n=n,
        filter=flt,
        graphs_scanned=1 << (n * (n - 1) // 2),
        class_size=class_size,
        max_slee=best if class_size else None,
        tie_set=[s for s, _ in graphs],
        iso_classes=len(classes),
        representatives=[write_graph6(c[0]) for c in classes],
    )
    if classes:
        report.max_slee_jacobi = slee(classes[0][0])
        if abs(report.max_slee_jacobi - best) > CROSSCHECK_RTOL * best:
            raise AssertionError(
                f"batched SLEE {best!r} disagrees with Jacobi {report.max_slee_jacobi!r}"
            )
    if predicted is not None:
        report.predicted = write_graph6(predicted)
        report.matched_prediction = bool(classes) and len(classes) == 1 and are_isomorphic(
            classes[0][0], predicted
        )
    return report
