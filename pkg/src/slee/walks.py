"""Semi-edge walks: brute-force enumeration, exact counts and dominance.

A semi-edge walk steps from ``v`` by choosing an incident edge ``e = vw`` and
then either staying at ``v`` or crossing to ``w``. Counting these gives the
entries of powers of the signless Laplacian ``Q = D + A``; the enumerator here
is the independent oracle for that identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graph import Graph, GraphError, MissingEdgeError, remove_edge
from .spectra import exact_powers, int_matrix

ENUM_MAX_ORDER = 8
ENUM_MAX_LENGTH = 8


@dataclass(frozen=True)
class SemiEdgeWalk:
    vertices: tuple
    edges: tuple

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("a walk of length k has k edges and k+1 vertices")
        for i, (a, b) in enumerate(self.edges):
            if {self.vertices[i], self.vertices[i + 1]} - {a, b}:
                raise ValueError(f"step {i}: vertices are not endpoints of edge {(a, b)}")

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def contains_edge(self, e: tuple[int, int]) -> bool:
        key = tuple(sorted(e))
        return key in self.edges


def _check_caps(G: Graph, k: int) -> None:
    if G.n > ENUM_MAX_ORDER:
        raise GraphError(f"walk enumeration limited to n <= {ENUM_MAX_ORDER}, got {G.n}")
    if not 0 <= k <= ENUM_MAX_LENGTH:
        raise GraphError(f"walk enumeration limited to 0 <= k <= {ENUM_MAX_LENGTH}, got {k}")


def _incident(G: Graph) -> list[list[tuple[tuple[int, int], int]]]:
    """Per vertex: ``(edge, far endpoint)`` in a fixed order."""
    out = []
    for v in range(G.n):
        out.append([(tuple(sorted((v, w))), w) for w in sorted(G.adj[v])])
    return out


def iter_walks(G: Graph, x: int, k: int) -> Iterator[SemiEdgeWalk]:
    """Every semi-edge walk of length ``k`` starting at ``x``."""
    _check_caps(G, k)
    inc = _incident(G)
    verts = [x]
    edges: list = []

    def rec(depth: int):
        if depth == k:
            yield SemiEdgeWalk(tuple(verts), tuple(edges))
            return
        v = verts[-1]
        for e, w in inc[v]:
            for nxt in (v, w):
                verts.append(nxt)
                edges.append(e)
                yield from rec(depth + 1)
                verts.pop()
                edges.pop()

    yield from rec(0)


def enumerate_walks(G: Graph, x: int, y: int, k: int) -> list[SemiEdgeWalk]:
    return [W for W in iter_walks(G, x, k) if W.vertices[-1] == y]


def count_walks_by_enumeration(G: Graph, x: int, k: int) -> list[int]:
    """Number of length-``k`` walks from ``x`` to each end vertex, by brute force.

    Visits every walk one step at a time; nothing here touches ``Q``.
    """
    _check_caps(G, k)
    inc = _incident(G)
    counts = [0] * G.n
    stack = [(x, 0)]
    while stack:
        v, depth = stack.pop()
        if depth == k:
            counts[v] += 1
            continue
        for _, w in inc[v]:
            stack.append((v, depth + 1))
            stack.append((w, depth + 1))
    return counts


def walk_counts(G: Graph, k: int) -> list[list[int]]:
    """``|SW_k(G; x, y)|`` for all ``x, y`` as the exact matrix ``Q^k``."""
    return [list(row) for row in exact_powers(int_matrix(G), k)[k]]


def walk_count_sequences(G: Graph, k_max: int) -> list[list[list[int]]]:
    return exact_powers(int_matrix(G), k_max)


def closed_walks_through_edge(G: Graph, x: int, e: tuple[int, int], k: int) -> int:
    """Closed walks at ``x`` of length ``k`` that use edge ``e`` at least once."""
    u, v = e
    if not G.has_edge(u, v):
        raise MissingEdgeError(f"edge {tuple(sorted(e))} not in graph")
    with_e = walk_counts(G, k)[x][x]
    without_e = walk_counts(remove_edge(G, u, v), k)[x][x]
    return with_e - without_e


# ---------------------------------------------------------------------------
# dominance

@dataclass(frozen=True)
class DominanceVerdict:
    """Finite-depth comparison of two walk-count sequences ``a_k`` vs ``b_k``.

    ``strict`` and ``weak`` mean ``a_k <= b_k`` for every checked ``k``, with
    ``strict`` additionally having some ``a_k < b_k``. ``fails`` records the
    first ``k`` where ``a_k > b_k``.
    """

    relation: str
    first_strict_k: Optional[int]
    failure_k: Optional[int]
    depth_checked: int

    @property
    def holds(self) -> bool:
        return self.relation in ("strict", "weak")

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "first_strict_k": self.first_strict_k,
            "failure_k": self.failure_k,
            "depth_checked": self.depth_checked,
        }


def compare_sequences(a: Sequence[int], b: Sequence[int]) -> DominanceVerdict:
    if len(a) != len(b):
        raise ValueError("sequences must have equal length")
    first_strict = None
    for k, (x, y) in enumerate(zip(a, b)):
        if x > y:
            return DominanceVerdict("fails", None, k, len(a) - 1)
        if x < y and first_strict is None:
            first_strict = k
    relation = "strict" if first_strict is not None else "weak"
    return DominanceVerdict(relation, first_strict, None, len(a) - 1)


def default_depth(G: Graph) -> int:
    return 2 * G.n * G.n


def s_dominance(G: Graph, v: int, u: int, K_max: Optional[int] = None,
                powers: Optional[list] = None) -> DominanceVerdict:
    """Is ``(G; v)`` dominated by ``(G; u)`` for ``k = 0..K_max``?"""
    K_max = default_depth(G) if K_max is None else K_max
    if K_max < 1:
        raise ValueError("K_max must be at least 1")
    P = powers if powers is not None else walk_count_sequences(G, K_max)
    return compare_sequences([P[k][v][v] for k in range(K_max + 1)],
                             [P[k][u][u] for k in range(K_max + 1)])


def s_dominance_pair(G: Graph, x: int, v: int, u: int, K_max: Optional[int] = None,
                     powers: Optional[list] = None) -> DominanceVerdict:
    """Is ``(G; x, v)`` dominated by ``(G; x, u)`` for ``k = 0..K_max``?"""
    K_max = default_depth(G) if K_max is None else K_max
    if K_max < 1:
        raise ValueError("K_max must be at least 1")
    P = powers if powers is not None else walk_count_sequences(G, K_max)
    return compare_sequences([P[k][x][v] for k in range(K_max + 1)],
                             [P[k][x][u] for k in range(K_max + 1)])
