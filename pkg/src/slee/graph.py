"""Simple undirected graphs on vertices ``0..n-1``.

Graphs are immutable values: every edit returns a new graph. Adjacency is
kept both as neighbour sets and as integer bitmasks, which is what the
search code and the isomorphism checker work with.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

MAX_ORDER = 32
INF = -1  # diameter / distance marker for "unreachable"


class GraphError(ValueError):
    """Base class for malformed graphs and illegal edits."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class MissingEdgeError(GraphError):
    pass


class VertexError(GraphError):
    pass


class Graph6Error(GraphError):
    pass


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"graph order must be a positive integer, got {self.n!r}")
        if self.n > MAX_ORDER:
            raise GraphError(f"graph order {self.n} exceeds cap {MAX_ORDER}")
        normed = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            for w in (u, v):
                if not 0 <= w < self.n:
                    raise VertexError(f"vertex {w} out of range for n={self.n}")
            normed.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        edges = list(edges)
        seen = set()
        for u, v in edges:
            key = _norm(u, v)
            if key in seen:
                raise DuplicateEdgeError(f"edge {key} listed twice")
            seen.add(key)
        return cls(n, frozenset(edges))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as a bitmask."""
        m = [0] * self.n
        for u, v in self.edges:
            m[u] |= 1 << v
            m[v] |= 1 << u
        return tuple(m)

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        return tuple(
            frozenset(w for w in range(self.n) if mask >> w & 1) for mask in self.masks
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self.masks]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for v in range(1, self.n):
            for u in range(v):
                if not self.masks[u] >> v & 1:
                    yield (u, v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def empty_graph(n: int) -> Graph:
    return Graph(n)


def _check_vertex(G: Graph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < G.n:
            raise VertexError(f"vertex {v} out of range for n={G.n}")


def add_edge(G: Graph, u: int, v: int) -> Graph:
    _check_vertex(G, u, v)
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}")
    if G.has_edge(u, v):
        raise DuplicateEdgeError(f"edge {_norm(u, v)} already present")
    return Graph(G.n, G.edges | {_norm(u, v)})


def remove_edge(G: Graph, u: int, v: int) -> Graph:
    _check_vertex(G, u, v)
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}")
    if not G.has_edge(u, v):
        raise MissingEdgeError(f"edge {_norm(u, v)} not present")
    return Graph(G.n, G.edges - {_norm(u, v)})


def add_edges(G: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    for u, v in edges:
        G = add_edge(G, u, v)
    return G


def remove_edges(G: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    for u, v in edges:
        G = remove_edge(G, u, v)
    return G


def relabel(G: Graph, perm: list[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("relabelling must be a permutation of the vertex set")
    return Graph(G.n, frozenset(_norm(perm[u], perm[v]) for u, v in G.edges))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shifted = {(u + G.n, v + G.n) for u, v in H.edges}
    return Graph(G.n + H.n, G.edges | shifted)


# ---------------------------------------------------------------------------
# graph6

def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    raise Graph6Error(f"order {n} not supported by this encoder")


def write_graph6(G: Graph) -> str:
    bits = []
    for j in range(1, G.n):
        mj = G.masks[j]
        for i in range(j):
            bits.append(mj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    chunks = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chunks.append(chr(val + 63))
    return _encode_order(G.n) + "".join(chunks)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"illegal graph6 character {ch!r}")
    if s[0] == "~":
        raise Graph6Error(f"graph6 order above {MAX_ORDER} not supported")
    n = ord(s[0]) - 63
    if n == 0:
        raise Graph6Error("graph6 order 0 is not a valid graph here")
    if n > MAX_ORDER:
        raise Graph6Error(f"graph6 order {n} exceeds cap {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nchars:
        raise Graph6Error(f"truncated graph6 body: need {nchars} chars, got {len(body)}")
    if len(body) > nchars:
        raise Graph6Error(f"trailing garbage after graph6 body: {body[nchars:]!r}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - t)) & 1 for t in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("non-zero padding bits in graph6 body")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line.

    Errors are re-raised with the 1-based line number attached.
    """
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None


# ---------------------------------------------------------------------------
# structure

def bfs_distances(G: Graph, source: int) -> list[int]:
    dist = [INF] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in G.adj[v]:
            if dist[w] == INF:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distance_matrix(G: Graph) -> list[list[int]]:
    return [bfs_distances(G, v) for v in range(G.n)]


def components(G: Graph) -> int:
    seen = 0
    count = 0
    for v in range(G.n):
        if seen >> v & 1:
            continue
        count += 1
        frontier = 1 << v
        seen |= frontier
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= G.masks[low.bit_length() - 1]
                rest ^= low
            frontier = nxt & ~seen
            seen |= frontier
    return count


def is_connected(G: Graph) -> bool:
    return components(G) == 1


def is_bipartite(G: Graph) -> bool:
    colour = [-1] * G.n
    for s in range(G.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in G.adj[v]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def cut_vertices(G: Graph) -> frozenset:
    """Articulation points via iterative Hopcroft-Tarjan low-link DFS."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    found = set()
    timer = 0
    nbrs = [sorted(a) for a in G.adj]
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(nbrs[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    found.add(parent)
        if root_children >= 2:
            found.add(root)
    return frozenset(found)


@dataclass(frozen=True)
class StructuralSummary:
    connected: bool
    diameter: float  # math.inf when disconnected
    cut_vertices: frozenset
    eccentricities: tuple

    @property
    def radius(self) -> float:
        return min(self.eccentricities)

    def center(self) -> list[int]:
        r = self.radius
        return [v for v, e in enumerate(self.eccentricities) if e == r]


def eccentricities(G: Graph) -> list[float]:
    out = []
    for v in range(G.n):
        dist = bfs_distances(G, v)
        out.append(float("inf") if INF in dist else max(dist))
    return out


def structural_summary(G: Graph) -> StructuralSummary:
    ecc = eccentricities(G)
    connected = is_connected(G)
    diameter = max(ecc) if connected else float("inf")
    return StructuralSummary(
        connected=connected,
        diameter=int(diameter) if connected else diameter,
        cut_vertices=cut_vertices(G),
        eccentricities=tuple(int(e) if e != float("inf") else e for e in ecc),
    )


def diameter(G: Graph) -> float:
    return structural_summary(G).diameter


# ---------------------------------------------------------------------------
# isomorphism

def are_isomorphic(G: Graph, H: Graph) -> bool:
    """Exact isomorphism test by degree-pruned backtracking."""
    return find_isomorphism(G, H) is not None


def find_isomorphism(G: Graph, H: Graph) -> list[int] | None:
    """Return ``phi`` with ``uv in E(G) <=> phi[u]phi[v] in E(H)``, or None."""
    if G.n != H.n or G.m != H.m:
        return None
    dg, dh = G.degrees(), H.degrees()
    if sorted(dg) != sorted(dh):
        return None
    # refine by (degree, sorted neighbour degrees)
    sig_g = [(dg[v], tuple(sorted(dg[w] for w in G.adj[v]))) for v in range(G.n)]
    sig_h = [(dh[v], tuple(sorted(dh[w] for w in H.adj[v]))) for v in range(H.n)]
    if sorted(sig_g) != sorted(sig_h):
        return None

    # assign high-constraint vertices first, following edges where possible
    order = []
    placed = 0
    remaining = set(range(G.n))
    while remaining:
        best = max(
            remaining,
            key=lambda v: ((G.masks[v] & placed).bit_count(), dg[v], -v),
        )
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)

    n = G.n
    phi = [-1] * n
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        for c in range(n):
            if used >> c & 1 or sig_h[c] != sig_g[v]:
                continue
            ok = True
            for prev in order[:pos]:
                if (G.masks[v] >> prev & 1) != (H.masks[c] >> phi[prev] & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = c
            used |= 1 << c
            if extend(pos + 1):
                return True
            used &= ~(1 << c)
            phi[v] = -1
        return False

    return list(phi) if extend(0) else None


def isomorphism_classes(graphs: Iterable[Graph]) -> list[list[Graph]]:
    """Group graphs into isomorphism classes, preserving first-seen order."""
    classes: list[list[Graph]] = []
    for G in graphs:
        for cls in classes:
            if are_isomorphic(cls[0], G):
                cls.append(G)
                break
        else:
            classes.append([G])
    return classes


# ---------------------------------------------------------------------------
# surgery

def coalescence(G: Graph, x: int, H: Graph, y: int) -> Graph:
    """Identify vertex ``x`` of ``G`` with vertex ``y`` of ``H``.

    ``G`` keeps its labels; the vertices of ``H`` other than ``y`` follow as
    ``G.n, G.n+1, ...`` in their original order, and ``y`` becomes ``x``.
    """
    mapping = coalescence_map(G, x, H, y)
    edges = set(G.edges)
    edges.update(_norm(mapping[u], mapping[v]) for u, v in H.edges)
    return Graph(G.n + H.n - 1, frozenset(edges))


def coalescence_map(G: Graph, x: int, H: Graph, y: int) -> dict[int, int]:
    """Where each vertex of ``H`` lands in ``coalescence(G, x, H, y)``."""
    _check_vertex(G, x)
    _check_vertex(H, y)
    mapping = {}
    nxt = G.n
    for w in range(H.n):
        if w == y:
            mapping[w] = x
        else:
            mapping[w] = nxt
            nxt += 1
    return mapping


def attach_pendent_path(G: Graph, x: int, m: int) -> Graph:
    """Hang a path of ``m`` new vertices off ``x`` (new labels ``G.n..``)."""
    _check_vertex(G, x)
    if m < 0:
        raise GraphError(f"path order must be non-negative, got {m}")
    if m == 0:
        return G
    edges = set(G.edges)
    prev = x
    for t in range(G.n, G.n + m):
        edges.add((prev, t))
        prev = t
    return Graph(G.n + m, frozenset(edges))
