"""Named graph families: paths, cliques, the H_{d,j} class and G_n^r."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, GraphError, remove_edge


class FamilyError(GraphError):
    pass


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def complete_minus_edge(n: int) -> Graph:
    if n < 2:
        raise FamilyError(f"K_n - e needs n >= 2, got {n}")
    return remove_edge(complete(n), 0, 1)


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


# ---------------------------------------------------------------------------
# H_{d,j}

def half_diameter(d: int) -> int:
    return math.ceil(d / 2)


def check_h_bounds(n: int, d: int, j: int | None = None) -> None:
    if n <= 4:
        raise FamilyError(f"H-family needs n > 4, got n={n}")
    if not 2 < d < n - 1:
        raise FamilyError(f"H-family needs 2 < d < n-1, got d={d}, n={n}")
    if j is not None and not 1 <= j <= half_diameter(d):
        raise FamilyError(f"H-family needs 1 <= j <= ceil(d/2)={half_diameter(d)}, got j={j}")


def h_windows(d: int, j: int) -> list[int]:
    """Legal window starts ``i`` (clique vertex joined to ``v_i, v_{i+1}, v_{i+2}``).

    The nominal range is ``ceil(d/2)-j .. ceil(d/2)+j-2``; for odd ``d`` its top
    end can run past ``v_d``, so it is clipped to ``i <= d-2``.
    """
    dh = half_diameter(d)
    return list(range(max(0, dh - j), min(d - 2, dh + j - 2) + 1))


@dataclass(frozen=True)
class HFamilySpec:
    n: int
    d: int
    j: int
    assignment: tuple

    def __post_init__(self):
        check_h_bounds(self.n, self.d, self.j)
        if len(self.assignment) != self.n - self.d - 1:
            raise FamilyError(
                f"assignment needs n-d-1={self.n - self.d - 1} entries, got {len(self.assignment)}"
            )
        windows = h_windows(self.d, self.j)
        for i in self.assignment:
            if i not in windows:
                raise FamilyError(
                    f"window start {i} outside {windows[0]}..{windows[-1]} "
                    f"for d={self.d}, j={self.j}"
                )


def h_member(spec: HFamilySpec) -> Graph:
    """Path ``v_0..v_d`` on vertices ``0..d``; clique on ``d+1..n-1``."""
    n, d = spec.n, spec.d
    edges = {(i, i + 1) for i in range(d)}
    clique = range(d + 1, n)
    edges.update(itertools.combinations(clique, 2))
    for t, i in zip(clique, spec.assignment):
        edges.update({(i, t), (i + 1, t), (i + 2, t)})
    return Graph(n, frozenset(edges))


def h_assignments(n: int, d: int, j: int) -> Iterator[tuple]:
    check_h_bounds(n, d, j)
    return itertools.product(h_windows(d, j), repeat=n - d - 1)


def enumerate_h_family(n: int, d: int, j: int) -> Iterator[Graph]:
    for a in h_assignments(n, d, j):
        yield h_member(HFamilySpec(n, d, j, a))


def mirror_assignment(d: int, assignment: tuple) -> tuple:
    """Window starts after reversing the path (``v_i -> v_{d-i}``)."""
    return tuple(d - 2 - i for i in assignment)


def in_h_class(d: int, j: int, assignment: tuple, allow_mirror: bool = True) -> bool:
    windows = set(h_windows(d, j))
    if all(i in windows for i in assignment):
        return True
    return allow_mirror and all(i in windows for i in mirror_assignment(d, assignment))


def h_extremal(n: int, d: int) -> Graph:
    check_h_bounds(n, d)
    start = half_diameter(d) - 1
    return h_member(HFamilySpec(n, d, 1, (start,) * (n - d - 1)))


# ---------------------------------------------------------------------------
# G_n^r

@dataclass(frozen=True)
class GFamilySpec:
    n: int
    r: int
    path_orders: tuple

    @classmethod
    def balanced(cls, n: int, r: int) -> "GFamilySpec":
        if n < 2 or not 0 <= r <= n - 2:
            raise FamilyError(f"G_n^r needs n >= 2 and 0 <= r <= n-2, got n={n}, r={r}")
        k = n - r
        q, extra = divmod(r, k)
        return cls(n, r, tuple(q + 1 if t < extra else q for t in range(k)))

    def __post_init__(self):
        if self.n < 2 or not 0 <= self.r <= self.n - 2:
            raise FamilyError(f"G_n^r needs n >= 2 and 0 <= r <= n-2, got n={self.n}, r={self.r}")
        if len(self.path_orders) != self.n - self.r:
            raise FamilyError("one pendent path order per clique vertex is required")
        if sum(self.path_orders) != self.r:
            raise FamilyError(f"pendent path orders must total r={self.r}")
        if max(self.path_orders) - min(self.path_orders) > 1:
            raise FamilyError("pendent path orders must differ by at most 1")


def g_member(spec: GFamilySpec) -> Graph:
    k = spec.n - spec.r
    edges = set(itertools.combinations(range(k), 2))
    nxt = k
    for v, order in enumerate(spec.path_orders):
        prev = v
        for _ in range(order):
            edges.add((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(spec.n, frozenset(edges))


def g_extremal(n: int, r: int) -> Graph:
    """K_{n-r} with balanced pendent paths, longer ones on the lowest clique labels."""
    return g_member(GFamilySpec.balanced(n, r))
