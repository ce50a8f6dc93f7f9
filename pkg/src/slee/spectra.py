"""Adjacency, Laplacian and signless Laplacian spectra and Estrada-type indices.

Eigenvalues come from a cyclic Jacobi solver (the matrices here are small,
dense and symmetric). The signless Laplacian Estrada index is available two
ways: as a sum of exponentials of eigenvalues, and as the exponential series
over exact integer spectral moments ``T_k = trace(Q^k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .graph import Graph

MatrixKind = Literal["adjacency", "laplacian", "signless_laplacian"]
KINDS = ("adjacency", "laplacian", "signless_laplacian")
_ALIASES = {"A": "adjacency", "L": "laplacian", "Q": "signless_laplacian"}

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
SERIES_TOL = 1e-10


class ConvergenceError(RuntimeError):
    pass


def _kind(kind: str) -> str:
    kind = _ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}; expected one of {KINDS}")
    return kind


def build_matrix(G: Graph, kind: str = "signless_laplacian") -> np.ndarray:
    kind = _kind(kind)
    A = np.zeros((G.n, G.n))
    for u, v in G.edges:
        A[u, v] = A[v, u] = 1.0
    if kind == "adjacency":
        return A
    D = np.diag(A.sum(axis=1))
    return D - A if kind == "laplacian" else D + A


def int_matrix(G: Graph, kind: str = "signless_laplacian") -> list[list[int]]:
    """The same matrix with Python ``int`` entries, for exact arithmetic."""
    return [[int(x) for x in row] for row in build_matrix(G, kind)]


@dataclass(frozen=True)
class Spectrum:
    values: tuple  # descending
    matrix_kind: str
    residual: float
    sweeps: int = 0

    def __len__(self) -> int:
        return len(self.values)


def jacobi_eigenvalues(M: np.ndarray, tol: float = JACOBI_TOL,
                       max_sweeps: int = JACOBI_MAX_SWEEPS) -> tuple[np.ndarray, float, int]:
    """Cyclic Jacobi on a real symmetric matrix.

    Returns ``(eigenvalues unsorted, final max off-diagonal magnitude, sweeps)``.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    a = np.array(M, dtype=float, copy=True)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    if n == 1:
        return a.diagonal().copy(), 0.0, 0

    iu = np.triu_indices(n, 1)
    for sweep in range(max_sweeps + 1):
        off = float(np.max(np.abs(a[iu])))
        if off < tol:
            return a.diagonal().copy(), off, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(
        f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal {off:.3e})"
    )


def eigenvalues(M: np.ndarray, tol: float = JACOBI_TOL, kind: str = "signless_laplacian") -> Spectrum:
    vals, residual, sweeps = jacobi_eigenvalues(M, tol)
    return Spectrum(tuple(sorted(vals.tolist(), reverse=True)), _kind(kind), residual, sweeps)


def spectrum(G: Graph, kind: str = "signless_laplacian", tol: float = JACOBI_TOL) -> Spectrum:
    return eigenvalues(build_matrix(G, kind), tol, kind)


@dataclass(frozen=True)
class EstradaIndices:
    EE: float
    LEE: float
    SLEE: float


def _exp_sum(values) -> float:
    return math.fsum(math.exp(x) for x in values)


def estrada_indices(G: Graph, tol: float = JACOBI_TOL) -> EstradaIndices:
    return EstradaIndices(
        EE=_exp_sum(spectrum(G, "adjacency", tol).values),
        LEE=_exp_sum(spectrum(G, "laplacian", tol).values),
        SLEE=_exp_sum(spectrum(G, "signless_laplacian", tol).values),
    )


def slee(G: Graph, tol: float = JACOBI_TOL) -> float:
    """Signless Laplacian Estrada index from the Jacobi spectrum of Q."""
    return _exp_sum(spectrum(G, "signless_laplacian", tol).values)


# ---------------------------------------------------------------------------
# exact moments

def matmul_exact(X: list[list[int]], Y: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*Y))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in X]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def exact_powers(M: list[list[int]], k_max: int) -> list[list[list[int]]]:
    """``[M^0, M^1, ..., M^k_max]`` in exact integer arithmetic."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    out = [identity(len(M))]
    for _ in range(k_max):
        out.append(matmul_exact(out[-1], M))
    return out


@dataclass(frozen=True)
class MomentTable:
    k_max: int
    traces: tuple
    power_entries: tuple  # power_entries[k][x][y] == (Q^k)[x][y]

    def T(self, k: int) -> int:
        return self.traces[k]


def moment_table(G: Graph, k_max: int) -> MomentTable:
    powers = exact_powers(int_matrix(G, "signless_laplacian"), k_max)
    traces = tuple(sum(P[i][i] for i in range(G.n)) for P in powers)
    frozen = tuple(tuple(tuple(row) for row in P) for P in powers)
    return MomentTable(k_max, traces, frozen)


def series_tail_bound(n: int, K: int) -> float:
    """Upper bound on ``sum_{k>K} T_k/k!`` using ``q_max <= 2(n-1)``.

    Returns ``inf`` while ``K + 2 <= 2(n-1)`` (the geometric bound is invalid).
    """
    qbar = 2 * (n - 1)
    if qbar == 0:
        return 0.0
    if K + 2 <= qbar:
        return math.inf
    head = Fraction(n * qbar ** (K + 1), math.factorial(K + 1))
    return float(head / (1 - Fraction(qbar, K + 2)))


def slee_series(G: Graph, tol: float = SERIES_TOL) -> float:
    """SLEE as the exponential series over exact moments, truncated at ``tol``."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    Q = int_matrix(G, "signless_laplacian")
    P = identity(G.n)
    total = Fraction(G.n)
    K = 0
    while series_tail_bound(G.n, K) >= tol:
        K += 1
        P = matmul_exact(P, Q)
        total += Fraction(sum(P[i][i] for i in range(G.n)), math.factorial(K))
    return float(total)
