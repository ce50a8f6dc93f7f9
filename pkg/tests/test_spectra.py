import math
import random

import numpy as np
import pytest
import sympy
from hypothesis import given

from slee.families import complete, cycle, path, star
from slee.graph import Graph, add_edge, is_bipartite
from slee.spectra import (ConvergenceError, build_matrix, eigenvalues, estrada_indices,
                          jacobi_eigenvalues, moment_table, series_tail_bound, slee,
                          slee_series, spectrum)
from slee.verify import connected_labeled, random_connected_graph

from conftest import graphs

E = math.e


def test_build_matrix_examples():
    K2 = complete(2)
    assert build_matrix(K2, "Q").tolist() == [[1, 1], [1, 1]]
    assert build_matrix(K2, "L").tolist() == [[1, -1], [-1, 1]]
    assert build_matrix(path(3), "Q").tolist() == [[1, 1, 0], [1, 2, 1], [0, 1, 1]]
    with pytest.raises(ValueError):
        build_matrix(K2, "X")


def test_eigenvalue_examples():
    assert spectrum(complete(2)).values == pytest.approx((2, 0), abs=1e-12)
    assert spectrum(complete(3)).values == pytest.approx((4, 1, 1), abs=1e-12)
    assert spectrum(path(3)).values == pytest.approx((3, 1, 0), abs=1e-12)


def test_p3_spectrum_against_characteristic_polynomial():
    x = sympy.symbols("x")
    Q = sympy.Matrix(build_matrix(path(3), "Q").astype(int).tolist())
    roots = sorted(float(r) for r in sympy.solve(Q.charpoly(x).as_expr(), x))
    assert roots == [0.0, 1.0, 3.0]
    assert sorted(spectrum(path(3)).values) == pytest.approx(roots, abs=1e-12)


@given(graphs(max_n=9))
def test_jacobi_matches_lapack(G):
    for kind in ("A", "L", "Q"):
        M = build_matrix(G, kind)
        s = eigenvalues(M, kind=kind)
        assert list(s.values) == sorted(s.values, reverse=True)
        assert s.residual < 1e-12
        ref = sorted(np.linalg.eigvalsh(M), reverse=True)
        assert np.allclose(s.values, ref, atol=1e-9)
        assert abs(sum(s.values) - np.trace(M)) < 1e-9 * G.n


@given(graphs(max_n=9))
def test_laplacians_psd(G):
    assert min(spectrum(G, "L").values) >= -1e-9
    assert min(spectrum(G, "Q").values) >= -1e-9


@given(graphs(min_n=2, max_n=8, connected=True))
def test_q_has_zero_eigenvalue_iff_bipartite(G):
    qmin = min(spectrum(G, "Q").values)
    assert (abs(qmin) < 1e-9) == is_bipartite(G)


def test_jacobi_rejects_bad_input():
    with pytest.raises(ValueError):
        jacobi_eigenvalues(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        jacobi_eigenvalues(np.array([[np.nan]]))
    with pytest.raises(ValueError):
        jacobi_eigenvalues(np.eye(2), tol=0)


def test_jacobi_iteration_cap():
    M = build_matrix(cycle(7), "Q")
    with pytest.raises(ConvergenceError):
        jacobi_eigenvalues(M, tol=1e-12, max_sweeps=1)


def test_jacobi_on_32_vertices():
    rng = random.Random(3)
    G = Graph(32, frozenset((i, j) for j in range(32) for i in range(j) if rng.random() < 0.3))
    s = spectrum(G)
    assert np.allclose(s.values, sorted(np.linalg.eigvalsh(build_matrix(G)), reverse=True),
                       atol=1e-9)


def test_estrada_examples():
    assert slee(complete(2)) == pytest.approx(1 + E ** 2, rel=1e-12)
    assert slee(complete(2)) == pytest.approx(8.3890560989, abs=1e-10)
    assert slee(complete(3)) == pytest.approx(E ** 4 + 2 * E, rel=1e-12)
    assert slee(complete(3)) == pytest.approx(60.0347137, abs=1e-7)
    idx = estrada_indices(path(3))
    assert idx.LEE == pytest.approx(1 + E + E ** 3, rel=1e-12)
    assert idx.SLEE == pytest.approx(idx.LEE, rel=1e-12)
    assert idx.LEE == pytest.approx(23.8038188, abs=1e-7)
    # A(K_2) spectrum {1, -1}
    assert estrada_indices(complete(2)).EE == pytest.approx(E + 1 / E, rel=1e-12)


def test_moment_table_k2():
    t = moment_table(complete(2), 2)
    assert t.traces == (2, 2, 4)
    assert t.power_entries[2] == ((2, 2), (2, 2))
    assert t.power_entries[0] == ((1, 0), (0, 1))


@given(graphs(max_n=8))
def test_moment_invariants(G):
    t = moment_table(G, 3)
    assert t.T(0) == G.n
    assert t.T(1) == 2 * G.m
    assert t.T(2) == sum(d * d for d in G.degrees()) + 2 * G.m
    for k, P in enumerate(t.power_entries):
        assert t.traces[k] == sum(P[i][i] for i in range(G.n))
        assert all(x >= 0 for row in P for x in row)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_second_moment_all_graphs(n):
    from slee.search import graph_from_index
    for idx in range(1 << (n * (n - 1) // 2)):
        G = graph_from_index(n, idx)
        assert moment_table(G, 2).T(2) == sum(d * d for d in G.degrees()) + 2 * G.m


def test_moments_are_exact_beyond_64_bits():
    t = moment_table(complete(7), 30)
    assert t.T(30) == 12 ** 30 + 6 * 5 ** 30  # Q(K_7) spectrum {12, 5 x6}
    assert t.T(30) > 2 ** 64


@given(graphs(max_n=7))
def test_float_moments_match_exact(G):
    q = np.array(spectrum(G).values)
    t = moment_table(G, 10)
    for k in range(11):
        exact = t.T(k)
        approx = float(np.sum(q ** k))
        assert abs(approx - exact) <= 1e-8 * max(1.0, exact)


def test_series_examples():
    assert slee_series(Graph(1)) == 1.0
    assert slee_series(complete(2)) == pytest.approx(8.3890560989, abs=1e-10)
    assert series_tail_bound(1, 0) == 0.0
    assert series_tail_bound(5, 3) == math.inf


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_series_matches_eigen_sum_all_connected(n):
    for G in connected_labeled(n):
        assert abs(slee_series(G) - slee(G)) < 1e-9


def test_series_random_relative_agreement():
    rng = random.Random(11)
    for _ in range(100):
        G = random_connected_graph(rng, rng.randint(1, 7))
        a, b = slee_series(G), slee(G)
        assert abs(a - b) <= 1e-9 * b


@pytest.mark.parametrize("G", [path(6), star(5), cycle(6), Graph(6, frozenset({(0, 1), (2, 3)}))])
def test_bipartite_slee_equals_lee(G):
    idx = estrada_indices(G)
    assert abs(idx.SLEE - idx.LEE) < 1e-8 * idx.SLEE


@given(graphs(min_n=2, max_n=8))
def test_edge_addition_increases_slee(G):
    for u, v in list(G.non_edges())[:3]:
        assert slee(add_edge(G, u, v)) - slee(G) > 1e-9
