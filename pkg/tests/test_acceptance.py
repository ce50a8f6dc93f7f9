"""Exit criteria. Each test carries an ``acceptance`` marker; the terminal
summary prints one PASS/FAIL line per criterion."""

import math
import random
import time

import pytest

from slee import families as fam
from slee.graph import (Graph, are_isomorphic, cut_vertices, is_bipartite, parse_graph6)
from slee.search import ClassFilter, graph_from_index, sweep
from slee.spectra import estrada_indices, moment_table, slee, slee_series
from slee.verify import (connected_labeled, connected_unlabeled, dominance_preservation,
                         neighbor_bound_battery, random_connected_graph, random_graph,
                         relocation_battery, relocation_instances, verify_h_descent,
                         verify_moment_walk, verify_pendant_relocation)
from slee.walks import count_walks_by_enumeration, walk_counts

acceptance = pytest.mark.acceptance


@acceptance(1, "moment-walk identity: closed walks == T_k, n<=5, k<=6, exact")
def test_ac01_moment_walk_identity():
    start = time.perf_counter()
    pool = [G for n in range(1, 6) for G in connected_unlabeled(n)]
    assert len(pool) == 31
    for G in pool:
        table = moment_table(G, 6)
        for k in range(7):
            closed = sum(count_walks_by_enumeration(G, x, k)[x] for x in range(G.n))
            assert closed == table.T(k)
    assert time.perf_counter() - start < 60


@acceptance(2, "entry-level walk counts == (Q^k)_xy, n<=5, k<=6, exact")
def test_ac02_entry_level_counts():
    report = verify_moment_walk(5, 6)
    assert report.details["graphs"] == 31
    assert report.instances == sum(7 * G.n * G.n for n in range(1, 6)
                                   for G in connected_unlabeled(n))
    assert report.passed, report.failures[:3]


@acceptance(3, "SLEE eigen-sum vs series within 1e-9 relative, 1000 random connected n<=7")
def test_ac03_two_path_agreement():
    start = time.perf_counter()
    rng = random.Random(2024)
    worst = 0.0
    for _ in range(1000):
        G = random_connected_graph(rng, rng.randint(1, 7))
        a, b = slee(G), slee_series(G)
        worst = max(worst, abs(a - b) / a)
    assert worst < 1e-9
    assert time.perf_counter() - start < 60


@acceptance(4, "bipartite connected n<=6: |SLEE-LEE|/SLEE < 1e-8")
def test_ac04_bipartite_equality():
    checked = 0
    for n in range(1, 7):
        for G in connected_unlabeled(n):
            if not is_bipartite(G):
                continue
            idx = estrada_indices(G)
            assert abs(idx.SLEE - idx.LEE) / idx.SLEE < 1e-8
            checked += 1
    assert checked > 0


@acceptance(5, "edge addition raises SLEE by > 1e-9 on 500 random pairs, n<=8")
def test_ac05_edge_addition():
    rng = random.Random(5)
    pairs = 0
    while pairs < 500:
        G = random_graph(rng, rng.randint(2, 8))
        missing = list(G.non_edges())
        if not missing:
            continue
        u, v = rng.choice(missing)
        H = Graph(G.n, G.edges | {(u, v)})
        assert slee(H) - slee(G) > 1e-9
        pairs += 1


DIAMETER_CASES = [(n, d) for n in (5, 6, 7) for d in range(3, n - 1)]


@acceptance(6, "diameter theorem: unique maximizer is H_{d,1}, n in {5,6,7}")
@pytest.mark.parametrize("n,d", DIAMETER_CASES)
def test_ac06_diameter_theorem(n, d):
    start = time.perf_counter()
    report = sweep(n, ClassFilter.diameter_equals(d), fam.h_extremal(n, d))
    assert report.class_size > 0
    assert report.iso_classes == 1
    assert report.matched_prediction
    assert time.perf_counter() - start < 600


@acceptance(7, "small diameters: d=1 -> K_n, d=2 -> K_n - e, d=n-1 -> only P_n")
@pytest.mark.parametrize("n", [4, 5, 6])
def test_ac07_small_diameter_remarks(n):
    r1 = sweep(n, ClassFilter.diameter_equals(1), fam.complete(n))
    assert r1.matched_prediction and r1.class_size == 1
    r2 = sweep(n, ClassFilter.diameter_equals(2), fam.complete_minus_edge(n))
    assert r2.matched_prediction and r2.iso_classes == 1
    rp = sweep(n, ClassFilter.diameter_equals(n - 1), fam.path(n))
    # every labeled path is in the tie set and nothing else is in the class
    assert rp.matched_prediction
    assert rp.class_size == len(rp.tie_set) == math.factorial(n) // 2


CUT_CASES = [(n, r) for n in (5, 6, 7) for r in range(1, n - 2)]


@acceptance(8, "cut-vertex theorem: unique maximizer is G_n^r, n in {5,6,7}")
@pytest.mark.parametrize("n,r", CUT_CASES)
def test_ac08_cut_theorem(n, r):
    report = sweep(n, ClassFilter.cut_vertices_equals(r), fam.g_extremal(n, r))
    assert report.class_size > 0
    assert report.iso_classes == 1
    assert report.matched_prediction


@acceptance(8, "cut-vertex theorem: unique maximizer is G_n^r, n in {5,6,7}")
@pytest.mark.parametrize("n", [5, 6, 7])
def test_ac08_cut_endpoints(n):
    assert are_isomorphic(fam.g_extremal(n, 0), fam.complete(n))
    assert are_isomorphic(fam.g_extremal(n, n - 2), fam.path(n))


@acceptance(9, "H_{d,j} descent: every member <= SLEE(H_{d,1}), ties only if isomorphic")
@pytest.mark.parametrize("n,d,j", [(6, 4, 2), (7, 4, 2), (7, 5, 2), (7, 5, 3)])
def test_ac09_h_descent(n, d, j):
    report = verify_h_descent(n, d, j)
    assert report.members
    assert report.passed, report.failures
    top = report.extremal_slee
    for m in report.members:
        assert m["slee"] <= top * (1 + 1e-10)
        if abs(m["slee"] - top) <= 1e-10 * top:
            assert m["isomorphic_to_extremal"]


@acceptance(10, "pendant relocation: SLEE rises, order and cut count kept, 20 instances")
def test_ac10_relocation():
    instances = relocation_instances(20, seed=10)
    assert len(instances) == 20
    for args in instances:
        r = verify_pendant_relocation(*args)
        assert not r.degenerate
        assert r.slee_after > r.slee_before
        assert r.n_before == r.n_after
        assert r.cut_before == r.cut_after
    assert relocation_battery(20, seed=10).passed


@acceptance(11, "diametral path neighbour bound on all connected graphs n<=6")
def test_ac11_neighbor_bound():
    report = neighbor_bound_battery(6)
    assert report.passed, report.failures[:3]
    assert report.details["max_observed"] == 3


@acceptance(12, "dominance preserved under edge addition, n<=5, depth 12")
def test_ac12_dominance_preservation():
    report = dominance_preservation(5, 12)
    assert report.details["closed_checked"] > 0 and report.details["pair_checked"] > 0
    assert report.passed, report.failures[:3]


@acceptance(13, "sweep reports byte-identical across 1, 2, 8 workers (n=6)")
@pytest.mark.parametrize("flt", [ClassFilter.all_connected(), ClassFilter.diameter_equals(3),
                                 ClassFilter.cut_vertices_equals(2)])
def test_ac13_determinism(flt):
    outputs = {w: sweep(6, flt, workers=w).to_json() for w in (1, 2, 8)}
    assert outputs[1] == outputs[2] == outputs[8]
