import pytest

from slee import families as fam
from slee.graph import Graph, add_edge
from slee.spectra import slee
from slee.verify import (VerificationError, build_relocation_graph, connected_unlabeled,
                         diametral_path, dominance_preservation, edge_addition_battery,
                         edge_shift_battery, relocation_battery, relocation_instances,
                         verify_diametral_neighbor_bound, verify_edge_shift,
                         verify_h_descent, verify_moment_walk, verify_pendant_relocation,
                         verify_theorem_cut, verify_theorem_diameter)


def test_unlabeled_counts():
    # connected graphs up to isomorphism: 1, 1, 2, 6, 21 (OEIS A001349)
    assert [len(connected_unlabeled(n)) for n in range(1, 6)] == [1, 1, 2, 6, 21]


def test_theorem_verifiers_small():
    assert verify_theorem_diameter(6, 3).matched_prediction
    assert verify_theorem_cut(6, 2).matched_prediction
    with pytest.raises(VerificationError):
        verify_theorem_diameter(6, 5)
    with pytest.raises(VerificationError):
        verify_theorem_cut(5, 3)


def test_edge_shift_precondition():
    with pytest.raises(VerificationError):
        verify_edge_shift(fam.path(3), 0, 1, [2])


def test_edge_shift_star_instance():
    # P_3 v=0 - u=1 - 2 plus isolated w=3; shifting gives P_4 vs K_{1,3}
    G = Graph(4, frozenset({(0, 1), (1, 2)}))
    r = verify_edge_shift(G, 0, 1, [3])
    assert r.hypotheses_met
    assert r.status == "confirmed"
    assert r.gap == pytest.approx(slee(fam.star(3)) - slee(fam.path(4)))
    assert r.gap > 0


def test_edge_shift_unmet_hypothesis():
    G = Graph(4, frozenset({(0, 1), (1, 2)}))
    r = verify_edge_shift(G, 1, 0, [3])  # centre does not dominate leaf from below
    assert r.status == "hypotheses_unmet"
    assert r.slee_u is None and r.passed


def test_batteries_small():
    assert edge_addition_battery(50, 6, seed=1).passed
    assert edge_shift_battery(50, 6, seed=1).passed
    assert relocation_battery(10, seed=1).passed
    assert verify_moment_walk(4, 4).passed
    assert dominance_preservation(4, 8).passed


def test_relocation_example():
    # H1 = K_3 with x=0, y=1; s=1; H2 = P_3 with u the end 0
    r = verify_pendant_relocation(fam.complete(3), 0, 1, fam.path(3), 0, 1, [1, 2])
    assert r.gap > 0 and r.n_before == r.n_after == 5
    assert r.cut_before == r.cut_after


def test_relocation_degenerate():
    r = verify_pendant_relocation(fam.complete(2), 0, 1, fam.path(3), 0, 1, [1, 2])
    assert r.degenerate and r.gap == 0 and r.passed


def test_relocation_preconditions():
    with pytest.raises(VerificationError):
        verify_pendant_relocation(fam.complete(3), 0, 1, fam.path(2), 0, 1, [1, 2])
    with pytest.raises(VerificationError):
        verify_pendant_relocation(fam.path(3), 0, 2, fam.path(3), 0, 1, [1, 2])
    with pytest.raises(VerificationError):
        verify_pendant_relocation(fam.complete(3), 0, 1, fam.path(4), 0, 1, [2, 3])


def test_relocation_graph_shape():
    H1, x, y, H2, u, s, route = relocation_instances(1, seed=5)[0]
    G, after, moved = build_relocation_graph(H1, x, y, H2, u, s, route)
    assert moved == H1.n - 2
    assert G.n == H1.n + (s - 1) + H2.n - 1
    assert after.degree(y) == (2 if s > 1 else 1)


@pytest.mark.parametrize("args", [(7, 4, 2), (6, 4, 2)])
def test_h_descent_examples(args):
    r = verify_h_descent(*args)
    assert r.passed
    isos = [m for m in r.members if m["isomorphic_to_extremal"]]
    assert isos and all(m["slee"] <= r.extremal_slee * (1 + 1e-10) for m in r.members)


def test_h_descent_vacuous():
    r = verify_h_descent(7, 4, 1)
    assert r.vacuous and r.passed


def test_neighbor_bound_examples():
    r = verify_diametral_neighbor_bound(fam.h_extremal(7, 4))
    assert r.max_path_neighbors == 3 and r.passed
    r = verify_diametral_neighbor_bound(fam.path(6))
    assert r.max_path_neighbors == 0
    with pytest.raises(VerificationError):
        verify_diametral_neighbor_bound(Graph(3, frozenset({(0, 1)})))
    with pytest.raises(VerificationError):
        verify_diametral_neighbor_bound(fam.complete(4))


def test_diametral_path_is_lexicographically_first():
    G = fam.cycle(6)
    assert diametral_path(G) == [0, 1, 2, 3]
