import pytest

from corpus import cluster_apex_corpus, cocluster_corpus
from twoclub.errors import BudgetError, ModulatorError, PreconditionError
from twoclub.exact import oracle_max_2club
from twoclub.generators import with_apex
from twoclub.graph import Graph, verify_s_club
from twoclub.modulators import (
    guesses,
    solve_cluster_modulator,
    solve_cocluster_modulator,
    vertex_cover_routine,
)

P3 = Graph(3, [(0, 1), (1, 2)])


def test_guess_order():
    assert list(guesses((1, 2))) == [(), (1,), (2,), (1, 2)]


def test_cluster_modulator_matches_oracle():
    for g, x in cluster_apex_corpus(60, seed=99):
        res = solve_cluster_modulator(g, x)
        assert verify_s_club(g, 2, res.best)
        assert res.size == oracle_max_2club(g).size


def test_cluster_modulator_rejects_invalid_modulator():
    with pytest.raises(ModulatorError) as info:
        solve_cluster_modulator(P3, [])
    assert info.value.obstruction == (0, 1, 2)


def test_cluster_modulator_cap():
    g = Graph(6, [(0, 1)])
    with pytest.raises(BudgetError):
        solve_cluster_modulator(g, [0, 1, 2, 3, 4])


def test_edgeless_graph_single_vertex():
    assert solve_cluster_modulator(Graph(4), []).size == 1
    assert vertex_cover_routine(Graph(4), []).size == 1


def test_vertex_cover_routine_matches_oracle():
    for i in range(80):
        g, x = with_apex(Graph(6 + i % 5), 1 + i % 3, p=0.5, seed=i)
        res = vertex_cover_routine(g, x)
        assert verify_s_club(g, 2, res.best)
        assert res.size == oracle_max_2club(g).size


def test_vertex_cover_routine_precondition():
    with pytest.raises(PreconditionError):
        vertex_cover_routine(P3, [0])


def test_cocluster_decisions():
    for g, x in cocluster_corpus(40, seed=5):
        opt = oracle_max_2club(g).size
        for ell in range(1, g.n + 2):
            dec = solve_cocluster_modulator(g, x, ell)
            assert dec.answer == (opt >= ell)
            if dec.answer:
                assert len(dec.witness) >= ell and verify_s_club(g, 2, dec.witness)


def test_cocluster_routes():
    k23 = Graph(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
    assert solve_cocluster_modulator(k23, [], 5).route == "co-cluster-is-2-club"
    assert solve_cocluster_modulator(with_apex(Graph(3), 1, p=1.0)[0], [3], 2).route == "vertex-cover"
    with pytest.raises(ModulatorError):
        solve_cocluster_modulator(Graph(4, [(0, 1), (2, 3)]), [], 1)
