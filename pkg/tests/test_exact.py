from itertools import combinations

import pytest
from hypothesis import given, settings

from corpus import nx_max_2club, random_corpus, alpha2_corpus
from test_graph import graphs
from twoclub.errors import PreconditionError
from twoclub.exact import (
    dual_branching,
    heuristic_ball,
    independence2_solve,
    independence_at_most_two,
    oracle_max_2club,
    turing_kernel_solve,
)
from twoclub.generators import gnp
from twoclub.graph import Graph, verify_s_club

PETERSEN = Graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)
C5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
STAR = Graph(8, [(0, i) for i in range(1, 8)])
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=8))
def test_oracle_matches_networkx_enumeration(g):
    res = oracle_max_2club(g)
    assert verify_s_club(g, 2, res.best)
    assert res.size == nx_max_2club(g)


@pytest.mark.parametrize("g, size", [(PETERSEN, 10), (C5, 5), (STAR, 8), (P4, 3), (Graph(3), 1), (Graph(0), 0)])
def test_known_optima(g, size):
    for solver in (oracle_max_2club, dual_branching, turing_kernel_solve):
        res = solver(g)
        assert res.size == size and verify_s_club(g, 2, res.best)


def test_dual_orders_agree_and_respect_bound():
    for g in random_corpus(80, seed=3):
        lv = dual_branching(g, order="level")
        dp = dual_branching(g, order="depth")
        assert lv.size == dp.size
        assert lv.stats.branch_nodes <= 2 ** (g.n - lv.size + 1)


def test_dual_lower_bound_and_seed_semantics():
    opt = dual_branching(PETERSEN).size
    assert dual_branching(PETERSEN, lower_bound=opt).size <= opt
    assert dual_branching(P4, lower_bound=3).best == ()
    seeded = dual_branching(STAR, seed=[0, 1])
    assert seeded.size == 8
    with pytest.raises(PreconditionError):
        dual_branching(P4, seed=[0, 3])
    with pytest.raises(PreconditionError):
        dual_branching(P4, s=1)


def test_s_club_for_larger_s():
    p6 = Graph(6, [(i, i + 1) for i in range(5)])
    assert dual_branching(p6, s=3).size == 4
    assert dual_branching(p6, s=5).size == 6


def test_turing_parallel_matches_serial():
    for g in random_corpus(10, seed=9):
        assert turing_kernel_solve(g, jobs=2).size == turing_kernel_solve(g).size


def test_heuristic_ball_is_lower_bound():
    for g in random_corpus(40, seed=4):
        h = heuristic_ball(g)
        assert verify_s_club(g, 2, h.best)
        assert h.size <= dual_branching(g).size
    assert heuristic_ball(STAR).size == 8


def test_independence_two_algorithm():
    for g in alpha2_corpus(40, seed=21):
        assert independence_at_most_two(g)
        res = independence2_solve(g)
        assert verify_s_club(g, 2, res.best)
        assert res.size == dual_branching(g).size
        assert independence2_solve(g, s=3).size == dual_branching(g, s=3).size
    with pytest.raises(PreconditionError):
        independence2_solve(Graph(3))


def test_independence_two_on_c5():
    assert independence2_solve(C5).size == 5
