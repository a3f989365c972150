import pytest

from corpus import random_corpus
from twoclub.errors import BudgetError
from twoclub.exact import dual_branching, oracle_max_2club
from twoclub.generators import gnp, random_tree
from twoclub.graph import Graph, verify_s_club
from twoclub.hindex import GuessState, clean, solve_hindex_xp
from twoclub.params import degree_stats


def test_star_and_cycle():
    star = Graph(8, [(0, i) for i in range(1, 8)])
    assert solve_hindex_xp(star).size == 8
    c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert solve_hindex_xp(c5).size == oracle_max_2club(c5).size == 5
    c6 = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert solve_hindex_xp(c6).size == 3


def test_matches_oracle_on_sparse_graphs():
    count = 0
    for seed in range(600):
        g = gnp(6 + seed % 7, 0.15 + 0.05 * (seed % 3), seed=seed)
        if degree_stats(g).h_index > 2:
            continue
        count += 1
        res = solve_hindex_xp(g)
        assert verify_s_club(g, 2, res.best)
        assert res.size == oracle_max_2club(g).size == dual_branching(g).size
    assert count > 100


def test_trees():
    for seed in range(40):
        g = random_tree(10, seed=seed)
        if degree_stats(g).h_index <= 2:
            assert solve_hindex_xp(g).size == oracle_max_2club(g).size


def test_cap():
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    with pytest.raises(BudgetError):
        solve_hindex_xp(k4)
    assert solve_hindex_xp(k4, cap=3).size == 4


def test_cleaning_is_idempotent_and_aborts():
    for g in random_corpus(30, seed=8):
        for pinned in (1, 0b101):
            once = clean(g, g.all_mask, pinned)
            if once is not None:
                assert clean(g, once, pinned) == once
    p5 = Graph(5, [(i, i + 1) for i in range(4)])
    state = GuessState(0, p5.all_mask)
    assert state.commit(p5, add=0b00001) == GuessState(1, 0b00111)
    assert state.commit(p5, add=0b10001) is None
