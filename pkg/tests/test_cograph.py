import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import cograph_apex_corpus
from twoclub.cograph import (
    PARALLEL,
    SERIES,
    NotACographError,
    build_cotree,
    gamma_table,
    solve_cograph_modulator,
)
from twoclub.errors import ModulatorError
from twoclub.exact import oracle_max_2club
from twoclub.generators import random_cograph
from twoclub.graph import Graph, mask_of, members, verify_s_club

P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 14), st.integers(0, 10**6))
def test_cotree_round_trip(n, seed):
    g = random_cograph(n, seed=seed)
    tree = build_cotree(g)
    assert tree.evaluate() == g
    for node in tree.nodes():
        assert len(node.children) in (0, 2)


def test_cotree_shape():
    k2 = Graph(2, [(0, 1)])
    tree = build_cotree(k2)
    assert tree.root.kind == SERIES
    assert build_cotree(Graph(2)).root.kind == PARALLEL
    assert build_cotree(Graph(0)).root is None


def test_not_a_cograph_certificate():
    with pytest.raises(NotACographError) as info:
        build_cotree(P4)
    assert set(info.value.certificate) == {0, 1, 2, 3}
    with pytest.raises(ModulatorError):
        solve_cograph_modulator(P4, [])


def test_solver_matches_oracle():
    for g, x in cograph_apex_corpus(80, seed=123):
        res = solve_cograph_modulator(g, x)
        assert verify_s_club(g, 2, res.best)
        assert res.size == oracle_max_2club(g).size


def test_gamma_entries_are_consistent():
    for g, x in cograph_apex_corpus(30, seed=5):
        tree = build_cotree(g, g.all_mask & ~mask_of(x))
        if tree.root is None:
            continue
        for r in range(len(x) + 1):
            guess = x[:r]
            table = gamma_table(g, tree, guess, g.all_mask & ~mask_of(x))
            xmask = mask_of(guess)
            for node in tree.nodes():
                row = table.entries[id(node)]
                for key, (value, witness) in row.items():
                    assert bin(witness).count("1") == value
                    assert witness & ~node.vertices == 0
                    # witness realizes exactly the classes in the key
                    assert {table.classes.of[v] for v in members(witness)} == set(members(key))
                if node.kind == SERIES:
                    left, right = (table.entries[id(c)] for c in node.children)
                    for key in set(left) | set(right):
                        child = max(left.get(key, (-1, 0))[0], right.get(key, (-1, 0))[0])
                        assert row.get(key, (-1, 0))[0] >= child


def test_apex_over_cograph_example():
    # P4 = cograph (P3) + apex; the apex sees everything so the whole graph is a 2-club
    g = Graph(4, [(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)])
    assert solve_cograph_modulator(g, [3]).size == 4
