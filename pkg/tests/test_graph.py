import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import nx_is_s_club, to_nx
from twoclub.graph import (
    INF,
    Graph,
    GraphError,
    ball,
    bfs_distances,
    complement,
    components,
    delete,
    diameter,
    induce,
    twin_classes,
    verify_s_club,
    violating_pair,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def test_basic_accessors():
    g = Graph(4, [(0, 1), (1, 2), (2, 1)])
    assert g.m == 2
    assert g.neighbors(1) == (0, 2)
    assert g.degrees() == [1, 2, 1, 0]
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.has_edge(2, 1) and not g.has_edge(0, 2)


@pytest.mark.parametrize("n, edges", [(-1, []), (2, [(0, 2)]), (2, [(1, 1)])])
def test_rejects_malformed(n, edges):
    with pytest.raises(GraphError):
        Graph(n, edges)


def test_check_vertex_rejects_out_of_range():
    with pytest.raises(GraphError):
        Graph(3).neighbors(3)


def test_distances_and_balls():
    g = path(5)
    assert bfs_distances(g, 0) == [0, 1, 2, 3, 4]
    assert bfs_distances(Graph(2), 0) == [0, INF]
    assert ball(g, 2, 1) == (1, 2, 3)
    assert ball(g, 0, 0) == (0,)
    assert diameter(g) == 4


def test_verify_s_club_examples():
    p4 = path(4)
    assert verify_s_club(p4, 2, [0, 1, 2])
    assert not verify_s_club(p4, 2, [0, 1, 2, 3])
    assert verify_s_club(p4, 3, [0, 1, 2, 3])
    assert verify_s_club(p4, 2, [])
    assert violating_pair(p4, 2, [0, 1, 2, 3]) == (0, 3)
    # distance is measured inside the candidate: 0 and 2 are far without 1
    assert not verify_s_club(p4, 2, [0, 2])


def test_twin_classes_partition():
    g = Graph(5, [(0, 2), (1, 2), (0, 3), (1, 3), (3, 4)])
    part = twin_classes(g, [2, 3])
    assert [c.members for c in part.classes] == [(0, 1), (4,)]
    assert [c.signature for c in part.classes] == [(2, 3), (3,)]
    assert part.class_of() == {0: 0, 1: 0, 4: 1}


def test_induce_delete_complement_components():
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    sub, ids = induce(g, [1, 2, 4])
    assert ids == (1, 2, 4) and sub.edges() == [(0, 1)]
    rest, ids = delete(g, [1])
    assert ids == (0, 2, 3, 4) and rest.edges() == [(2, 3)]
    assert complement(complement(g)) == g
    assert components(g) == [(0, 1, 2), (3, 4)]


def test_pickle_round_trip():
    g = Graph(4, [(0, 1), (2, 3)])
    assert pickle.loads(pickle.dumps(g)) == g


@settings(max_examples=150, deadline=None)
@given(graphs(), st.data())
def test_verify_matches_networkx(g, data):
    cand = data.draw(st.lists(st.integers(0, max(g.n - 1, 0)), unique=True)) if g.n else []
    s = data.draw(st.integers(1, 4))
    assert verify_s_club(g, s, cand) == nx_is_s_club(g, s, cand)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_balls_match_networkx_distances(g):
    import networkx as nx

    h = to_nx(g)
    for v in range(g.n):
        lengths = nx.single_source_shortest_path_length(h, v, cutoff=2)
        assert ball(g, v, 2) == tuple(sorted(lengths))
