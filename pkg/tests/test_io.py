import pytest

from twoclub.generators import gnp
from twoclub.graph import Graph
from twoclub.io import (
    ParseError,
    read_colors,
    read_graph,
    read_max2sat,
    read_solution,
    write_colors,
    write_graph,
    write_max2sat,
    write_solution,
)
from twoclub.reductions import ColoredGraph, Max2SatFormula


@pytest.mark.parametrize("suffix", [".txt", ".col"])
def test_graph_round_trip(tmp_path, suffix):
    for seed in range(10):
        g = gnp(8, 0.3, seed=seed)
        path = tmp_path / f"g{seed}{suffix}"
        write_graph(g, path)
        assert read_graph(path) == g


def test_isolated_vertices_survive_round_trip(tmp_path):
    g = Graph(5, [(0, 1)])
    write_graph(g, tmp_path / "g.txt")
    assert read_graph(tmp_path / "g.txt").n == 5


def test_edge_list_without_header(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("# a comment\n0 1\n\n1 2  # trailing\n2 3\n")
    g = read_graph(p)
    assert g.n == 4 and g.m == 3


def test_first_line_is_edge_when_counts_disagree(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("3 1\n0 1\n1 2\n")
    g = read_graph(p)
    assert g.n == 4 and g.has_edge(3, 1)


def test_dimacs(tmp_path):
    p = tmp_path / "g.col"
    p.write_text("c comment\np edge 3 2\ne 1 2\ne 2 3\n")
    g = read_graph(p)
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "name, text",
    [
        ("a.txt", "0 x\n"),
        ("b.txt", "1 1\n0 1\n"),
        ("c.txt", "0 1 2\n"),
        ("d.col", "e 1 2\n"),
        ("e.col", "p edge 2 1\ne 1 3\n"),
        ("f.col", "q 1\n"),
    ],
)
def test_parse_errors(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    with pytest.raises(ParseError):
        read_graph(p)


def test_solution_round_trip(tmp_path):
    p = tmp_path / "s.txt"
    write_solution((3, 1, 4), p)
    assert read_solution(p) == (3, 1, 4)
    p.write_text("1\n\n2\n")
    assert read_solution(p) == (1, 2)
    p.write_text("")
    assert read_solution(p) == ()
    p.write_text("1\n1\n")
    with pytest.raises(ParseError):
        read_solution(p)


def test_max2sat_round_trip(tmp_path):
    f = Max2SatFormula(3, ((1, -2), (-1, 3)), 2)
    p = tmp_path / "f.cnf"
    write_max2sat(f, p)
    assert read_max2sat(p) == f
    p.write_text("p 2 2 1\n1 2\n")
    with pytest.raises(ParseError):
        read_max2sat(p)


def test_colors_round_trip(tmp_path):
    g = Graph(3, [(0, 1)])
    cg = ColoredGraph(g, (1, 2, 1))
    p = tmp_path / "c.txt"
    write_colors(cg, p)
    assert read_colors(p, g) == cg
    p.write_text("0 1\n")
    with pytest.raises(ParseError):
        read_colors(p, g)
