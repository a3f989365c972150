"""Readers and writers for graphs, solutions, Max2SAT formulas and vertex
colorings.

Graph files are plain edge lists (0-based ids, ``#`` comments, optional
``n m`` header) unless the name ends in ``.col``, which selects DIMACS
(``p edge n m`` / ``e u v``, 1-based).
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from twoclub.errors import TwoClubError
from twoclub.graph import Graph, GraphError, VertexSet
from twoclub.reductions import ColoredGraph, Max2SatFormula


class ParseError(TwoClubError, ValueError):
    def __init__(self, path, lineno: int | None, message: str):
        where = f"{path}:{lineno}" if lineno else str(path)
        super().__init__(f"{where}: {message}")


def _data_lines(path, comment_prefixes=("#",)) -> list[tuple[int, list[str]]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(path, None, f"cannot read file ({exc.strerror})") from None
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip() if "#" in comment_prefixes else raw.strip()
        if not line or any(line.startswith(p) for p in comment_prefixes if p != "#"):
            continue
        out.append((lineno, line.split()))
    return out


def _ints(path, lineno: int, tokens: list[str], count: int) -> list[int]:
    if len(tokens) != count:
        raise ParseError(path, lineno, f"expected {count} integers, got {' '.join(tokens)!r}")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(path, lineno, f"non-integer token in {' '.join(tokens)!r}") from None


def _build(path, n: int, edges: list[tuple[int, int, int]]) -> Graph:
    for lineno, u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(path, lineno, f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ParseError(path, lineno, f"self-loop at vertex {u}")
    try:
        return Graph(n, [(u, v) for _, u, v in edges])
    except GraphError as exc:
        raise ParseError(path, None, str(exc)) from None


def read_edge_list(path) -> Graph:
    """The first line is a header ``n m`` only if exactly ``m`` lines follow
    and every id below it is smaller than ``n``; otherwise it is an edge."""
    lines = _data_lines(path)
    pairs = [(lineno, *_ints(path, lineno, toks, 2)) for lineno, toks in lines]
    if pairs:
        _, hn, hm = pairs[0]
        rest = pairs[1:]
        if hm == len(rest) and all(max(u, v) < hn for _, u, v in rest):
            return _build(path, hn, rest)
    n = 1 + max((max(u, v) for _, u, v in pairs), default=-1)
    if any(min(u, v) < 0 for _, u, v in pairs):
        bad = next(ln for ln, u, v in pairs if min(u, v) < 0)
        raise ParseError(path, bad, "negative vertex id")
    return _build(path, n, pairs)


def read_dimacs(path) -> Graph:
    n = None
    edges = []
    for lineno, toks in _data_lines(path, comment_prefixes=("c", "#")):
        if toks[0] == "p":
            if n is not None or len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise ParseError(path, lineno, "malformed problem line")
            n = _ints(path, lineno, toks[2:3], 1)[0]
        elif toks[0] == "e":
            if n is None:
                raise ParseError(path, lineno, "edge before problem line")
            u, v = _ints(path, lineno, toks[1:], 2)
            edges.append((lineno, u - 1, v - 1))
        else:
            raise ParseError(path, lineno, f"unknown line type {toks[0]!r}")
    if n is None:
        raise ParseError(path, None, "missing problem line")
    return _build(path, n, edges)


def read_graph(path) -> Graph:
    return read_dimacs(path) if str(path).endswith(".col") else read_edge_list(path)


def write_graph(g: Graph, path) -> None:
    if str(path).endswith(".col"):
        lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    else:
        lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    Path(path).write_text("\n".join(lines) + "\n")


def read_solution(path) -> VertexSet:
    out = []
    for lineno, toks in _data_lines(path):
        out.append(_ints(path, lineno, toks, 1)[0])
    if len(set(out)) != len(out):
        raise ParseError(path, None, "duplicate vertex in solution")
    return tuple(out)


def write_solution(vertices: Iterable[int], path) -> None:
    Path(path).write_text("".join(f"{v}\n" for v in vertices))


def read_max2sat(path) -> Max2SatFormula:
    lines = _data_lines(path, comment_prefixes=("c", "#"))
    if not lines or lines[0][1][0] != "p":
        raise ParseError(path, lines[0][0] if lines else None, "missing header 'p vars clauses k'")
    lineno, toks = lines[0]
    n_vars, n_clauses, k = _ints(path, lineno, toks[1:], 3)
    clauses = [tuple(_ints(path, ln, t, 2)) for ln, t in lines[1:]]
    if len(clauses) != n_clauses:
        raise ParseError(path, lineno, f"header announces {n_clauses} clauses, found {len(clauses)}")
    try:
        return Max2SatFormula(n_vars, tuple(clauses), k)
    except ValueError as exc:
        raise ParseError(path, None, str(exc)) from None


def write_max2sat(f: Max2SatFormula, path) -> None:
    lines = [f"p {f.n_vars} {len(f.clauses)} {f.k}"] + [f"{a} {b}" for a, b in f.clauses]
    Path(path).write_text("\n".join(lines) + "\n")


def read_colors(path, g: Graph) -> ColoredGraph:
    colors: dict[int, int] = {}
    for lineno, toks in _data_lines(path):
        v, c = _ints(path, lineno, toks, 2)
        if not 0 <= v < g.n:
            raise ParseError(path, lineno, f"vertex {v} not in graph with n={g.n}")
        if v in colors:
            raise ParseError(path, lineno, f"vertex {v} colored twice")
        colors[v] = c
    missing = [v for v in range(g.n) if v not in colors]
    if missing:
        raise ParseError(path, None, f"no color for vertices {missing[:5]}")
    try:
        return ColoredGraph(g, tuple(colors[v] for v in range(g.n)))
    except ValueError as exc:
        raise ParseError(path, None, str(exc)) from None


def write_colors(cg: ColoredGraph, path) -> None:
    Path(path).write_text("".join(f"{v} {c}\n" for v, c in enumerate(cg.colors)))
