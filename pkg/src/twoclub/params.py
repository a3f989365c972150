"""Structural parameters: degree statistics, degeneracy, greedy and exact
vertex-deletion modulators to cluster graphs / cographs, small dominating
sets."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from twoclub.graph import Graph, VertexSet, mask_of, vset


class Target(str, Enum):
    CLUSTER = "cluster"
    COGRAPH = "cograph"

    @property
    def path_length(self) -> int:
        return 3 if self is Target.CLUSTER else 4


@dataclass(frozen=True)
class DegreeStats:
    max_degree: int
    average_degree: float
    h_index: int


@dataclass(frozen=True)
class DegeneracyResult:
    value: int
    elimination_order: tuple[int, ...]


@dataclass(frozen=True)
class Modulator:
    target: Target
    vertices: VertexSet
    exact: bool

    @property
    def size(self) -> int:
        return len(self.vertices)


def h_index_of(degrees: list[int]) -> int:
    ordered = sorted(degrees, reverse=True)
    h = 0
    while h < len(ordered) and ordered[h] >= h + 1:
        h += 1
    return h


def degree_stats(g: Graph) -> DegreeStats:
    degs = g.degrees()
    if not degs:
        return DegreeStats(0, 0.0, 0)
    return DegreeStats(max(degs), 2 * g.m / g.n, h_index_of(degs))


def degeneracy(g: Graph) -> DegeneracyResult:
    """Minimum-degree peeling; ties broken by the smallest vertex id."""
    deg = g.degrees()
    removed = [False] * g.n
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    order = []
    value = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        value = max(value, d)
        for w in g.adj(v):
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return DegeneracyResult(value, tuple(order))


def check_elimination_order(g: Graph, order: tuple[int, ...], bound: int) -> bool:
    """True iff each vertex has <= ``bound`` later neighbors in ``order``."""
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    return all(sum(pos[w] > pos[v] for w in g.adj(v)) <= bound for v in order)


def find_induced_path(g: Graph, t: int, alive: int | None = None) -> tuple[int, ...] | None:
    """First induced path on ``t`` in {3, 4} vertices inside ``g[alive]``.

    Naive enumeration over ordered vertex tuples; fine at desk scale.
    """
    if t not in (3, 4):
        raise ValueError("only P3 and P4 obstructions are supported")
    if alive is None:
        alive = g.all_mask
    live = [v for v in range(g.n) if alive >> v & 1]
    live_set = set(live)
    for mid in live:
        nbrs = sorted(g.adj(mid) & live_set)
        for a, b in combinations(nbrs, 2):
            if g.has_edge(a, b):
                continue
            if t == 3:
                return (a, mid, b)
    if t == 3:
        return None
    # P4 = a-b-c-d with only the three path edges
    for b in live:
        for c in sorted(g.adj(b) & live_set):
            if c <= b:
                continue
            for a in sorted(g.adj(b) & live_set):
                if a == c or g.has_edge(a, c):
                    continue
                for d in sorted(g.adj(c) & live_set):
                    if d in (a, b) or g.has_edge(d, b) or g.has_edge(d, a):
                        continue
                    return (a, b, c, d)
    return None


def is_cluster(g: Graph, alive: int | None = None) -> bool:
    return find_induced_path(g, 3, alive) is None


def is_cograph(g: Graph, alive: int | None = None) -> bool:
    return find_induced_path(g, 4, alive) is None


def _alive_without(g: Graph, vertices) -> int:
    return g.all_mask & ~mask_of(vertices)


def modulator_greedy(g: Graph, target: Target | str) -> Modulator:
    """Delete every vertex of a found induced P3/P4 until none is left."""
    target = Target(target)
    alive = g.all_mask
    chosen: list[int] = []
    while (path := find_induced_path(g, target.path_length, alive)) is not None:
        chosen.extend(path)
        alive &= ~mask_of(path)
    return Modulator(target, vset(chosen), exact=False)


def modulator_exact(g: Graph, target: Target | str, budget: int) -> Modulator | None:
    """Smallest modulator of size <= ``budget``; ``None`` if there is none."""
    target = Target(target)
    if budget < 0:
        raise ValueError("budget must be non-negative")
    t = target.path_length

    def search(alive: int, k: int) -> list[int] | None:
        path = find_induced_path(g, t, alive)
        if path is None:
            return []
        if k == 0:
            return None
        for v in path:
            rest = search(alive & ~(1 << v), k - 1)
            if rest is not None:
                return [v] + rest
        return None

    # iterative deepening so the first hit is a minimum one
    for k in range(budget + 1):
        found = search(g.all_mask, k)
        if found is not None:
            return Modulator(target, vset(found), exact=True)
    return None


def validate_modulator(g: Graph, target: Target | str, x) -> tuple[int, ...] | None:
    """Obstruction left after deleting ``x``, or ``None`` when ``x`` is valid."""
    target = Target(target)
    return find_induced_path(g, target.path_length, _alive_without(g, g.check_set(x)))


def small_dominating_set(g: Graph, limit: int) -> VertexSet | None:
    """Minimum dominating set of size <= ``limit`` (brute force), else ``None``."""
    if limit > 3:
        raise ValueError("brute-force domination is limited to sets of size <= 3")
    full = g.all_mask
    closed = [m | (1 << v) for v, m in enumerate(g.masks)]
    if g.n == 0:
        return ()
    for size in range(1, limit + 1):
        for combo in combinations(range(g.n), size):
            cover = 0
            for v in combo:
                cover |= closed[v]
            if cover == full:
                return combo
    return None


def is_triangle_free(g: Graph) -> bool:
    masks = g.masks
    for u in range(g.n):
        for v in g.adj(u):
            if v > u and masks[u] & masks[v]:
                return False
    return True


def is_bipartite(g: Graph, alive: int | None = None) -> bool:
    if alive is None:
        alive = g.all_mask
    color: dict[int, int] = {}
    for start in range(g.n):
        if not alive >> start & 1 or start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adj(u):
                if not alive >> w & 1:
                    continue
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True

