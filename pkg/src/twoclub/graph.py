"""Undirected simple graphs on dense integer vertex ids, plus the distance
machinery (balls, twin classes, s-club verification) the solvers build on.

Vertex sets are passed around as sorted tuples of ids; internally most
routines work on Python-int bitsets where bit ``v`` stands for vertex ``v``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from twoclub import kernels
from twoclub.errors import TwoClubError

INF = math.inf

VertexSet = tuple[int, ...]


class GraphError(TwoClubError, ValueError):
    """Raised for malformed graphs or out-of-range vertex ids."""


def vset(vertices: Iterable[int]) -> VertexSet:
    """Normalize an iterable of ids into a sorted, duplicate-free tuple."""
    return tuple(sorted(set(vertices)))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> VertexSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Graph:
    """Immutable undirected simple graph with vertices ``0..n-1``."""

    __slots__ = ("n", "_adj", "_masks", "_m", "_handle")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._masks = tuple(mask_of(a) for a in adj)
        self._m = sum(len(a) for a in adj) // 2
        self._handle = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        n = len(masks)
        return cls(n, ((u, v) for u in range(n) for v in members(masks[u]) if u < v))

    @property
    def m(self) -> int:
        return self._m

    @property
    def masks(self) -> tuple[int, ...]:
        """Adjacency bitsets, one per vertex."""
        return self._masks

    @property
    def handle(self):
        """Backend-specific prepared adjacency for the bitset kernels."""
        if self._handle is None:
            self._handle = kernels.prepare(self._masks)
        return self._handle

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def adj(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> VertexSet:
        return tuple(sorted(self.adj(v)))

    def degree(self, v: int) -> int:
        return len(self.adj(v))

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj(u)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} not in graph with n={self.n}")

    def check_set(self, vs: Iterable[int]) -> VertexSet:
        out = vset(vs)
        for v in out:
            self.check_vertex(v)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __reduce__(self):
        return (Graph, (self.n, self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def bfs_distances(g: Graph, v: int) -> list[float]:
    """Shortest-path lengths from ``v``; unreachable vertices get ``INF``."""
    g.check_vertex(v)
    dist: list[float] = [INF] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g._adj[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def ball(g: Graph, v: int, t: int) -> VertexSet:
    """Closed ball of radius ``t`` around ``v``."""
    g.check_vertex(v)
    if t < 0:
        raise GraphError(f"negative radius {t}")
    return members(kernels.ball_mask(g.handle, g.all_mask, v, t))


def ball_mask(g: Graph, v: int, t: int, alive: int | None = None) -> int:
    """Bitset version of :func:`ball`, optionally restricted to ``g[alive]``."""
    if alive is None:
        alive = g.all_mask
    return kernels.ball_mask(g.handle, alive, v, t)


def diameter(g: Graph) -> float:
    if g.n <= 1:
        return 0
    best = 0
    for v in range(g.n):
        best = max(best, max(bfs_distances(g, v)))
    return best


@dataclass(frozen=True)
class TwinClass:
    signature: VertexSet
    members: VertexSet


@dataclass(frozen=True)
class TwinPartition:
    """Vertices outside ``modulator`` grouped by their neighborhood inside it."""

    modulator: VertexSet
    classes: tuple[TwinClass, ...]

    def class_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c.members}


def twin_classes(g: Graph, x: Iterable[int], within: Iterable[int] | None = None) -> TwinPartition:
    """Partition ``V - x`` (or ``within - x``) into twin classes w.r.t. ``x``.

    Classes are ordered by their smallest member.
    """
    xs = g.check_set(x)
    xmask = mask_of(xs)
    pool = range(g.n) if within is None else g.check_set(within)
    groups: dict[int, list[int]] = {}
    for v in pool:
        if xmask >> v & 1:
            continue
        groups.setdefault(g._masks[v] & xmask, []).append(v)
    classes = sorted(
        (TwinClass(members(sig), tuple(vs)) for sig, vs in groups.items()),
        key=lambda c: c.members[0],
    )
    return TwinPartition(xs, tuple(classes))


def is_s_club_mask(g: Graph, s: int, cand: int) -> bool:
    return kernels.is_s_club(g.handle, cand, s)


def verify_s_club(g: Graph, s: int, cand: Iterable[int]) -> bool:
    """True iff every pair of ``cand`` is within distance ``s`` in ``g[cand]``."""
    if s < 1:
        raise GraphError(f"s must be >= 1, got {s}")
    return kernels.is_s_club(g.handle, mask_of(g.check_set(cand)), s)


def violating_pair(g: Graph, s: int, cand: Iterable[int]) -> tuple[int, int] | None:
    """First pair (by ids) of ``cand`` at distance > s inside ``g[cand]``."""
    cmask = mask_of(g.check_set(cand))
    for u in members(cmask):
        far = cmask & ~kernels.ball_mask(g.handle, cmask, u, s)
        far &= ~((1 << (u + 1)) - 1)
        if far:
            return u, (far & -far).bit_length() - 1
    return None


def induce(g: Graph, s: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Induced subgraph relabeled to ``0..|s|-1``; ``id_map[new] == old``."""
    keep = g.check_set(s)
    new_id = {v: i for i, v in enumerate(keep)}
    edges = [(new_id[u], new_id[w]) for u in keep for w in g._adj[u] if w in new_id and u < w]
    return Graph(len(keep), edges), keep


def delete(g: Graph, s: Iterable[int]) -> tuple[Graph, VertexSet]:
    """``g - s`` relabeled, with the same id-map convention as :func:`induce`."""
    gone = mask_of(g.check_set(s))
    return induce(g, (v for v in range(g.n) if not gone >> v & 1))


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph.from_masks([full & ~m & ~(1 << v) for v, m in enumerate(g._masks)])


def components(g: Graph, alive: int | None = None) -> list[VertexSet]:
    """Connected components ordered by smallest vertex."""
    rest = g.all_mask if alive is None else alive
    out = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = kernels.ball_mask(g.handle, rest, v, g.n)
        out.append(members(comp))
        rest &= ~comp
    return out


def relabel(vertices: Iterable[int], id_map: Sequence[int]) -> VertexSet:
    return vset(id_map[v] for v in vertices)
