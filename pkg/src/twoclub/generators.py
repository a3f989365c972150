"""Seeded random graph families used by the CLI and the test-suite."""

from __future__ import annotations

import random
from itertools import combinations

from twoclub.graph import Graph


def gnp(n: int, p: float, seed: int | None = None) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_cograph(n: int, seed: int | None = None) -> Graph:
    """Cograph built by random disjoint-union / join merges of singletons."""
    rng = random.Random(seed)
    parts = [[v] for v in range(n)]
    edges = []
    while len(parts) > 1:
        a = parts.pop(rng.randrange(len(parts)))
        b = parts.pop(rng.randrange(len(parts)))
        if rng.random() < 0.5:
            edges.extend((u, v) for u in a for v in b)
        parts.append(a + b)
    return Graph(n, edges)


def random_cluster(n: int, seed: int | None = None, max_size: int = 5) -> Graph:
    rng = random.Random(seed)
    edges = []
    v = 0
    while v < n:
        size = min(n - v, rng.randint(1, max_size))
        block = range(v, v + size)
        edges.extend(combinations(block, 2))
        v += size
    return Graph(n, edges)


def with_apex(base: Graph, k: int, p: float = 0.5, seed: int | None = None) -> tuple[Graph, tuple[int, ...]]:
    """Add ``k`` new vertices with random edges to ``base`` and among
    themselves; returns the graph and the added (modulator) vertices."""
    rng = random.Random(seed)
    n = base.n + k
    extra = tuple(range(base.n, n))
    edges = list(base.edges())
    for a in extra:
        for v in range(n):
            if v < a and rng.random() < p:
                edges.append((v, a))
    return Graph(n, edges), extra


def random_tree(n: int, seed: int | None = None) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(v, rng.randrange(v)) for v in range(1, n)])


def triangle_free_complement(n: int, p: float, seed: int | None = None) -> Graph:
    """Complement of a random triangle-free graph: independence number <= 2."""
    rng = random.Random(seed)
    adj = [0] * n
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        if rng.random() < p and not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    full = (1 << n) - 1
    return Graph.from_masks([full & ~adj[v] & ~(1 << v) for v in range(n)])
