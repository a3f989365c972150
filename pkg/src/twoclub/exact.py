"""Exact and heuristic maximum s-club solvers on general graphs.

* :func:`oracle_max_2club` -- brute force over subsets of distance-2 balls,
  kept independent of the bitset kernels so it can serve as ground truth.
* :func:`dual_branching` -- delete one endpoint of a far pair, recurse.
* :func:`turing_kernel_solve` -- solve every distance-2 ball separately.
* :func:`heuristic_ball` -- largest ball of radius ``s // 2``.
* :func:`independence2_solve` -- polynomial algorithm for graphs whose
  independence number is at most two.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from twoclub import kernels
from twoclub.errors import PreconditionError, TwoClubError
from twoclub.graph import (
    Graph,
    VertexSet,
    ball_mask,
    complement,
    induce,
    is_s_club_mask,
    mask_of,
    members,
    relabel,
    vset,
)
from twoclub.params import is_triangle_free


@dataclass
class SolveStats:
    branch_nodes: int = 0
    table_entries: int = 0
    elapsed_ms: float = 0.0
    extra: dict = field(default_factory=dict)


@dataclass
class SolveResult:
    best: VertexSet
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def size(self) -> int:
        return len(self.best)


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self.start) * 1000.0


def _is_2club_pairwise(masks: tuple[int, ...], cand: int) -> bool:
    # adjacency or a common neighbor inside cand, pair by pair
    vs = members(cand)
    for i, u in enumerate(vs):
        nu = masks[u] & cand
        for v in vs[i + 1 :]:
            if not (nu >> v & 1) and not (nu & masks[v]):
                return False
    return True


def oracle_max_2club(g: Graph) -> SolveResult:
    """Maximum 2-club by exhaustive search inside every ``N_2[v]``.

    Exponential in the ball size; meant for n up to ~14.
    """
    with _Timer() as t:
        masks = g.masks
        best: tuple[int, ...] = (0,) if g.n else ()
        checked = 0
        for v in range(g.n):
            nbrs = masks[v]
            two = nbrs
            for w in members(nbrs):
                two |= masks[w]
            others = [u for u in members(two) if u != v]
            for size in range(len(others), len(best) - 1, -1):
                found = None
                for combo in combinations(others, size):
                    checked += 1
                    cand = mask_of(combo) | (1 << v)
                    if _is_2club_pairwise(masks, cand):
                        found = combo
                        break
                if found is not None:
                    if size + 1 > len(best):
                        best = vset(found + (v,))
                    break
    return SolveResult(best, SolveStats(branch_nodes=checked, elapsed_ms=t.ms))


def dual_branching(
    g: Graph,
    s: int = 2,
    lower_bound: int = 0,
    seed: Iterable[int] | None = None,
    order: str = "level",
) -> SolveResult:
    """Maximum s-club by branching on pairs at distance > s.

    Each search node picks the far pair with the largest combined degree and
    branches into deleting either endpoint. ``order="level"`` walks the tree
    breadth-first (merging equal vertex sets), which stops at the first
    depth holding a feasible set and so never visits more than
    ``2**(n - opt + 1) - 1`` nodes; ``order="depth"`` is the memory-light
    recursive variant that prunes against the incumbent.

    Only s-clubs strictly larger than ``max(lower_bound, |seed|)`` are
    searched for. If none exists the seed (or an empty set) is returned, so a
    result of size <= ``lower_bound`` means "no larger s-club".
    """
    if s < 2:
        raise PreconditionError("dual branching needs s >= 2")
    seed_mask = 0
    if seed is not None:
        seed_mask = mask_of(g.check_set(seed))
        if not is_s_club_mask(g, s, seed_mask):
            raise PreconditionError("seed set is not an s-club")
    if order not in ("level", "depth"):
        raise ValueError(f"unknown search order {order!r}")
    search = kernels.dual_levels if order == "level" else kernels.dual_branch
    bound = max(lower_bound, bin(seed_mask).count("1"))
    with _Timer() as t:
        size, mask, nodes = search(g.handle, g.all_mask, s, bound, seed_mask)
    return SolveResult(members(mask), SolveStats(branch_nodes=nodes, elapsed_ms=t.ms))


def _solve_ball(args):
    g, v, inner = args
    sub, id_map = induce(g, members(ball_mask(g, v, 2)))
    res = inner(sub)
    return v, relabel(res.best, id_map), res.stats


def turing_kernel_solve(
    g: Graph,
    inner: Callable[[Graph], SolveResult] = dual_branching,
    jobs: int = 1,
) -> SolveResult:
    """Maximum 2-club as the best ``inner`` answer over all ``g[N_2[v]]``.

    Balls no larger than the incumbent are skipped. With ``jobs > 1`` the
    balls are solved in worker processes (``inner`` must be picklable).
    """
    with _Timer() as t:
        best: VertexSet = (0,) if g.n else ()
        stats = SolveStats()
        order = sorted(range(g.n), key=lambda v: (-bin(ball_mask(g, v, 2)).count("1"), v))
        if jobs > 1 and g.n > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = pool.map(_solve_ball, [(g, v, inner) for v in order])
                for _, found, st in results:
                    stats.branch_nodes += st.branch_nodes
                    stats.table_entries += st.table_entries
                    if len(found) > len(best):
                        best = found
        else:
            for v in order:
                if bin(ball_mask(g, v, 2)).count("1") <= len(best):
                    continue
                _, found, st = _solve_ball((g, v, inner))
                stats.branch_nodes += st.branch_nodes
                stats.table_entries += st.table_entries
                if len(found) > len(best):
                    best = found
    stats.elapsed_ms = t.ms
    return SolveResult(best, stats)


def heuristic_ball(g: Graph, s: int = 2) -> SolveResult:
    """Largest closed ball of radius ``s // 2`` (smallest center on ties)."""
    if s < 2:
        raise PreconditionError("heuristic_ball needs s >= 2")
    with _Timer() as t:
        best = 0
        for v in range(g.n):
            b = ball_mask(g, v, s // 2)
            if bin(b).count("1") > bin(best).count("1"):
                best = b
    return SolveResult(members(best), SolveStats(elapsed_ms=t.ms))


def independence_at_most_two(g: Graph) -> bool:
    return is_triangle_free(complement(g))


def independence2_solve(g: Graph, s: int = 2) -> SolveResult:
    """Polynomial algorithm for graphs without an independent set of size 3.

    For each ordered pair (v, u): delete ``N(v) & N[u]`` and take the closed
    neighborhood of v plus the neighbors of u within distance s of v.
    """
    if s < 2:
        raise PreconditionError("independence2_solve needs s >= 2")
    if not independence_at_most_two(g):
        raise PreconditionError("graph has an independent set of size three")
    with _Timer() as t:
        full = g.all_mask
        if kernels.is_s_club(g.handle, full, s):
            return SolveResult(tuple(range(g.n)), SolveStats(elapsed_ms=0.0))
        masks = g.masks
        best = 1
        pairs = 0
        for v in range(g.n):
            for u in range(g.n):
                if u == v:
                    continue
                pairs += 1
                alive = full & ~(masks[v] & (masks[u] | (1 << u)))
                closed_v = (masks[v] & alive) | (1 << v)
                nbr_u = masks[u] & alive if alive >> u & 1 else 0
                within = kernels.ball_mask(g.handle, alive, v, s)
                cand = closed_v | (nbr_u & within)
                if bin(cand).count("1") <= bin(best).count("1"):
                    continue
                if not kernels.is_s_club(g.handle, cand, s):
                    raise TwoClubError(
                        f"candidate for pair (v={v}, u={u}) is not an {s}-club; "
                        "this contradicts the independence-two argument"
                    )
                best = cand
    return SolveResult(members(best), SolveStats(branch_nodes=pairs, elapsed_ms=t.ms))
