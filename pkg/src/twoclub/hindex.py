"""Exact maximum 2-club for graphs of small h-index.

Only the at most ``k`` vertices of degree > k can have large neighborhoods.
The search guesses which of them are in the solution, then one center (or
nothing) per twin class, then, for classes that must be connected around
the guessed part, the exact surviving subset inside a radius-4 ball.
Every committed vertex pins the solution: vertices farther than two from a
pinned vertex are deleted ("cleaning").
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from twoclub import kernels
from twoclub.errors import BudgetError, TwoClubError
from twoclub.exact import SolveResult, SolveStats, _Timer
from twoclub.graph import Graph, ball_mask, mask_of, members
from twoclub.modulators import _Classes, guesses
from twoclub.params import h_index_of

DEFAULT_CAP = 2


@dataclass(frozen=True)
class GuessState:
    """Committed vertices ``fixed`` inside the surviving set ``alive``."""

    fixed: int
    alive: int

    def commit(self, g: Graph, add: int = 0, drop: int = 0) -> GuessState | None:
        """Pin ``add``, delete ``drop`` and clean; ``None`` if a pinned
        vertex would have to go."""
        alive = clean(g, self.alive & ~drop, self.fixed | add)
        if alive is None:
            return None
        return GuessState(self.fixed | add, alive)


def clean(g: Graph, alive: int, pinned: int) -> int | None:
    """Delete vertices at distance > 2 from a pinned vertex until nothing
    changes; ``None`` when that would delete a pinned vertex."""
    out = kernels.clean(g.handle, alive, pinned)
    return None if out < 0 else out


def _subsets_with(base: int, required: int) -> Iterator[int]:
    # subsets of base that contain required, largest first
    free = base & ~required
    sub = free
    while True:
        yield sub | required
        if not sub:
            return
        sub = (sub - 1) & free


def solve_hindex_xp(g: Graph, cap: int = DEFAULT_CAP) -> SolveResult:
    """Exact maximum 2-club in time polynomial for every fixed h-index."""
    k = h_index_of(g.degrees())
    if k > cap:
        raise BudgetError(f"h-index {k} exceeds the cap {cap}")
    high = tuple(v for v in range(g.n) if g.degree(v) > k)
    hmask = mask_of(high)
    stats = SolveStats(extra={"h_index": k, "high_degree": list(high)})
    best = 1 if g.n else 0

    def record(state: GuessState) -> None:
        nonlocal best
        stats.branch_nodes += 1
        if not kernels.is_s_club(g.handle, state.alive, 2):
            raise TwoClubError(f"h-index search: leaf set {members(state.alive)} is not a 2-club")
        if bin(state.alive).count("1") > bin(best).count("1"):
            best = state.alive

    with _Timer() as t:
        for guess in guesses(high):
            xmask = mask_of(guess)
            start = GuessState(0, g.all_mask & ~(hmask & ~xmask)).commit(g, add=xmask)
            if start is None:
                continue
            cls = _Classes.build(g, start.alive & ~xmask, xmask)
            conflicts = cls.conflict_masks()
            p = len(cls.sigs)

            def refine(state: GuessState, todo: list[tuple[int, int]]) -> None:
                # fix the surviving part of each conflicted class in turn
                if not todo:
                    record(state)
                    return
                i, c = todo[0]
                if not state.alive >> c & 1:
                    return
                area = ball_mask(g, c, 4, state.alive & ~xmask) & cls.members[i]
                for keep in _subsets_with(area, 1 << c):
                    stats.branch_nodes += 1
                    drop = cls.members[i] & ~keep
                    nxt = state.commit(g, add=keep, drop=drop)
                    if nxt is not None:
                        refine(nxt, todo[1:])

            def assign(state: GuessState, i: int, centers: dict[int, int]) -> None:
                if i == p:
                    used = mask_of(centers)
                    todo = [(j, c) for j, c in centers.items() if conflicts[j] & used]
                    refine(state, todo)
                    return
                stats.branch_nodes += 1
                nxt = state.commit(g, drop=cls.members[i])
                if nxt is not None:
                    assign(nxt, i + 1, centers)
                for c in members(cls.members[i] & state.alive):
                    nxt = state.commit(g, add=1 << c)
                    if nxt is not None:
                        assign(nxt, i + 1, {**centers, i: c})

            assign(start, 0, {})
    stats.elapsed_ms = t.ms
    return SolveResult(members(best), stats)
