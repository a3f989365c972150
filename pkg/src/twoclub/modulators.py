"""Maximum 2-club with a vertex-deletion set (modulator) as parameter.

All three routines guess the part ``X'`` of the modulator inside the
solution and group the remaining vertices into twin classes with respect
to ``X'``. Sets of twin classes are encoded as bitmasks over class indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from twoclub.errors import BudgetError, ModulatorError, PreconditionError, TwoClubError
from twoclub.exact import SolveResult, SolveStats, _Timer, dual_branching
from twoclub.graph import (
    Graph,
    VertexSet,
    ball_mask,
    components,
    complement,
    delete,
    is_s_club_mask,
    mask_of,
    members,
)
from twoclub.params import Target, find_induced_path, validate_modulator

MAX_MODULATOR = 4

NEG_INF = float("-inf")


def guesses(x: VertexSet):
    """Subsets of ``x`` by increasing size, then lexicographically."""
    for r in range(len(x) + 1):
        yield from combinations(x, r)


def _check_cap(x: VertexSet, cap: int) -> None:
    if len(x) > cap:
        raise BudgetError(f"modulator of size {len(x)} exceeds the cap {cap}")


@dataclass
class _Classes:
    """Twin classes of ``pool`` w.r.t. the guessed ``xmask``."""

    sigs: list[int]
    members: list[int]
    of: dict[int, int]

    @classmethod
    def build(cls, g: Graph, pool: int, xmask: int) -> _Classes:
        by_sig: dict[int, int] = {}
        for v in members(pool):
            sig = g.masks[v] & xmask
            by_sig[sig] = by_sig.get(sig, 0) | (1 << v)
        ordered = sorted(by_sig.items(), key=lambda kv: kv[1] & -kv[1])
        sigs = [s for s, _ in ordered]
        mems = [m for _, m in ordered]
        of = {v: i for i, m in enumerate(mems) for v in members(m)}
        return cls(sigs, mems, of)

    def conflict_masks(self) -> list[int]:
        # classes i and j conflict when they share no neighbor in X'
        p = len(self.sigs)
        return [sum(1 << j for j in range(p) if not self.sigs[i] & self.sigs[j]) for i in range(p)]

    def vertices(self, tmask: int) -> int:
        out = 0
        for i in members(tmask):
            out |= self.members[i]
        return out


def _modulator_pairs_ok(g: Graph, xs: VertexSet, xmask: int, sigs: Iterable[int]) -> bool:
    """Each non-adjacent pair of ``xs`` has a common neighbor in X' or in
    the neighborhood signature of one chosen class."""
    sigs = list(sigs)
    for a, b in combinations(xs, 2):
        if g.masks[a] >> b & 1:
            continue
        if g.masks[a] & g.masks[b] & xmask:
            continue
        pair = (1 << a) | (1 << b)
        if not any(sig & pair == pair for sig in sigs):
            return False
    return True


def _discrepancy(name: str, witness: int) -> TwoClubError:
    return TwoClubError(f"{name}: reconstructed witness {members(witness)} is not a 2-club")


def solve_cluster_modulator(g: Graph, x: Iterable[int], cap: int = MAX_MODULATOR) -> SolveResult:
    """Exact maximum 2-club when ``g - x`` is a cluster graph.

    Dynamic program over the clusters: ``table[T']`` is the largest vertex
    set from the clusters processed so far whose twin classes are exactly
    ``T'`` and whose members are within distance two of everything in the
    set plus ``X'``. Extending by one cluster combines a previous entry with
    the cluster's contribution when no two classes across them conflict.
    """
    xs = g.check_set(x)
    obstruction = validate_modulator(g, Target.CLUSTER, xs)
    if obstruction is not None:
        raise ModulatorError(f"g - x contains an induced P3 {obstruction}", obstruction)
    _check_cap(xs, cap)
    xfull = mask_of(xs)
    stats = SolveStats()
    with _Timer() as t:
        best = 1 if g.n else 0
        for guess in guesses(xs):
            gmask = mask_of(guess)
            alive = g.all_mask & ~(xfull & ~gmask)
            reach = alive
            for xv in guess:
                reach &= ball_mask(g, xv, 2, alive)
            if gmask & ~reach:
                continue
            found = _cluster_dp(g, guess, gmask, reach & ~xfull, stats)
            if found is not None and bin(found).count("1") > bin(best).count("1"):
                best = found
    stats.elapsed_ms = t.ms
    return SolveResult(members(best), stats)


def _cluster_dp(g: Graph, guess: VertexSet, gmask: int, outside: int, stats: SolveStats) -> int | None:
    cls = _Classes.build(g, outside, gmask)
    p = len(cls.sigs)
    conflicts = cls.conflict_masks()
    clusters = components(g, outside)
    masks = g.masks

    def contribution(cmask: int, tmask: int) -> int | None:
        # C_i restricted to classes tmask; every non-adjacent (u, x) pair
        # needs a common neighbor inside that part or in X'
        part = cmask & cls.vertices(tmask)
        for i in members(tmask):
            if not part & cls.members[i]:
                return None
        near = part | gmask
        for u in members(part):
            missing = gmask & ~masks[u]
            for xv in members(missing):
                if not masks[u] & masks[xv] & near:
                    return None
        return part

    table: dict[int, int] = {0: 0}
    history: list[dict[int, tuple[int, int]]] = []
    for comp in clusters:
        cmask = mask_of(comp)
        present = 0
        for v in comp:
            present |= 1 << cls.of[v]
        options: dict[int, int] = {0: 0}
        sub = present
        while sub:
            part = contribution(cmask, sub)
            if part is not None:
                options[sub] = part
            sub = (sub - 1) & present
        new: dict[int, int] = {}
        back: dict[int, tuple[int, int]] = {}
        for prev, value in table.items():
            for tmask, part in options.items():
                if any(conflicts[i] & prev for i in members(tmask)):
                    continue
                key = prev | tmask
                cand = value + bin(part).count("1")
                if cand > new.get(key, -1):
                    new[key] = cand
                    back[key] = (prev, tmask)
        if len(new) > 1 << p:
            raise TwoClubError("cluster DP produced more keys than class subsets")
        stats.table_entries += len(new)
        table = new
        history.append(back)

    best_key = None
    for key, value in table.items():
        sigs = (cls.sigs[i] for i in members(key))
        if not _modulator_pairs_ok(g, guess, gmask, sigs):
            continue
        if best_key is None or value > table[best_key]:
            best_key = key
    if best_key is None:
        return None

    witness = gmask
    key = best_key
    for comp, back in zip(reversed(clusters), reversed(history)):
        prev, tmask = back[key]
        if tmask:
            witness |= mask_of(comp) & cls.vertices(tmask)
        key = prev
    if not is_s_club_mask(g, 2, witness):
        raise _discrepancy("cluster DP", witness)
    return witness


def vertex_cover_routine(g: Graph, x: Iterable[int], cap: int = MAX_MODULATOR) -> SolveResult:
    """Exact maximum 2-club when ``x`` is a vertex cover of ``g``.

    Outside vertices are independent, so two of them (or one of them and a
    modulator vertex) can only meet through ``X'``; twin classes are taken
    whole.
    """
    xs = g.check_set(x)
    xfull = mask_of(xs)
    outside = g.all_mask & ~xfull
    for v in members(outside):
        if g.masks[v] & outside:
            raise PreconditionError("g - x has an edge; x is not a vertex cover")
    _check_cap(xs, cap)
    stats = SolveStats()
    masks = g.masks
    with _Timer() as t:
        best = 1 if g.n else 0
        for guess in guesses(xs):
            gmask = mask_of(guess)
            cls = _Classes.build(g, outside, gmask)
            usable = []
            for i, sig in enumerate(cls.sigs):
                size = bin(cls.members[i]).count("1")
                if size >= 2 and not sig:
                    continue
                if any(not sig & masks[xv] & gmask for xv in members(gmask & ~sig)):
                    continue
                usable.append(i)
            compatible = {i: {j for j in usable if cls.sigs[i] & cls.sigs[j]} for i in usable}

            def extend(chosen: list[int], candidates: list[int]):
                stats.table_entries += 1
                yield chosen
                for pos, j in enumerate(candidates):
                    rest = [k for k in candidates[pos + 1 :] if k in compatible[j]]
                    yield from extend(chosen + [j], rest)

            for chosen in extend([], usable):
                if not _modulator_pairs_ok(g, guess, gmask, (cls.sigs[i] for i in chosen)):
                    continue
                cand = gmask | cls.vertices(mask_of(chosen))
                if bin(cand).count("1") > bin(best).count("1"):
                    if not is_s_club_mask(g, 2, cand):
                        raise _discrepancy("vertex cover routine", cand)
                    best = cand
    stats.elapsed_ms = t.ms
    return SolveResult(members(best), stats)


@dataclass
class Decision:
    answer: bool
    witness: VertexSet | None
    route: str
    stats: SolveStats = field(default_factory=SolveStats)


def solve_cocluster_modulator(g: Graph, x: Iterable[int], ell: int, cap: int = MAX_MODULATOR) -> Decision:
    """Decide whether a 2-club of size >= ``ell`` exists when ``g - x`` is a
    co-cluster graph.

    ``g - x`` is then edgeless (x is a vertex cover) or has diameter <= 2.
    """
    xs = g.check_set(x)
    rest, _ = delete(g, xs)
    obstruction = find_induced_path(complement(rest), 3)
    if obstruction is not None:
        raise ModulatorError("g - x is not a co-cluster graph", obstruction)
    outside = g.all_mask & ~mask_of(xs)
    if rest.m == 0:
        res = vertex_cover_routine(g, xs, cap)
        ok = res.size >= ell
        return Decision(ok, res.best if ok else None, "vertex-cover", res.stats)
    if ell <= g.n - len(xs):
        if not is_s_club_mask(g, 2, outside):
            raise _discrepancy("co-cluster shortcut", outside)
        return Decision(True, members(outside), "co-cluster-is-2-club")
    res = dual_branching(g, 2, lower_bound=ell - 1)
    ok = res.size >= ell
    return Decision(ok, res.best if ok else None, "dual-branching", res.stats)
