"""Cotrees and the maximum 2-club dynamic program over the cotree of
``g - x`` for a cograph modulator ``x``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from twoclub.errors import ModulatorError, PreconditionError, TwoClubError
from twoclub.exact import SolveResult, SolveStats, _Timer
from twoclub.graph import Graph, ball_mask, is_s_club_mask, mask_of, members
from twoclub.modulators import MAX_MODULATOR, _check_cap, _Classes, _modulator_pairs_ok, guesses
from twoclub.params import find_induced_path

LEAF, SERIES, PARALLEL = "leaf", "series", "parallel"


class NotACographError(PreconditionError):
    def __init__(self, message, certificate):
        super().__init__(message)
        self.certificate = certificate


@dataclass(eq=False)
class CotreeNode:
    kind: str
    vertices: int  # bitset of the leaves below
    children: tuple[CotreeNode, ...] = ()
    vertex: int | None = None

    def postorder(self) -> Iterator[CotreeNode]:
        for c in self.children:
            yield from c.postorder()
        yield self

    def leaves(self) -> list[int]:
        return list(members(self.vertices))


@dataclass
class Cotree:
    n: int
    root: CotreeNode | None

    def nodes(self) -> list[CotreeNode]:
        return list(self.root.postorder()) if self.root else []

    def evaluate(self) -> Graph:
        """Rebuild the cograph: series nodes join, parallel nodes unite."""
        edges = []
        for node in self.nodes():
            if node.kind == SERIES:
                left, right = node.children
                edges.extend((a, b) for a in left.leaves() for b in right.leaves())
        return Graph(self.n, edges)


def _split(g: Graph, alive: int, complemented: bool) -> list[int]:
    parts = []
    rest = alive
    masks = g.masks
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                v = b.bit_length() - 1
                nxt |= (~masks[v] & ~b) if complemented else masks[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        parts.append(comp)
        rest &= ~comp
    return parts


def _binarize(kind: str, parts: list[CotreeNode]) -> CotreeNode:
    parts = sorted(parts, key=lambda p: p.vertices & -p.vertices)
    node = parts[0]
    for nxt in parts[1:]:
        node = CotreeNode(kind, node.vertices | nxt.vertices, (node, nxt))
    return node


def build_cotree(g: Graph, alive: int | None = None) -> Cotree:
    """Cotree of ``g[alive]``; raises :class:`NotACographError` with an
    induced P4 as certificate when the graph is not a cograph."""
    if alive is None:
        alive = g.all_mask

    def rec(sub: int) -> CotreeNode:
        if sub & (sub - 1) == 0:
            return CotreeNode(LEAF, sub, vertex=sub.bit_length() - 1)
        parts = _split(g, sub, complemented=False)
        if len(parts) > 1:
            return _binarize(PARALLEL, [rec(p) for p in parts])
        parts = _split(g, sub, complemented=True)
        if len(parts) > 1:
            return _binarize(SERIES, [rec(p) for p in parts])
        cert = find_induced_path(g, 4, sub)
        raise NotACographError(f"not a cograph: induced P4 {cert}", cert)

    return Cotree(g.n, rec(alive) if alive else None)


@dataclass
class GammaTable:
    """Per cotree node: class-subset bitmask -> (size, witness bitset).

    Missing keys stand for minus infinity.
    """

    guess: tuple[int, ...]
    classes: _Classes
    entries: dict[int, dict[int, tuple[int, int]]] = field(default_factory=dict)


def _shrink(g: Graph, cand: int, xmask: int) -> int:
    # exhaustively drop candidates farther than 2 from some X vertex
    while True:
        before = cand
        for xv in members(xmask):
            cand &= ball_mask(g, xv, 2, cand | xmask)
        if cand == before:
            return cand


def _inner_ok(g: Graph, cand: int, xmask: int) -> bool:
    alive = cand | xmask
    return all(ball_mask(g, u, 2, alive) == alive for u in members(cand))


def gamma_table(g: Graph, tree: Cotree, guess: tuple[int, ...], outside: int) -> GammaTable:
    """Fill the table bottom-up for one guess ``X`` (``x - X`` already removed)."""
    xmask = mask_of(guess)
    cls = _Classes.build(g, outside, xmask)
    consistent = [sum(1 << j for j in range(len(cls.sigs)) if cls.sigs[i] & cls.sigs[j]) for i in range(len(cls.sigs))]
    table = GammaTable(guess, cls)

    def present(node: CotreeNode) -> int:
        out = 0
        for v in members(node.vertices):
            out |= 1 << cls.of[v]
        return out

    for node in tree.nodes():
        row: dict[int, tuple[int, int]] = {0: (0, 0)}
        if node.kind == LEAF:
            v = node.vertex
            if ball_mask(g, v, 2, (1 << v) | xmask) & xmask == xmask:
                row[1 << cls.of[v]] = (1, 1 << v)
            table.entries[id(node)] = row
            continue
        left, right = (table.entries[id(c)] for c in node.children)
        combos: dict[int, tuple[int, int]] = {}
        if node.kind == PARALLEL:
            for t1, (v1, w1) in left.items():
                for t2, (v2, w2) in right.items():
                    if any(consistent[i] & t2 != t2 for i in members(t1)):
                        continue
                    key = t1 | t2
                    if v1 + v2 > combos.get(key, (-1, 0))[0]:
                        combos[key] = (v1 + v2, w1 | w2)
        avail = present(node)
        sub = avail
        while sub:
            cand = _shrink(g, node.vertices & cls.vertices(sub), xmask)
            if all(cand & cls.members[i] for i in members(sub)):
                if _inner_ok(g, cand, xmask):
                    row[sub] = (bin(cand).count("1"), cand)
                elif node.kind == SERIES:
                    best = max((e for e in (left.get(sub), right.get(sub)) if e), default=None)
                    if best:
                        row[sub] = best
                elif sub in combos:
                    row[sub] = combos[sub]
            sub = (sub - 1) & avail
        table.entries[id(node)] = row
    return table


def solve_cograph_modulator(g: Graph, x: Iterable[int], cap: int = MAX_MODULATOR) -> SolveResult:
    """Exact maximum 2-club when ``g - x`` is a cograph."""
    xs = g.check_set(x)
    xfull = mask_of(xs)
    outside = g.all_mask & ~xfull
    try:
        tree = build_cotree(g, outside)
    except NotACographError as exc:
        raise ModulatorError(f"g - x is not a cograph: induced P4 {exc.certificate}", exc.certificate) from None
    _check_cap(xs, cap)
    stats = SolveStats()
    with _Timer() as t:
        best = 1 if g.n else 0
        for guess in guesses(xs):
            gmask = mask_of(guess)
            if tree.root is None:
                if _modulator_pairs_ok(g, guess, gmask, ()) and bin(gmask).count("1") > bin(best).count("1"):
                    best = gmask
                continue
            table = gamma_table(g, tree, guess, outside)
            stats.table_entries += sum(len(r) for r in table.entries.values())
            for key, (value, witness) in table.entries[id(tree.root)].items():
                if value + len(guess) <= bin(best).count("1"):
                    continue
                sigs = (table.classes.sigs[i] for i in members(key))
                if not _modulator_pairs_ok(g, guess, gmask, sigs):
                    continue
                cand = witness | gmask
                if not is_s_club_mask(g, 2, cand):
                    raise TwoClubError(f"cograph DP: witness {members(cand)} is not a 2-club")
                best = cand
    stats.elapsed_ms = t.ms
    return SolveResult(members(best), stats)
