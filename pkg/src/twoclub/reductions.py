"""Instance generators for the hardness reductions to 2-Club, with forward
witness mapping and structural self-checks.

Every generated vertex carries a unique label ``family`` or
``family:detail`` (e.g. ``Big1:17``, ``e:0,2``, ``wa:3``); tests and the CLI
address gadget families through :meth:`ReducedInstance.family`.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Iterable, Sequence

from twoclub.errors import BudgetError, InvalidWitnessError, PreconditionError
from twoclub.graph import Graph, VertexSet, ball_mask, mask_of, vset
from twoclub.params import degeneracy, check_elimination_order, degree_stats, is_bipartite, small_dominating_set

DEFAULT_BUDGET = 200_000
BUDGET_ENV = "TWO_CLUB_BUDGET"


class ReductionKind(str, Enum):
    CLIQUE_COVER3 = "clique_cover3"
    DOMINATION2 = "domination2"
    BIPARTITE_PLUS_ONE = "bipartite_plus_one"
    MCC_HINDEX = "mcc_hindex"
    MCC_DEGENERACY = "mcc_degeneracy"
    AVG_DEGREE_PAD = "avg_degree_pad"


@dataclass(frozen=True)
class Max2SatFormula:
    """Clauses of two signed, 1-based variable literals (negative = negated)."""

    n_vars: int
    clauses: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self):
        if self.n_vars < 1:
            raise PreconditionError("formula needs at least one variable")
        seen = set()
        for clause in self.clauses:
            if len(clause) != 2:
                raise PreconditionError(f"clause {clause} does not have exactly two literals")
            a, b = clause
            for lit in clause:
                if lit == 0 or abs(lit) > self.n_vars:
                    raise PreconditionError(f"literal {lit} out of range for {self.n_vars} variables")
            if a == b:
                raise PreconditionError(f"clause {clause} repeats a literal")
            key = frozenset(clause)
            if key in seen:
                raise PreconditionError(f"clause {clause} occurs twice")
            seen.add(key)
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))

    def satisfied(self, assignment: Sequence[bool]) -> list[int]:
        """Indices of the clauses satisfied by ``assignment[var - 1]``."""
        if len(assignment) != self.n_vars:
            raise InvalidWitnessError(f"assignment has {len(assignment)} values, expected {self.n_vars}")

        def true(lit: int) -> bool:
            return bool(assignment[abs(lit) - 1]) == (lit > 0)

        return [i for i, (a, b) in enumerate(self.clauses) if true(a) or true(b)]

    def max_satisfied(self) -> int:
        return max(len(self.satisfied(bits)) for bits in product((False, True), repeat=self.n_vars))


@dataclass(frozen=True)
class ColoredGraph:
    graph: Graph
    colors: tuple[int, ...]  # colors[v] in 1..k

    def __post_init__(self):
        if len(self.colors) != self.graph.n:
            raise PreconditionError("one color per vertex required")
        if any(c < 1 for c in self.colors):
            raise PreconditionError("colors start at 1")
        object.__setattr__(self, "colors", tuple(self.colors))

    def is_multicolored_clique(self, vs: Iterable[int], k: int) -> bool:
        vs = vset(vs)
        if len(vs) != k or len({self.colors[v] for v in vs}) != k:
            return False
        return all(self.graph.has_edge(a, b) for a, b in combinations(vs, 2))


@dataclass
class ReducedInstance:
    graph: Graph
    ell: int
    kind: ReductionKind
    labels: tuple[str, ...]
    source: str
    source_instance: Any = None
    k: int | None = None
    meta: dict = field(default_factory=dict)

    def index(self) -> dict[str, int]:
        return {lab: v for v, lab in enumerate(self.labels)}

    def family(self, name: str) -> VertexSet:
        return tuple(v for v, lab in enumerate(self.labels) if lab.split(":", 1)[0] == name)

    def ids(self, labels: Iterable[str]) -> VertexSet:
        idx = self.index()
        return vset(idx[lab] for lab in labels)


def vertex_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


def _guard(count: int, budget: int | None, what: str) -> None:
    limit = vertex_budget(budget)
    if count > limit:
        raise BudgetError(f"{what} would have {count} vertices, above the budget of {limit}")


class _Builder:
    def __init__(self):
        self.labels: list[str] = []
        self.edges: list[tuple[int, int]] = []
        self.ids: dict[str, int] = {}

    def add(self, label: str) -> int:
        v = len(self.labels)
        self.labels.append(label)
        self.ids[label] = v
        return v

    def group(self, prefix: str, count: int) -> list[int]:
        return [self.add(f"{prefix}:{i}") for i in range(count)]

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def join(self, a: Iterable[int], b: Iterable[int]) -> None:
        b = list(b)
        for u in a:
            for v in b:
                self.edges.append((u, v))

    def clique(self, vs: Iterable[int]) -> None:
        self.edges.extend(combinations(list(vs), 2))

    def graph(self) -> Graph:
        return Graph(len(self.labels), self.edges)


def _pads(n: int, expert_pad: int | None, meta: dict) -> tuple[int, int]:
    """(big, medium) pad sizes: n^5 and n^3 unless overridden."""
    if expert_pad is None:
        meta["equivalence_guaranteed"] = True
        return n**5, n**3
    if expert_pad < 1:
        raise PreconditionError("expert pad size must be positive")
    meta["equivalence_guaranteed"] = False
    meta["warning"] = f"pads shrunk to {expert_pad}; equivalence not guaranteed"
    return expert_pad, expert_pad


def gen_clique_cover3(g: Graph, k: int, budget: int | None = None, expert_pad: int | None = None) -> ReducedInstance:
    """Clique -> 2-Club on graphs covered by three cliques, diameter three."""
    n = g.n
    if n < 2 or not 0 <= k <= n:
        raise PreconditionError("need n >= 2 and 0 <= k <= n")
    meta: dict = {}
    big, med = _pads(n, expert_pad, meta)
    _guard(2 * big + 2 * n + 2 * g.m + n * med, budget, "clique_cover3 instance")
    b = _Builder()
    v1 = [b.add(f"V1:{v}") for v in range(n)]
    v2 = [b.add(f"V2:{v}") for v in range(n)]
    big1 = b.group("Big1", big)
    big2 = b.group("Big2", big)
    ve = []
    for u, v in g.edges():
        for a, c in ((u, v), (v, u)):
            e = b.add(f"e:{a},{c}")
            ve.append(e)
            b.edge(v1[a], e)
            b.edge(e, v2[c])
    for v in range(n):
        fan = b.group(f"VE:{v}", med)
        ve.extend(fan)
        b.join((v1[v], v2[v]), fan)
    b.clique(v1 + big1)
    b.clique(v2 + big2)
    b.clique(ve)
    b.clique(big1 + big2)
    ell = 2 * big + k * med + 2 * k + 2 * math.comb(k, 2)
    return ReducedInstance(b.graph(), ell, ReductionKind.CLIQUE_COVER3, tuple(b.labels), f"clique n={n} m={g.m} k={k}", g, k, meta)


def gen_domination2(g: Graph, k: int, budget: int | None = None) -> ReducedInstance:
    """Clique -> 2-Club on graphs with a dominating pair, diameter three."""
    n = g.n
    if n < 2 or not 0 <= k <= n:
        raise PreconditionError("need n >= 2 and 0 <= k <= n")
    if any(d == 0 for d in g.degrees()):
        raise PreconditionError("source graph has an isolated vertex")
    _guard(n + g.m + n + 3, budget, "domination2 instance")
    b = _Builder()
    orig = [b.add(f"V:{v}") for v in range(n)]
    edge_vs = []
    for u, v in g.edges():
        e = b.add(f"e:{u},{v}")
        edge_vs.append(e)
        b.edge(e, orig[u])
        b.edge(e, orig[v])
    cs = b.group("C", n + 2)
    b.clique(cs + edge_vs)
    star = b.add("v*")
    b.join([star], orig)
    ell = (n + 2) + g.m + k
    return ReducedInstance(b.graph(), ell, ReductionKind.DOMINATION2, tuple(b.labels), f"clique n={n} m={g.m} k={k}", g, k, {"equivalence_guaranteed": True})


def gen_bipartite_plus_one(f: Max2SatFormula, budget: int | None = None, expert_pad: int | None = None) -> ReducedInstance:
    """Maximum 2-SAT -> 2-Club on graphs that are bipartite after deleting v*."""
    n = f.n_vars
    if n < 2:
        raise PreconditionError("need at least two variables")
    meta: dict = {}
    big, med = _pads(n, expert_pad, meta)
    _guard(len(f.clauses) + n * big + 2 * n + 2 * n * med + 1, budget, "bipartite_plus_one instance")
    b = _Builder()
    clause_vs = b.group("c", len(f.clauses))
    xt = [b.add(f"xt:{x}") for x in range(1, n + 1)]
    xf = [b.add(f"xf:{x}") for x in range(1, n + 1)]
    layer1 = xt + xf
    fill = []
    for x in range(n):
        pad = b.group(f"F:{x + 1}", big)
        fill.extend(pad)
        b.join(pad, (xt[x], xf[x]))
    for x in range(n):
        for j in range(med):
            t = b.add(f"xt2:{x + 1}:{j}")
            b.join([t], (w for w in layer1 if w != xf[x]))
        for j in range(med):
            fv = b.add(f"xf2:{x + 1}:{j}")
            b.join([fv], (w for w in layer1 if w != xt[x]))
    star = b.add("v*")
    b.join([star], clause_vs + fill + layer1)
    for c, clause in zip(clause_vs, f.clauses):
        for lit in clause:
            b.edge(c, xt[lit - 1] if lit > 0 else xf[-lit - 1])
    ell = n * big + n * med + n + f.k + 1
    return ReducedInstance(
        b.graph(), ell, ReductionKind.BIPARTITE_PLUS_ONE, tuple(b.labels),
        f"max2sat vars={n} clauses={len(f.clauses)} k={f.k}", f, f.k, meta,
    )


def _mcc_counts(n: int, m: int, k: int, color_vs: int, med: int) -> tuple[int, int]:
    size = n * (3 * n + 3) + 4 * med + 7 + m + color_vs
    ell = k * (3 * n + 3) + 4 * med + 7 + math.comb(k, 2) + color_vs
    return size, ell


def gen_mcc(
    cg: ColoredGraph,
    k: int,
    variant: str = "hindex",
    budget: int | None = None,
    expert_pad: int | None = None,
) -> ReducedInstance:
    """Multicolored Clique -> 2-Club with h-index <= k + 7 (``hindex``) or
    degeneracy five (``degeneracy``)."""
    if variant not in ("hindex", "degeneracy"):
        raise PreconditionError(f"unknown variant {variant!r}")
    g, colors = cg.graph, cg.colors
    n = g.n
    if k < 1 or any(c > k for c in colors):
        raise PreconditionError("colors must lie in 1..k")
    if set(colors) != set(range(1, k + 1)):
        raise PreconditionError("every color 1..k needs at least one vertex")
    meta: dict = {}
    _, med = _pads(n, expert_pad, meta)
    if variant == "hindex":
        color_keys = [(i,) for i in range(1, k + 1)]
    else:
        color_keys = [(v, w) for v in range(n) for w in range(n) if v != w and colors[v] != colors[w]]
    size, ell = _mcc_counts(n, g.m, k, len(color_keys), med)
    _guard(size, budget, "mcc instance")

    b = _Builder()
    ua, ub, ug = b.add("ua"), b.add("ub"), b.add("ug")
    lu, l, r1, r2 = b.add("lU"), b.add("l"), b.add("r1"), b.add("r2")
    for name, anchor in (("Va", [ua]), ("Vb", [ub]), ("Vg", [ug])):
        b.join(b.group(name, med), anchor + [r1, r2])
    b.join(b.group("Vabg", med), [ua, ub, ug, l, lu])
    b.clique([lu, l, r1, r2])
    b.join([lu], [ua, ub, ug])

    wa, wg = {}, {}
    for v in range(n):
        cycle = []
        for i in range(1, n + 1):
            cycle += [b.add(f"a:{v}:{i}"), b.add(f"b:{v}:{i}"), b.add(f"g:{v}:{i}")]
        wa[v], bl, wg[v] = b.add(f"wa:{v}"), b.add(f"b:{v}:{n + 1}"), b.add(f"wg:{v}")
        cycle += [wa[v], bl, wg[v]]
        for a, c in zip(cycle, cycle[1:] + cycle[:1]):
            b.edge(a, c)
        for x in cycle:
            kind = b.labels[x].split(":")[0]
            hub = {"a": ua, "wa": ua, "b": ub, "g": ug, "wg": ug}[kind]
            b.edge(x, hub)
            if kind in ("a", "b", "g"):
                b.join([x], (r1, r2))
        b.edge(wa[v], r1)
        b.edge(wg[v], r2)

    # vertex ids are 0-based; gadget positions are 1-based
    for vi, vj in g.edges():
        e = b.add(f"e:{vi},{vj}")
        ids = b.ids
        b.join([e], (ids[f"a:{vi}:{vj + 1}"], ids[f"b:{vi}:{vj + 1}"], ids[f"g:{vj}:{vi + 1}"]))
        b.join([e], (r1, r2, l))

    for key in color_keys:
        if variant == "hindex":
            (i,) = key
            c = b.add(f"c:{i}")
            for v in range(n):
                b.edge(c, wa[v] if colors[v] == i else wg[v])
        else:
            v, w = key
            c = b.add(f"c:{v},{w}")
            b.edge(c, wa[v])
            b.edge(c, wg[w])
        b.join([c], (lu, r1, r2))

    out = b.graph()
    if out.n != size:
        raise AssertionError(f"mcc vertex count {out.n} != bookkeeping {size}")
    kind = ReductionKind.MCC_HINDEX if variant == "hindex" else ReductionKind.MCC_DEGENERACY
    meta["vertex_count_formula"] = size
    return ReducedInstance(out, ell, kind, tuple(b.labels), f"multicolored clique n={n} m={g.m} k={k}", cg, k, meta)


def pad_length(n: int, m: int, alpha: Fraction) -> int:
    return max(0, math.ceil(Fraction(2 * m) / (alpha - 2) - n))


def pad_average_degree(g: Graph, ell: int, alpha: Fraction | int | float | str, budget: int | None = None) -> ReducedInstance:
    """Append a pendant path so the average degree drops to <= alpha while
    keeping the answer for ``ell``."""
    alpha = Fraction(alpha)
    if alpha <= 2:
        raise PreconditionError("alpha must exceed 2")
    if g.n == 0:
        raise PreconditionError("graph must be non-empty")
    stats = degree_stats(g)
    if ell <= stats.max_degree + 2:
        raise PreconditionError(f"ell must exceed max degree + 2 = {stats.max_degree + 2}")
    extra = 0 if 2 * g.m <= alpha * g.n else pad_length(g.n, g.m, alpha)
    _guard(g.n + extra, budget, "padded instance")
    labels = [f"G:{v}" for v in range(g.n)] + [f"pad:{i}" for i in range(extra)]
    edges = list(g.edges())
    if extra:
        path = list(range(g.n, g.n + extra))
        edges.append((0, path[0]))
        edges.extend(zip(path, path[1:]))
    out = Graph(g.n + extra, edges)
    meta = {"equivalence_guaranteed": True, "alpha": str(alpha), "pad_length": extra}
    return ReducedInstance(out, ell, ReductionKind.AVG_DEGREE_PAD, tuple(labels), f"padding n={g.n} m={g.m}", g, None, meta)


def forward_witness(inst: ReducedInstance, source_witness) -> VertexSet:
    """Map a source solution (clique, assignment, colored clique) to a 2-club
    of size exactly ``inst.ell``."""
    kind = inst.kind
    if kind == ReductionKind.AVG_DEGREE_PAD:
        return vset(source_witness)
    if kind in (ReductionKind.CLIQUE_COVER3, ReductionKind.DOMINATION2):
        g: Graph = inst.source_instance
        clique = g.check_set(source_witness)
        if len(clique) != inst.k or not all(g.has_edge(a, b) for a, b in combinations(clique, 2)):
            raise InvalidWitnessError(f"{clique} is not a clique of size {inst.k}")
        if kind == ReductionKind.DOMINATION2:
            keep = [f"V:{v}" for v in clique]
            keep += [lab for lab in inst.labels if lab.split(":")[0] in ("C", "e")]
            return inst.ids(keep)
        keep = [f"V1:{v}" for v in clique] + [f"V2:{v}" for v in clique]
        keep += [f"e:{a},{c}" for a in clique for c in clique if a != c]
        chosen = set(clique)
        keep += [lab for lab in inst.labels if lab.startswith("VE:") and int(lab.split(":")[1]) in chosen]
        keep += [lab for lab in inst.labels if lab.split(":")[0] in ("Big1", "Big2")]
        return inst.ids(keep)
    if kind == ReductionKind.BIPARTITE_PLUS_ONE:
        f: Max2SatFormula = inst.source_instance
        sat = f.satisfied(source_witness)
        if len(sat) < f.k:
            raise InvalidWitnessError(f"assignment satisfies {len(sat)} < {f.k} clauses")
        keep = ["v*"] + [f"c:{i}" for i in sat[: f.k]]
        for x, value in enumerate(source_witness, start=1):
            side = "xt" if value else "xf"
            keep.append(f"{side}:{x}")
            keep += [lab for lab in inst.labels if lab.startswith(f"{side}2:{x}:")]
        keep += [lab for lab in inst.labels if lab.startswith("F:")]
        return inst.ids(keep)
    cg: ColoredGraph = inst.source_instance
    clique = cg.graph.check_set(source_witness)
    if not cg.is_multicolored_clique(clique, inst.k):
        raise InvalidWitnessError(f"{clique} is not a multicolored clique of size {inst.k}")
    chosen = set(clique)
    keep = []
    for lab in inst.labels:
        fam, _, rest = lab.partition(":")
        if fam in ("a", "b", "g", "wa", "wg"):
            if int(rest.split(":")[0]) in chosen:
                keep.append(lab)
        elif fam == "e":
            a, c = map(int, rest.split(","))
            if a in chosen and c in chosen:
                keep.append(lab)
        else:
            keep.append(lab)
    return inst.ids(keep)


def _diameter_at_most(g: Graph, d: int) -> bool:
    full = g.all_mask
    return all(ball_mask(g, v, d) == full for v in range(g.n))


def structure_report(inst: ReducedInstance) -> dict[str, bool]:
    """Check the structural claims the reduction promises for its output."""
    g = inst.graph
    out: dict[str, bool] = {}
    kind = inst.kind
    if kind in (ReductionKind.CLIQUE_COVER3, ReductionKind.DOMINATION2, ReductionKind.MCC_HINDEX, ReductionKind.MCC_DEGENERACY):
        out["diameter_at_most_3"] = _diameter_at_most(g, 3)
        out["diameter_exactly_3"] = out["diameter_at_most_3"] and not _diameter_at_most(g, 2)
    if kind == ReductionKind.CLIQUE_COVER3:
        parts = [
            inst.family("V1") + inst.family("Big1"),
            inst.family("V2") + inst.family("Big2"),
            inst.family("e") + inst.family("VE"),
        ]
        covered = mask_of(v for p in parts for v in p) == g.all_mask
        out["three_clique_cover"] = covered and all(g.has_edge(a, b) for p in parts for a, b in combinations(p, 2))
    if kind == ReductionKind.DOMINATION2:
        pair = inst.ids(["v*", "C:0"])
        closed = 0
        for v in pair:
            closed |= g.masks[v] | (1 << v)
        out["dominating_pair"] = closed == g.all_mask
        out["domination_number_at_most_2"] = small_dominating_set(g, 2) is not None
    if kind == ReductionKind.BIPARTITE_PLUS_ONE:
        out["bipartite_without_star"] = is_bipartite(g, g.all_mask & ~(1 << inst.index()["v*"]))
    if kind in (ReductionKind.MCC_HINDEX, ReductionKind.MCC_DEGENERACY):
        out["vertex_count_matches"] = g.n == inst.meta["vertex_count_formula"]
    if kind == ReductionKind.MCC_HINDEX:
        out["h_index_at_most_k_plus_7"] = degree_stats(g).h_index <= inst.k + 7
    if kind == ReductionKind.MCC_DEGENERACY:
        deg = degeneracy(g)
        out["degeneracy_at_most_5"] = deg.value <= 5 and check_elimination_order(g, deg.elimination_order, 5)
    if kind == ReductionKind.AVG_DEGREE_PAD:
        alpha = Fraction(inst.meta["alpha"])
        out["average_degree_at_most_alpha"] = Fraction(2 * g.m, g.n) <= alpha
    return out
