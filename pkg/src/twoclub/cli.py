"""Command-line front end: ``twoclub solve|params|generate|verify``.

Exit codes: 0 success, 1 verification failure or a "no" answer, 2 usage or
parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from twoclub import generators, io
from twoclub.cograph import solve_cograph_modulator
from twoclub.errors import BudgetError, PreconditionError, TwoClubError
from twoclub.exact import (
    SolveResult,
    dual_branching,
    heuristic_ball,
    independence2_solve,
    independence_at_most_two,
    oracle_max_2club,
    turing_kernel_solve,
)
from twoclub.graph import Graph, ball_mask, components, verify_s_club, violating_pair
from twoclub.hindex import solve_hindex_xp
from twoclub.modulators import MAX_MODULATOR, solve_cluster_modulator, solve_cocluster_modulator
from twoclub.params import Target, degeneracy, degree_stats, modulator_greedy, validate_modulator
from twoclub import reductions as red

REPORT_VERSION = 1

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

ALGOS = (
    "auto", "oracle", "dual", "turing", "heuristic", "alpha2",
    "cluster-mod", "cocluster-mod", "cograph-mod", "hindex-xp",
)
TWO_ONLY = {"oracle", "cluster-mod", "cocluster-mod", "cograph-mod", "hindex-xp"}

KINDS = (
    "clique-cover3", "domination2", "bipartite-plus-one", "mcc-hindex",
    "mcc-degeneracy", "avg-degree-pad", "gnp", "cograph",
)


class UsageError(TwoClubError):
    pass


@dataclass
class RunReport:
    command: str
    instance: dict
    algorithm: str | None = None
    rule: str | None = None
    size: int | None = None
    witness: list[int] | None = None
    verified: bool | None = None
    decision: dict | None = None
    stats: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    report_version: int = REPORT_VERSION

    def to_json(self) -> str:
        return json.dumps({k: v for k, v in asdict(self).items() if v is not None}, indent=2, sort_keys=True)


def parameter_table(g: Graph) -> dict:
    deg = degree_stats(g)
    return {
        "n": g.n,
        "m": g.m,
        "max_degree": deg.max_degree,
        "average_degree": round(deg.average_degree, 6),
        "h_index": deg.h_index,
        "degeneracy": degeneracy(g).value,
        "cluster_modulator_greedy": modulator_greedy(g, Target.CLUSTER).size,
        "cograph_modulator_greedy": modulator_greedy(g, Target.COGRAPH).size,
        "components": len(components(g)),
    }


def choose_algorithm(g: Graph, s: int) -> tuple[str, str, tuple[int, ...] | None]:
    """Auto policy: (algorithm, rule that fired, modulator if any)."""
    if independence_at_most_two(g):
        return "alpha2", "independence number <= 2", None
    if s == 2:
        for target, algo in ((Target.CLUSTER, "cluster-mod"), (Target.COGRAPH, "cograph-mod")):
            mod = modulator_greedy(g, target)
            if mod.size <= MAX_MODULATOR:
                return algo, f"greedy {target.value} modulator of size {mod.size} <= {MAX_MODULATOR}", mod.vertices
        h = degree_stats(g).h_index
        if h <= 2:
            return "hindex-xp", f"h-index {h} <= 2", None
    biggest = max((bin(ball_mask(g, v, 2)).count("1") for v in range(g.n)), default=0)
    if biggest < 0.8 * g.n:
        return "turing", f"largest 2-ball {biggest} < 0.8 n", None
    return "dual", "fallback", None


def _load_modulator(args, g: Graph, target: Target | None) -> tuple[int, ...]:
    if args.modulator:
        return g.check_set(io.read_solution(args.modulator))
    if target is None:
        raise UsageError("--modulator is required for this algorithm")
    return modulator_greedy(g, target).vertices


def cmd_solve(args) -> tuple[RunReport, int]:
    g = io.read_graph(args.input)
    s = args.s
    if s < 2:
        raise UsageError("--s must be at least 2")
    algo = args.algo
    if algo in TWO_ONLY and s != 2:
        raise UsageError(f"--algo {algo} only supports s = 2")
    report = RunReport("solve", {"path": str(args.input), "n": g.n, "m": g.m})
    lower = heuristic_ball(g, s)
    mod = None
    rule = "requested"
    if algo == "auto":
        algo, rule, mod = choose_algorithm(g, s)
    decision = None
    if algo == "oracle":
        res = oracle_max_2club(g)
    elif algo == "dual":
        res = dual_branching(g, s, seed=lower.best)
    elif algo == "turing":
        res = turing_kernel_solve(g, _TuringInner(s), jobs=args.jobs)
        if lower.size > res.size:
            res = SolveResult(lower.best, res.stats)
    elif algo == "heuristic":
        res = lower
    elif algo == "alpha2":
        res = independence2_solve(g, s)
    elif algo == "cluster-mod":
        res = solve_cluster_modulator(g, mod if mod is not None else _load_modulator(args, g, Target.CLUSTER))
    elif algo == "cograph-mod":
        res = solve_cograph_modulator(g, mod if mod is not None else _load_modulator(args, g, Target.COGRAPH))
    elif algo == "cocluster-mod":
        if args.ell is None:
            raise UsageError("--algo cocluster-mod is a decision procedure and needs --ell")
        dec = solve_cocluster_modulator(g, _load_modulator(args, g, None), args.ell)
        decision = {"ell": args.ell, "answer": dec.answer, "route": dec.route}
        res = SolveResult(dec.witness or (), dec.stats)
    elif algo == "hindex-xp":
        res = solve_hindex_xp(g)
    else:
        raise UsageError(f"unknown algorithm {algo!r}")

    # re-verify against the file as read from scratch
    raw = io.read_graph(args.input)
    report.algorithm = algo
    report.rule = rule
    report.size = res.size
    report.witness = list(res.best)
    report.verified = verify_s_club(raw, s, res.best)
    report.stats = {
        "branch_nodes": int(res.stats.branch_nodes),
        "table_entries": int(res.stats.table_entries),
        "elapsed_ms": int(round(res.stats.elapsed_ms)),
        "lower_bound": lower.size,
    }
    report.params = parameter_table(g)
    code = EXIT_OK if report.verified else EXIT_NO
    if decision is None and args.ell is not None:
        decision = {"ell": args.ell, "answer": res.size >= args.ell}
    if decision is not None:
        report.decision = decision
        if not decision["answer"]:
            code = EXIT_NO
    return report, code


class _TuringInner:
    """Picklable per-ball solver so worker processes can run it."""

    def __init__(self, s: int):
        self.s = s

    def __call__(self, g: Graph) -> SolveResult:
        return dual_branching(g, self.s)


def cmd_params(args) -> tuple[RunReport, int]:
    g = io.read_graph(args.input)
    report = RunReport("params", {"path": str(args.input), "n": g.n, "m": g.m}, params=parameter_table(g))
    return report, EXIT_OK


def cmd_verify(args) -> tuple[RunReport, int]:
    g = io.read_graph(args.input)
    sol = io.read_solution(args.solution)
    try:
        g.check_set(sol)
    except ValueError as exc:
        raise io.ParseError(args.solution, None, str(exc)) from None
    report = RunReport("verify", {"path": str(args.input), "n": g.n, "m": g.m})
    report.size = len(sol)
    report.witness = list(sol)
    report.verified = verify_s_club(g, args.s, sol)
    if not report.verified:
        report.decision = {"violating_pair": list(violating_pair(g, args.s, sol))}
    return report, EXIT_OK if report.verified else EXIT_NO


def _generate(args) -> red.ReducedInstance | Graph:
    kind = args.kind
    budget = args.budget_vertices
    if kind in ("gnp", "cograph"):
        if args.n is None:
            raise UsageError(f"--kind {kind} needs --n")
        if kind == "gnp":
            return generators.gnp(args.n, args.p, seed=args.seed)
        return generators.random_cograph(args.n, seed=args.seed)
    if not args.input:
        raise UsageError(f"--kind {kind} needs --input")
    if kind == "bipartite-plus-one":
        return red.gen_bipartite_plus_one(io.read_max2sat(args.input), budget, args.expert_pad)
    g = io.read_graph(args.input)
    if kind == "avg-degree-pad":
        if args.ell is None or args.alpha is None:
            raise UsageError("--kind avg-degree-pad needs --ell and --alpha")
        return red.pad_average_degree(g, args.ell, Fraction(args.alpha), budget)
    if args.k is None:
        raise UsageError(f"--kind {kind} needs --k")
    if kind == "clique-cover3":
        return red.gen_clique_cover3(g, args.k, budget, args.expert_pad)
    if kind == "domination2":
        return red.gen_domination2(g, args.k, budget)
    if not args.colors:
        raise UsageError(f"--kind {kind} needs --colors")
    cg = io.read_colors(args.colors, g)
    variant = "hindex" if kind == "mcc-hindex" else "degeneracy"
    return red.gen_mcc(cg, args.k, variant, budget, args.expert_pad)


def cmd_generate(args) -> tuple[RunReport, int]:
    out = _generate(args)
    report = RunReport("generate", {"kind": args.kind, "source": args.input})
    if isinstance(out, Graph):
        io.write_graph(out, args.output)
        report.instance.update(n=out.n, m=out.m, output=str(args.output))
        return report, EXIT_OK
    io.write_graph(out.graph, args.output)
    checks = red.structure_report(out)
    meta = {
        "kind": out.kind.value,
        "ell": out.ell,
        "source": out.source,
        "labels": list(out.labels),
        "structure": checks,
        **out.meta,
    }
    meta_path = Path(str(args.output) + ".meta.json")
    meta_path.write_text(json.dumps(meta, indent=2, sort_keys=True))
    report.instance.update(n=out.graph.n, m=out.graph.m, output=str(args.output), meta=str(meta_path))
    report.decision = {"ell": out.ell}
    report.params = {"structure": checks, **out.meta}
    return report, EXIT_OK if all(checks.values()) else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twoclub", description="Exact maximum 2-club (s-club) solver and instance tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        p.add_argument("--input", required=needs_input, help="graph file (edge list, or DIMACS if *.col)")
        p.add_argument("--json-out", help="write the JSON report here ('-' for stdout)")

    p = sub.add_parser("solve", help="find a maximum s-club")
    common(p)
    p.add_argument("--algo", choices=ALGOS, default="auto")
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--ell", type=int, help="also answer: is there an s-club of size >= ell?")
    p.add_argument("--modulator", help="file with modulator vertex ids, one per line")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the ball decomposition")
    p.add_argument("--solution-out", help="write the witness here, one id per line")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("params", help="report structural parameters")
    common(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("verify", help="check that a vertex set is an s-club")
    common(p)
    p.add_argument("--solution", required=True)
    p.add_argument("--s", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="build a reduction instance or a random graph")
    common(p, needs_input=False)
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--alpha", help="average-degree target, e.g. 3 or 5/2")
    p.add_argument("--colors", help="vertex coloring file for the mcc kinds")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int)
    p.add_argument("--budget-vertices", type=int, help="refuse instances with more vertices")
    p.add_argument("--expert-pad", type=int, help="shrink padding families to this size (breaks equivalence)")
    p.set_defaults(func=cmd_generate)
    return parser


def _summary(report: RunReport) -> str:
    parts = [report.command]
    if report.algorithm:
        parts.append(f"algo={report.algorithm} ({report.rule})")
    if report.size is not None:
        parts.append(f"size={report.size}")
    if report.verified is not None:
        parts.append("verified" if report.verified else "NOT verified")
    if report.decision:
        parts.append(" ".join(f"{k}={v}" for k, v in report.decision.items()))
    return " ".join(parts)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.func(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, io.ParseError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TwoClubError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO
    # keep stdout pure JSON when the report goes there
    human = sys.stderr if args.json_out == "-" else sys.stdout
    print(_summary(report), file=human)
    if args.command == "params":
        for key, value in report.params.items():
            print(f"  {key:26} {value}", file=human)
    if getattr(args, "solution_out", None) and report.witness is not None:
        io.write_solution(report.witness, args.solution_out)
    if args.json_out == "-":
        print(report.to_json())
    elif args.json_out:
        Path(args.json_out).write_text(report.to_json() + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
