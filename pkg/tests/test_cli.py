import json

import pytest

from twoclub.cli import choose_algorithm, main
from twoclub.generators import gnp
from twoclub.graph import Graph, verify_s_club
from twoclub.io import read_graph, write_graph
from twoclub.params import Target, validate_modulator

PETERSEN = Graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in {
        "c5.txt": Graph(5, [(i, (i + 1) % 5) for i in range(5)]),
        "petersen.col": PETERSEN,
        "star.txt": Graph(8, [(0, i) for i in range(1, 8)]),
        "k3.txt": Graph(3, [(0, 1), (1, 2), (0, 2)]),
        "p4.txt": Graph(4, [(0, 1), (1, 2), (2, 3)]),
        "k4.txt": Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)]),
        "empty.txt": Graph(4),
    }.items():
        write_graph(g, tmp_path / name)
        paths[name] = tmp_path / name
    return tmp_path, paths


def run(argv, tmp_path):
    out = tmp_path / "report.json"
    code = main(argv + ["--json-out", str(out)])
    return code, json.loads(out.read_text()) if out.exists() else None


def test_solve_petersen_dual(files):
    tmp, p = files
    code, rep = run(["solve", "--input", str(p["petersen.col"]), "--algo", "dual"], tmp)
    assert code == 0 and rep["size"] == 10 and rep["verified"]
    assert rep["report_version"] == 1
    assert all(isinstance(v, int) for v in rep["stats"].values())


def test_auto_on_c5_picks_alpha2(files):
    tmp, p = files
    code, rep = run(["solve", "--input", str(p["c5.txt"])], tmp)
    assert code == 0 and rep["algorithm"] == "alpha2" and rep["size"] == 5


def test_heuristic_on_star(files):
    tmp, p = files
    code, rep = run(["solve", "--input", str(p["star.txt"]), "--algo", "heuristic"], tmp)
    assert code == 0 and rep["size"] == 8


def test_decision_exit_codes(files):
    tmp, p = files
    assert run(["solve", "--input", str(p["p4.txt"]), "--ell", "3"], tmp)[0] == 0
    code, rep = run(["solve", "--input", str(p["p4.txt"]), "--ell", "4"], tmp)
    assert code == 1 and rep["decision"]["answer"] is False


def test_cocluster_requires_ell(files, capsys):
    tmp, p = files
    assert main(["solve", "--input", str(p["k3.txt"]), "--algo", "cocluster-mod"]) == 2
    mod = tmp / "mod.txt"
    mod.write_text("")
    code, rep = run(["solve", "--input", str(p["k3.txt"]), "--algo", "cocluster-mod", "--modulator", str(mod), "--ell", "3"], tmp)
    assert code == 0 and rep["decision"]["answer"]


def test_invalid_modulator_is_usage_error(files):
    tmp, p = files
    mod = tmp / "mod.txt"
    mod.write_text("")
    assert main(["solve", "--input", str(p["p4.txt"]), "--algo", "cluster-mod", "--modulator", str(mod)]) == 2


def test_budget_and_usage_exit_codes(files):
    tmp, p = files
    assert main(["solve", "--input", str(p["k4.txt"]), "--algo", "hindex-xp"]) == 3
    assert main(["solve", "--input", str(p["k4.txt"]), "--algo", "oracle", "--s", "3"]) == 2
    assert main(["solve", "--input", str(tmp / "missing.txt")]) == 2
    with pytest.raises(SystemExit) as info:
        main(["solve"])
    assert info.value.code == 2


def test_params_examples(files):
    tmp, p = files
    p5 = tmp / "p5.txt"
    write_graph(Graph(5, [(i, i + 1) for i in range(4)]), p5)
    _, rep = run(["params", "--input", str(p5)], tmp)
    assert rep["params"]["h_index"] == 2 and rep["params"]["degeneracy"] == 1
    _, rep = run(["params", "--input", str(p["k4.txt"])], tmp)
    assert rep["params"]["h_index"] == 3 and rep["params"]["degeneracy"] == 3
    _, rep = run(["params", "--input", str(p["empty.txt"])], tmp)
    assert rep["params"]["average_degree"] == 0 and rep["params"]["components"] == 4


def test_verify_command(files, capsys):
    tmp, p = files
    sol = tmp / "sol.txt"
    sol.write_text("0\n1\n2\n")
    assert main(["verify", "--input", str(p["p4.txt"]), "--solution", str(sol)]) == 0
    sol.write_text("0\n1\n2\n3\n")
    assert main(["verify", "--input", str(p["p4.txt"]), "--solution", str(sol)]) == 1
    assert "violating_pair=[0, 3]" in capsys.readouterr().out
    sol.write_text("")
    assert main(["verify", "--input", str(p["p4.txt"]), "--solution", str(sol)]) == 0
    sol.write_text("9\n")
    assert main(["verify", "--input", str(p["p4.txt"]), "--solution", str(sol)]) == 2


def test_generate_domination2(files):
    tmp, p = files
    out = tmp / "dom.txt"
    code, rep = run(["generate", "--kind", "domination2", "--input", str(p["k3.txt"]), "--k", "3", "--output", str(out)], tmp)
    assert code == 0
    g = read_graph(out)
    assert g.n == 12 and rep["decision"]["ell"] == 11
    meta = json.loads((tmp / "dom.txt.meta.json").read_text())
    assert len(meta["labels"]) == 12 and all(meta["structure"].values())


def test_generate_padding_and_mcc(files):
    tmp, p = files
    out = tmp / "pad.txt"
    code, _ = run(["generate", "--kind", "avg-degree-pad", "--input", str(p["k4.txt"]), "--ell", "6", "--alpha", "3", "--output", str(out)], tmp)
    g = read_graph(out)
    assert code == 0 and 2 * g.m <= 3 * g.n
    colors = tmp / "colors.txt"
    colors.write_text("0 1\n1 2\n2 1\n")
    src = tmp / "p3.txt"
    write_graph(Graph(3, [(0, 1), (1, 2)]), src)
    out = tmp / "mcc.txt"
    code, rep = run(["generate", "--kind", "mcc-degeneracy", "--input", str(src), "--k", "2", "--colors", str(colors), "--output", str(out)], tmp)
    assert code == 0 and rep["params"]["structure"]["degeneracy_at_most_5"]


def test_generate_budget(files):
    tmp, p = files
    argv = ["generate", "--kind", "clique-cover3", "--input", str(p["k3.txt"]), "--k", "2", "--output", str(tmp / "x.txt")]
    assert main(argv + ["--budget-vertices", "10"]) == 3


def test_generate_random_with_seed(files):
    tmp, _ = files
    a, b = tmp / "a.txt", tmp / "b.txt"
    main(["generate", "--kind", "gnp", "--n", "12", "--p", "0.3", "--seed", "5", "--output", str(a)])
    main(["generate", "--kind", "gnp", "--n", "12", "--p", "0.3", "--seed", "5", "--output", str(b)])
    assert a.read_text() == b.read_text()


def test_auto_policy_preconditions_hold():
    from twoclub.cograph import build_cotree
    from twoclub.exact import independence_at_most_two
    from twoclub.params import degree_stats

    for seed in range(80):
        g = gnp(6 + seed % 8, (0.1, 0.3, 0.6, 0.9)[seed % 4], seed=seed)
        algo, rule, mod = choose_algorithm(g, 2)
        if algo == "alpha2":
            assert independence_at_most_two(g)
        elif algo == "cluster-mod":
            assert len(mod) <= 4 and validate_modulator(g, Target.CLUSTER, mod) is None
        elif algo == "cograph-mod":
            assert len(mod) <= 4 and validate_modulator(g, Target.COGRAPH, mod) is None
        elif algo == "hindex-xp":
            assert degree_stats(g).h_index <= 2
        assert rule


def test_solution_out_and_reverify(files):
    tmp, p = files
    sol = tmp / "w.txt"
    assert main(["solve", "--input", str(p["petersen.col"]), "--solution-out", str(sol)]) == 0
    assert verify_s_club(PETERSEN, 2, [int(x) for x in sol.read_text().split()])
