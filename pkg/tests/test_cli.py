import json

import pytest

from paradoxlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_writes_edge_list(capsys, tmp_path):
    code, out, err = run_cli(capsys, "gen", "--model", "path", "--n", "4")
    assert code == 0
    assert out == "0 1\n1 2\n2 3\n"

    target = tmp_path / "ring.txt"
    code, out, _ = run_cli(capsys, "gen", "--model", "cycle", "--n", "3",
                           "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "0 1\n0 2\n1 2\n"


def test_gen_matrix_market(capsys):
    code, out, _ = run_cli(capsys, "gen", "--model", "path", "--n", "3",
                           "--file-format", "matrix_market")
    assert code == 0
    assert out.splitlines()[0] == \
        "%%MatrixMarket matrix coordinate pattern symmetric"


def test_paradox_degree_on_p6_file(capsys, tmp_path):
    graph_file = tmp_path / "p6.txt"
    graph_file.write_text("".join(f"{i} {i+1}\n" for i in range(5)))
    code, out, _ = run_cli(capsys, "paradox", str(graph_file),
                           "--measure", "degree")
    assert code == 0
    payload = json.loads(out)
    assert payload["graph_meta"] == {"n": 6, "m": 5, "directed": False,
                                     "regular": False}
    assert payload["stats"]["mu"] == pytest.approx(10 / 6)
    assert payload["stats"]["mu_bar"] == pytest.approx(11 / 6)
    assert payload["stats"]["mu_tilde"] == pytest.approx(1.8)
    assert payload["stats"]["paradox_holds"] is True
    assert len(payload["node_table"]) == 6
    assert payload["node_table"][0] == {"id": 0, "degree": 1, "r": 1.0,
                                        "neighbor_avg": 2.0, "delta": 1.0}


def test_paradox_eigenvector_on_cycle_is_regular(capsys, tmp_path):
    graph_file = tmp_path / "c5.txt"
    graph_file.write_text("0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run_cli(capsys, "paradox", str(graph_file),
                           "--measure", "eigenvector")
    assert code == 0
    payload = json.loads(out)
    assert payload["graph_meta"]["regular"] is True
    assert abs(payload["stats"]["slack"]) <= 1e-10
    assert payload["stats"]["paradox_holds"] is True


def test_centrality_inline_model_and_csv(capsys):
    code, out, _ = run_cli(capsys, "centrality", "--model", "star", "--n",
                           "5", "--measure", "eigenvector", "--format",
                           "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "id,degree,r,neighbor_avg,delta"
    assert len(lines) == 6


def test_compare_emits_decomposition(capsys):
    code, out, _ = run_cli(capsys, "compare", "--model", "star", "--n", "5",
                           "--measure", "degree")
    assert code == 0
    payload = json.loads(out)
    deco = payload["decomposition"]
    assert deco["lhs"] == pytest.approx(17 / 5 - 5 / 2)
    assert deco["lhs"] == pytest.approx(deco["rhs"], abs=1e-12)
    assert len(deco["a"]) == 5


def test_bias_reports_summary(capsys):
    code, out, _ = run_cli(capsys, "bias", "--model", "erdos_renyi", "--n",
                           "20", "--p", "0.2", "--graphs", "10",
                           "--measure", "degree", "--seed", "7")
    assert code == 0
    payload = json.loads(out)
    summary = payload["bias_summary"]
    assert summary["n_graphs"] == 10
    assert summary["mean"] > 0
    assert 0 <= summary["fraction_negative"] < 1
    assert sum(bin_[2] for bin_ in summary["histogram"]) == \
        summary["total_samples"]
    assert payload["seed"] == 7
    assert payload["graph_meta"]["model"] == "erdos_renyi"


def test_identities_bundle(capsys, tmp_path):
    graph_file = tmp_path / "p6.txt"
    graph_file.write_text("".join(f"{i} {i+1}\n" for i in range(5)))
    code, out, err = run_cli(capsys, "identities", str(graph_file))
    assert code == 0
    payload = json.loads(out)
    assert payload["symmetrization"]["lhs"] == pytest.approx(1.0)
    assert payload["symmetrization"]["rhs"] == pytest.approx(1.0)
    assert payload["harmonic_mean"]["lhs"] > payload["harmonic_mean"]["rhs"]
    assert payload["eaves"] == {"ell": 2, "lhs": 19.0, "rhs": 18.0}
    assert payload["pagerank_check"]["lhs"] >= \
        payload["pagerank_check"]["rhs"] - 1e-10
    assert payload["fiedler"]["violations"] == 0
    assert "bidirected" in err


def test_identities_on_directed_graph(capsys, tmp_path):
    graph_file = tmp_path / "ring.txt"
    graph_file.write_text("directed\n0 1\n1 2\n2 0\n")
    code, out, err = run_cli(capsys, "identities", str(graph_file))
    assert code == 0
    payload = json.loads(out)
    assert "symmetrization" not in payload
    assert "pagerank_check" in payload
    assert "skipping the undirected-only" in err


def test_exit_codes(capsys, tmp_path):
    # Usage: missing input source.
    code, _, err = run_cli(capsys, "paradox", "--measure", "degree")
    assert code == 1 and "error:" in err

    # Usage: both file and model.
    graph_file = tmp_path / "g.txt"
    graph_file.write_text("0 1\n")
    code, _, _ = run_cli(capsys, "paradox", str(graph_file), "--model",
                         "path", "--n", "3", "--measure", "degree")
    assert code == 1

    # Parameter: bad beta.
    code, _, _ = run_cli(capsys, "paradox", str(graph_file), "--measure",
                         "pagerank", "--beta", "1.5")
    assert code == 1

    # Input: malformed file.
    bad_file = tmp_path / "bad.txt"
    bad_file.write_text("0 1 2\n")
    code, _, err = run_cli(capsys, "paradox", str(bad_file), "--measure",
                           "degree")
    assert code == 2 and "line 1" in err

    # Input: missing file.
    code, _, _ = run_cli(capsys, "paradox", str(tmp_path / "nope.txt"),
                         "--measure", "degree")
    assert code == 2

    # Precondition: disconnected graph.
    disc = tmp_path / "disc.txt"
    disc.write_text("0 1\n2 3\n")
    code, _, _ = run_cli(capsys, "paradox", str(disc), "--measure", "degree")
    assert code == 2

    # Convergence budget (a star is non-regular, so the uniform start is
    # not already the fixed point).
    star_file = tmp_path / "star.txt"
    star_file.write_text("0 1\n0 2\n0 3\n")
    code, _, err = run_cli(capsys, "paradox", str(star_file), "--measure",
                           "pagerank", "--tol", "1e-30", "--max-iters", "3")
    assert code == 3 and "residual" in err


def test_argparse_usage_maps_to_exit_one(capsys):
    assert main(["frobnicate"]) == 1
    captured = capsys.readouterr()
    assert captured.out == ""


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert main(["gen", "--help"]) == 0


def test_katz_alpha_defaults_to_safe_fraction(capsys):
    code, out, _ = run_cli(capsys, "centrality", "--model", "cycle", "--n",
                           "6", "--measure", "katz")
    assert code == 0
    payload = json.loads(out)
    # lambda1 = 2 on a cycle, so the default alpha is 0.425.
    assert payload["measure"]["alpha"] == pytest.approx(0.425)


def test_pagerank_promotion_notice(capsys):
    code, _, err = run_cli(capsys, "centrality", "--model", "cycle", "--n",
                           "5", "--measure", "pagerank")
    assert code == 0
    assert "bidirected" in err


def test_walk_measure_uses_ell(capsys):
    code, out, _ = run_cli(capsys, "centrality", "--model", "path", "--n",
                           "4", "--measure", "walk_count", "--ell", "2")
    assert code == 0
    payload = json.loads(out)
    assert [row["r"] for row in payload["node_table"]] == [2.0, 3.0, 3.0, 2.0]
    assert payload["measure"]["ell"] == 2


def test_identical_invocations_are_byte_identical(capsys):
    args = ("bias", "--model", "erdos_renyi", "--n", "15", "--p", "0.2",
            "--graphs", "5", "--measure", "degree", "--seed", "3")
    code_a, out_a, _ = run_cli(capsys, *args)
    code_b, out_b, _ = run_cli(capsys, *args)
    assert code_a == code_b == 0
    assert out_a == out_b
