"""Command-line surface: exit codes, JSON document shape, determinism."""

import json

import pytest

from decatkit import cli


def run_json(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_relations_pass(capsys):
    code, doc = run_json(capsys, ["relations", "--k", "2"])
    assert code == 0
    assert doc["schema"] == 1
    assert doc["subcommand"] == "relations"
    assert doc["passed"] is True
    for rel in ("R1", "R2", "R3", "R4", "R5", "L5"):
        assert doc[rel] is True


def test_relations_single_relation(capsys):
    code, doc = run_json(capsys, ["relations", "--k", "3", "--relation", "R4"])
    assert code == 0
    assert doc["R4"] is True
    (report,) = doc["detail"]["R4"]
    assert report["detail"]["normalization_holding"] == [6]


def test_relations_unknown_relation_is_config_error(capsys):
    assert cli.run(["relations", "--k", "2", "--relation", "R9"]) == 2
    assert "unknown relation" in capsys.readouterr().err


def test_relations_k_guard(capsys):
    assert cli.run(["relations", "--k", "1"]) == 2


def test_blocks_pair(capsys):
    code, doc = run_json(
        capsys, ["blocks", "--n", "2", "--p", "31", "--a", "0,1", "--b", "1,0"]
    )
    assert code == 0
    report = doc["report"]
    assert report["vanishes"] is False
    assert report["eblock2"] is True
    assert report["dims"] == [1, 1]


def test_blocks_pair_requires_both_endpoints(capsys):
    assert cli.run(["blocks", "--n", "2", "--p", "31", "--a", "0,1"]) == 2


def test_blocks_sweep(capsys):
    code, doc = run_json(capsys, ["blocks", "--n", "2", "--p", "31", "--max", "1"])
    assert code == 0
    assert doc["passed"] is True
    assert doc["counterexamples"] == []
    assert len(doc["matrix"]) == 16


def test_small_prime_guard(capsys):
    # Floor is p > 4kn with k defaulting to 1.
    assert cli.run(["blocks", "--n", "2", "--p", "7", "--max", "1"]) == 2
    assert "4" in capsys.readouterr().err


def test_small_prime_override(capsys):
    code = cli.run(["blocks", "--n", "2", "--p", "7", "--max", "1", "--allow-small-p"])
    captured = capsys.readouterr()
    assert code == 0
    assert "large-prime floor" in captured.err


def test_nonprime_rejected(capsys):
    assert cli.run(["blocks", "--n", "2", "--p", "9", "--max", "1"]) == 2
    assert "not prime" in capsys.readouterr().err


def test_bad_weight_rejected(capsys):
    assert cli.run(["blocks", "--n", "2", "--p", "31", "--a", "x,1", "--b", "1,0"]) == 2
    assert cli.run(["blocks", "--n", "2", "--p", "31", "--a", "1", "--b", "1,0"]) == 2


def test_cohomology_table(capsys):
    code, doc = run_json(
        capsys, ["cohomology", "--n", "2", "--lam", "2,0", "--p", "31", "--field", "Fp"]
    )
    assert code == 0
    entries = {(e["degree"], tuple(e["weight"])): e["dim"] for e in doc["entries"]}
    assert entries == {(0, (2, 0)): 1, (0, (0, 2)): 1, (1, (0, 2)): 1}


def test_cohomology_rational_default(capsys):
    code, doc = run_json(capsys, ["cohomology", "--n", "2", "--lam", "3,0"])
    assert code == 0
    assert doc["field"] == "Q"
    assert doc["depth"] >= 1


def test_cohomology_fp_requires_p(capsys):
    assert cli.run(["cohomology", "--n", "2", "--lam", "2,0", "--field", "Fp"]) == 2


def test_khovanov_trefoil_with_oracle(capsys):
    code, doc = run_json(
        capsys, ["khovanov", "--k", "2", "--word", "trefoil", "--oracle"]
    )
    assert code == 0
    assert doc["euler"] == 2
    assert doc["dims"] == [2, 0, 1, 1]
    assert doc["min_degree"] == 0
    assert doc["oracle_matches"] is True


def test_khovanov_k3_has_no_homology_block(capsys):
    code, doc = run_json(capsys, ["khovanov", "--k", "3", "--word", "trefoil"])
    assert code == 0
    assert doc["euler"] == 3
    assert "dims" not in doc


def test_khovanov_oracle_requires_k2(capsys):
    assert cli.run(["khovanov", "--k", "3", "--word", "trefoil", "--oracle"]) == 2


def test_khovanov_word_file(tmp_path, capsys):
    path = tmp_path / "two_circles.sw"
    path.write_text("# nested pair of circles\ncup(1) cup(3) cap(2) cap(1)\n")
    code, doc = run_json(capsys, ["khovanov", "--k", "2", "--word", str(path)])
    assert code == 0
    assert doc["euler"] == 2


def test_khovanov_unknown_word(capsys):
    assert cli.run(["khovanov", "--k", "2", "--word", "no_such_diagram"]) == 2


def test_khovanov_open_word_rejected(tmp_path, capsys):
    path = tmp_path / "open.sw"
    path.write_text("cup(1)\n")
    assert cli.run(["khovanov", "--k", "2", "--word", str(path)]) == 2
    assert "open" in capsys.readouterr().err


def test_operad_check(capsys):
    code, doc = run_json(capsys, ["operad-check", "--budget", "150", "--seed", "5"])
    assert code == 0
    assert doc["passed"] is True
    assert doc["seed"] == 5


def test_operad_check_budget_guard(capsys):
    assert cli.run(["operad-check", "--budget", "0"]) == 2


def test_selftest(capsys):
    code, doc = run_json(capsys, ["selftest"])
    assert code == 0
    assert doc["passed"] is True
    assert all(doc["checks"].values())


def test_output_file_is_deterministic(tmp_path, capsys):
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    for out in (out_a, out_b):
        code = cli.run(
            ["blocks", "--n", "2", "--p", "31", "--max", "1", "--out", str(out)]
        )
        assert code == 0
    capsys.readouterr()
    assert out_a.read_bytes() == out_b.read_bytes()


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.run(["blocks", "--n"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.run(["no-such-subcommand"])
    assert exc.value.code == 2
