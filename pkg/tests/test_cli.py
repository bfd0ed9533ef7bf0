import json
from pathlib import Path

import jsonschema
import pytest

from normtrace.cli import main

ROOT = Path(__file__).parent.parent
SPECS = ROOT / "specs"
SCHEMA = json.loads((ROOT / "docs" / "cli-output.schema.json").read_text())


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


def test_params_staircase(capsys):
    code, out, _ = run(capsys, "params", SPECS / "staircase_f9.spec")
    assert code == 0 and out.splitlines()[0] == "n=27 k=10 d=15 gap=3"


def test_params_last_table_row(capsys):
    code, out, _ = run(capsys, "params", SPECS / "length15_k12.spec")
    assert code == 0 and "k=12 d=3" in out


def test_params_degree_zero(capsys):
    code, out, _ = run(capsys, "params", "--inline", "q=3 r=2 u=4; family degree:0")
    assert code == 0 and "k=1 d=27" in out


def test_params_brute_and_witness(capsys):
    code, doc = run_json(capsys, "params", SPECS / "augmented23.spec", "--witness")
    assert code == 0 and doc["witness"]["weight"] == doc["d"] == 4
    code, doc = run_json(capsys, "params", "--inline", "q=3 r=2 u=2; family degree:1", "--brute")
    assert code == 0 and doc["brute"] == {"d": 12, "match": True}


def test_brute_over_budget_is_input_error(capsys):
    code, _, err = run(capsys, "params", SPECS / "degree4_f9.spec", "--brute", "--budget", "1000")
    assert code == 2 and "budget" in err


def test_formula_only_mode(capsys):
    code, doc = run_json(capsys, "params", SPECS / "onepoint1539_f81.spec")
    assert code == 0 and (doc["n"], doc["k"], doc["d"]) == (2187, 1033, 648)
    assert doc["matrix_checks"] == "skipped"
    code, doc = run_json(capsys, "dual", SPECS / "onepoint1539_f81.spec")
    assert code == 0 and doc["verified"] == "skipped" and doc["k_dual"] == 2187 - 1033


@pytest.mark.parametrize("argv,exit_code", [
    (["params", "--inline", "q=3 r=2 u=3"], 2),
    (["params", "--inline", "q=3 r=2 u=4; 1 0"], 2),
    (["params", str(SPECS / "missing.spec")], 2),
    (["params"], 2),
    (["repair-sim", str(SPECS / "full_f9.spec")], 2),
    (["hull", "--inline", "q=7 r=3 u=3; 0 0"], 2),
])
def test_invalid_input_exit_code(capsys, argv, exit_code):
    code, out, err = run(capsys, *argv)
    assert code == exit_code and err.startswith("error:")


def test_invalid_input_json(capsys):
    code, doc = run_json(capsys, "params", "--inline", "q=3 r=2 u=4; 2 0")
    assert code == 2 and doc["ok"] is False and "divisibility" in doc["error"]


def test_dual_fig3(capsys):
    code, doc = run_json(capsys, "dual", SPECS / "degree4_f9.spec")
    assert code == 0 and len(doc["complement"]) == 15 and doc["verified"] is True


def test_dual_full_is_zero(capsys):
    code, doc = run_json(capsys, "dual", SPECS / "full_f9.spec")
    assert code == 0 and doc["k_dual"] == 0 and doc["complement"] == []


def test_classify_self_dual(capsys):
    code, out, _ = run(capsys, "classify", SPECS / "box_f16.spec")
    assert code == 0 and out.startswith("self-dual, k = 24")


def test_hull(capsys):
    code, doc = run_json(capsys, "hull", SPECS / "degree4_f9.spec")
    assert code == 0 and doc["hull_dim"] == 12 and doc["verified"] is True


def test_points_and_matrix(capsys):
    code, doc = run_json(capsys, "points", SPECS / "hermitian_f4.spec")
    assert code == 0 and len(doc["points"]) == 8
    code, doc = run_json(capsys, "gen-matrix", SPECS / "hermitian_f4.spec")
    assert code == 0 and len(doc["matrix"]) == 6 and doc["matrix"][0] == [1] * 8


def test_repair_sim_hermitian(capsys):
    code, doc = run_json(capsys, "repair-sim", SPECS / "hermitian_f4.spec", "--trials", "5")
    assert code == 0
    assert doc["max_bandwidth"] == 9 == doc["bound"] and doc["baseline"] == 14
    assert doc["success_rate"] == 1.0 and doc["repairs"] == 40


def test_repair_sim_fig2(capsys):
    code, doc = run_json(capsys, "repair-sim", SPECS / "staircase_f16.spec", "--trials", "1")
    assert code == 0 and doc["max_bandwidth"] <= 37 and doc["baseline"] == 124


def test_repair_sim_zero_trials(capsys):
    code, doc = run_json(capsys, "repair-sim", SPECS / "hermitian_f4.spec", "--trials", "0")
    assert code == 0 and doc["repairs"] == 0 and doc["success_rate"] is None and doc["bound"] == 9


def test_deterministic(capsys):
    argv = ["repair-sim", SPECS / "staircase_f16.spec", "--trials", "2", "--seed", "7", "--json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_table1(capsys):
    code, doc = run_json(capsys, "table1")
    expected = list(zip(range(2, 13), [13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3]))
    assert code == 0 and [(r["k"], r["d"]) for r in doc["rows"]] == expected


def test_verify_paper(capsys):
    code, doc = run_json(capsys, "verify-paper")
    assert code == 0 and doc["passed"] == doc["total"]
    table_rows = [c for c in doc["claims"] if c["group"] == "length-15 table"]
    assert len(table_rows) == 11
    details = {c["name"]: c["detail"] for c in doc["claims"] if c["group"] == "one-point comparison"}
    assert "k=22" in details["one-point s=23 plus x^7 y"] and "d=4" in details["one-point s=23 plus x^7 y"]
    assert "k=20" in details["one-point s=21 plus x^6 y"] and "d=6" in details["one-point s=21 plus x^6 y"]
