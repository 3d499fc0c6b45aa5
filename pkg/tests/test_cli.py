import json
import os
import subprocess
import sys

import pytest

from hspec import complete_r_graph, parse_hypergraph, write_hypergraph
from hspec.cli import main
from suites import instance_154


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def complete42(tmp_path):
    path = tmp_path / "complete42.hg"
    write_hypergraph(complete_r_graph(4, {2, 3}), path)
    return str(path)


def test_compute_rho(complete42, capsys):
    code, out, _ = run(["compute", complete42, "--what", "rho", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["quantities"]["rho"] == pytest.approx(6.0, abs=1e-8)
    assert list(doc["quantities"]) == ["rho"]


def test_compute_empty_omega(tmp_path, capsys):
    path = tmp_path / "empty.hg"
    path.write_text("n 3\n")
    code, out, _ = run(["compute", str(path), "--what", "omega", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["quantities"] == {"omega": 1}


def test_compute_all_quantities_order(complete42, capsys):
    code, out, _ = run(["compute", complete42, "--what", "U,rho,omega", "--format", "json"], capsys)
    assert code == 0
    assert list(json.loads(out)["quantities"]) == ["rho", "omega", "U"]


@pytest.mark.parametrize("flags", [["--tol", "-1"], ["--tol", "0"], ["--bogus"], ["--what", "nope"], ["--format", "xml"]])
def test_usage_errors_exit_1(complete42, capsys, flags):
    code, out, err = run(["compute", complete42, "--what", "rho"] + flags, capsys)
    assert code == 1 and out == "" and "usage error" in err


def test_missing_command(capsys):
    code, _, err = run([], capsys)
    assert code == 1


def test_corrupted_input_exit_1(tmp_path, capsys):
    path = tmp_path / "bad.hg"
    path.write_text("n 3\ne 0 1 9\n")
    out_path = tmp_path / "report.json"
    code, out, err = run(["check-bounds", str(path), "--out", str(out_path)], capsys)
    assert code == 1 and "out of range" in err
    assert not out_path.exists()
    assert not os.path.exists(str(out_path) + ".tmp")
    code, _, _ = run(["compute", str(tmp_path / "missing.hg")], capsys)
    assert code == 1


def test_nonconvergence_exit_2_with_partial_report(tmp_path, capsys):
    path = tmp_path / "g.hg"
    path.write_text("n 5\ne 0 1\ne 1 2\ne 2 3 4\ne 0 3\n")
    code, out, _ = run(["compute", str(path), "--what", "omega,rho", "--max-iter", "3", "--format", "json"], capsys)
    assert code == 2
    doc = json.loads(out)
    assert doc["quantities"] == {"omega": 2}
    lo, hi = doc["error"]["bracket"]
    assert lo < hi
    code, out, _ = run(["check-bounds", str(path), "--max-iter", "3", "--format", "json"], capsys)
    assert code == 2 and "bracket" in json.loads(out)["error"]


def test_check_bounds_complete(tmp_path, capsys):
    path = tmp_path / "k5.hg"
    write_hypergraph(complete_r_graph(5, {2}), path)
    code, out, _ = run(["check-bounds", str(path), "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    lem = next(r for r in doc["bounds"] if r["name"] == "lemma_2_3")
    assert lem["equality"] is True


def test_check_bounds_random_seed7(tmp_path, capsys):
    path = tmp_path / "r.hg"
    assert run(["gen", "random", "--n", "8", "--r", "2,3", "--p", "0.3", "--seed", "7", "--out", str(path)], capsys)[0] == 0
    code, out, _ = run(["check-bounds", str(path), "--format", "json"], capsys)
    assert code == 0
    assert all(r["holds"] in (True, None) for r in json.loads(out)["bounds"] if r["status"] == "checked")


def test_check_bounds_violation_exit_3(tmp_path, capsys):
    path = tmp_path / "g154.hg"
    write_hypergraph(instance_154(), path)
    code, out, _ = run(["check-bounds", str(path)], capsys)
    assert code == 3
    assert "theorem_3_4" in out


def test_check_bounds_table_and_ungated_flag(tmp_path, capsys):
    path = tmp_path / "g.hg"
    path.write_text("n 4\ne 0 1\ne 0 2\ne 1 2\ne 2 3\n")
    code, out, _ = run(["check-bounds", str(path)], capsys)
    assert code == 0 and "theorem_3_4" not in out
    code, out, _ = run(["check-bounds", str(path), "--ungated-thm34"], capsys)
    assert code == 0 and "informational" in out


def test_gen_complete(capsys):
    code, out, _ = run(["gen", "complete", "--n", "4", "--r", "2,3"], capsys)
    assert code == 0
    assert parse_hypergraph(out).num_edges == 10


def test_gen_random_empty(capsys):
    code, out, _ = run(["gen", "random", "--n", "6", "--r", "2", "--p", "0", "--seed", "1"], capsys)
    assert code == 0 and out == "n 6\n"


def test_gen_invalid(capsys):
    assert run(["gen", "complete", "--n", "2", "--r", "3"], capsys)[0] == 1
    assert run(["gen", "random", "--n", "5", "--r", "2", "--p", "2"], capsys)[0] == 1


def test_oracle_complete(complete42, capsys):
    code, out, _ = run(["oracle", complete42, "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["apply_max_deviation"] <= 1e-10
    assert doc["rho_difference"] <= 1e-9 and doc["agree"]


def test_oracle_single_edge(tmp_path, capsys):
    path = tmp_path / "e.hg"
    path.write_text("n 3\ne 0 1\n")
    code, out, _ = run(["oracle", str(path), "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["rho_difference"] <= 1e-9


def test_oracle_cap_exceeded(tmp_path, capsys):
    path = tmp_path / "big.hg"
    write_hypergraph(complete_r_graph(20, {4}), path)
    code, out, err = run(["oracle", str(path)], capsys)
    assert code == 1 and out == "" and "cap" in err


def test_threads_env_validated(complete42, capsys, monkeypatch):
    monkeypatch.setenv("HSPEC_THREADS", "0")
    assert run(["compute", complete42, "--what", "rho"], capsys)[0] == 1
    monkeypatch.setenv("HSPEC_THREADS", "2")
    assert run(["compute", complete42, "--what", "rho"], capsys)[0] == 0


def test_out_file(complete42, tmp_path, capsys):
    target = tmp_path / "o.json"
    code, out, _ = run(["compute", complete42, "--what", "q", "--format", "json", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["quantities"]["q"] == pytest.approx(12.0, abs=1e-8)


def test_byte_identical_output(tmp_path):
    path = tmp_path / "r.hg"
    main(["gen", "random", "--n", "7", "--r", "2,3", "--p", "0.5", "--seed", "3", "--out", str(path)])
    cmd = [sys.executable, "-m", "hspec", "check-bounds", str(path), "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode in (0, 3)
    assert a.stdout == b.stdout and len(a.stdout) > 0
