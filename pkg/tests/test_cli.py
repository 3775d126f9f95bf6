"""Command-line interface: formats, exit codes, determinism."""

import json
import shutil
import subprocess
import sys

import pytest

from sepekr.cli import run


def out_of(capsys):
    captured = capsys.readouterr()
    return captured.out


# === enumerate ===


def test_enumerate_text(capsys):
    assert run(["enumerate", "--n", "5", "--r", "2", "--k", "1"]) == 0
    assert out_of(capsys) == "5 2 1 : {1,3} {1,4} {2,4} {2,5} {3,5}\n"


def test_enumerate_csv(capsys):
    assert run(["enumerate", "--n", "4", "--r", "2", "--k", "1", "--format", "csv"]) == 0
    assert out_of(capsys) == "elems\n1 3\n2 4\n"


def test_enumerate_json(capsys):
    assert run(["enumerate", "--n", "6", "--r", "2", "--k", "2", "--format", "json"]) == 0
    data = json.loads(out_of(capsys))
    assert data == {"n": 6, "r": 2, "k": 2, "sets": [[1, 4], [2, 5], [3, 6]]}


def test_enumerate_to_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    assert run(["enumerate", "--n", "4", "--r", "2", "--k", "1", "--output", str(target)]) == 0
    assert out_of(capsys) == ""
    assert target.read_text() == "4 2 1 : {1,3} {2,4}\n"


# === max-family and classes ===


def test_max_family_text(capsys):
    assert run(["max-family", "--n", "7", "--r", "2", "--k", "1"]) == 0
    assert out_of(capsys) == "optimum 4\nwitness 7 2 1 : {1,3} {1,4} {1,5} {1,6}\n"


def test_max_family_csv(capsys):
    assert run(["max-family", "--n", "6", "--r", "2", "--k", "1", "--format", "csv"]) == 0
    header, row = out_of(capsys).splitlines()
    assert header == "n,r,k,optimum,nodes"
    fields = row.split(",")
    assert fields[:4] == ["6", "2", "1", "3"]
    assert int(fields[4]) > 0


def test_classes_text(capsys):
    assert run(["classes", "--n", "6", "--r", "2", "--k", "1"]) == 0
    assert out_of(capsys) == (
        "optimum 3\nclasses 2\n"
        "6 2 1 : {1,3} {1,4} {1,5}\n"
        "6 2 1 : {1,3} {1,5} {3,5}\n"
    )


def test_classes_json_with_rotations_only(capsys):
    assert run(
        ["classes", "--n", "6", "--r", "2", "--k", "1", "--rotations-only", "--format", "json"]
    ) == 0
    data = json.loads(out_of(capsys))
    assert data["optimum"] == 3
    assert len(data["classes"]) == 2
    assert data["witness"] == [[1, 3], [1, 4], [1, 5]]


# === lemmas ===


def test_lemmas_text(capsys):
    code = run(["lemmas", "--n", "8", "--r", "2", "--k", "1", "--samples", "5"])
    assert code == 0
    lines = out_of(capsys).splitlines()
    assert lines[0] == "checked 6 intersecting families on n=8 r=2 k=1"
    assert lines[1] == "all clauses passed"


def test_lemmas_json(capsys):
    code = run(
        ["lemmas", "--n", "7", "--r", "2", "--k", "1", "--samples", "3", "--format", "json"]
    )
    assert code == 0
    data = json.loads(out_of(capsys))
    assert data["families_checked"] == 4
    assert data["all_passed"] is True
    assert data["failures"] == []


def test_lemmas_seed_changes_nothing_about_verdict(capsys):
    for seed in ("0", "1", "99"):
        code = run(
            ["lemmas", "--n", "9", "--r", "3", "--k", "1", "--samples", "4", "--seed", seed]
        )
        assert code == 0
    capsys.readouterr()


# === weighted ===


def test_weighted_text(capsys):
    assert run(["weighted", "--n", "8", "--r", "2", "--k", "1"]) == 0
    assert out_of(capsys) == "optimum 35\nstar_weight 35\nbinomial 35\npass true\n"


def test_weighted_csv(capsys):
    assert run(["weighted", "--n", "9", "--r", "2", "--k", "1", "--format", "csv"]) == 0
    assert out_of(capsys) == (
        "n,r,k,optimum,star_weight,binomial,pass\n9,2,1,56,56,56,true\n"
    )


def test_weighted_out_of_regime_is_usage_error(capsys):
    assert run(["weighted", "--n", "7", "--r", "2", "--k", "1"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "error:" in captured.err


# === graph ===


def test_graph_text_with_invariants(capsys):
    code = run(["graph", "--kind", "kneser", "--n", "5", "--r", "2", "--alpha", "--chi"])
    assert code == 0
    assert out_of(capsys) == "kneser n=5 r=2 k=0: 10 vertices, 15 edges\nalpha 4\nchi 3\n"


def test_graph_dimacs_export(tmp_path, capsys):
    target = tmp_path / "g.dimacs"
    code = run(
        ["graph", "--kind", "schrijver", "--n", "5", "--r", "2", "--k", "1", "--dimacs", str(target)]
    )
    assert code == 0
    assert out_of(capsys) == "schrijver n=5 r=2 k=1: 5 vertices, 5 edges\n"
    assert target.read_text() == "p edge 5 5\ne 1 3\ne 1 4\ne 2 4\ne 2 5\ne 3 5\n"


def test_graph_json(capsys):
    code = run(
        ["graph", "--kind", "schrijver", "--n", "5", "--r", "2", "--chi", "--format", "json"]
    )
    assert code == 0
    data = json.loads(out_of(capsys))
    assert data["num_vertices"] == 5 and data["num_edges"] == 5
    assert data["chi"] == 3
    assert data["vertices"][0] == [1, 3]


# === report ===


def test_report_quick_verifies(capsys):
    assert run(["report", "--grid", "quick"]) == 0
    lines = out_of(capsys).splitlines()
    assert lines[0].split() == ["n", "r", "k", "optimum", "formula", "match", "classes", "nodes"]
    assert len(lines) == 7  # header, five rows, verdict
    assert lines[-1] == "verified true"
    assert all("ok" in line for line in lines[1:-1])


def test_report_quick_csv(capsys):
    assert run(["report", "--grid", "quick", "--format", "csv"]) == 0
    lines = out_of(capsys).splitlines()
    assert lines[0] == "n,r,k,optimum,formula,match,classes,class_ok,nodes"
    assert lines[1].startswith("4,2,1,1,1,true,1,true,")
    assert lines[3].startswith("6,2,1,3,3,true,2,true,")  # two classes at n = 2r+2


def test_report_is_byte_identical_across_runs_and_threads(capsys, monkeypatch):
    assert run(["report", "--grid", "quick", "--format", "json"]) == 0
    first = out_of(capsys)
    assert run(["report", "--grid", "quick", "--format", "json"]) == 0
    second = out_of(capsys)
    monkeypatch.setenv("SEPEKR_THREADS", "8")
    assert run(["report", "--grid", "quick", "--format", "json"]) == 0
    third = out_of(capsys)
    assert first == second == third
    assert json.loads(first)["all_verified"] is True


# === exit codes and environment ===


def test_usage_error_on_bad_instance(capsys):
    assert run(["max-family", "--n", "5", "--r", "3", "--k", "1"]) == 2
    assert run(["enumerate", "--n", "5", "--r", "0", "--k", "1"]) == 2
    capsys.readouterr()


def test_resource_error_on_vertex_limit(capsys):
    code = run(["max-family", "--n", "12", "--r", "3", "--k", "1", "--limit-vertices", "5"])
    assert code == 3
    captured = capsys.readouterr()
    assert "resource limit" in captured.err


def test_bad_threads_env_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("SEPEKR_THREADS", "zero")
    assert run(["enumerate", "--n", "5", "--r", "2", "--k", "1"]) == 2
    monkeypatch.setenv("SEPEKR_THREADS", "0")
    assert run(["enumerate", "--n", "5", "--r", "2", "--k", "1"]) == 2
    capsys.readouterr()


def test_missing_argument_hits_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["enumerate", "--n", "5", "--r", "2"])
    assert exc.value.code == 2
    capsys.readouterr()


# === installed entry points ===


def test_console_script_and_module_agree():
    script = shutil.which("sepekr")
    assert script, "console script should be on PATH after installation"
    argv = ["enumerate", "--n", "5", "--r", "2", "--k", "1"]
    via_script = subprocess.run([script] + argv, capture_output=True, text=True)
    via_module = subprocess.run(
        [sys.executable, "-m", "sepekr"] + argv, capture_output=True, text=True
    )
    assert via_script.returncode == 0 and via_module.returncode == 0
    assert via_script.stdout == via_module.stdout
    assert via_script.stdout == "5 2 1 : {1,3} {1,4} {2,4} {2,5} {3,5}\n"


def test_module_exit_code_propagates():
    proc = subprocess.run(
        [sys.executable, "-m", "sepekr", "weighted", "--n", "7", "--r", "2", "--k", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
