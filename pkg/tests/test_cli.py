"""End-to-end checks of every subcommand, format, and exit code."""

import json

import pytest

from nsg import enumerate_records, read_records, record_to_doc
from nsg.census import ENV_WORK_CEILING
from nsg.cli import run


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_text(capsys):
    code, out, _ = run_cli(capsys, "info", "4,6,9")
    assert code == 0
    assert "frobenius" in out and "11" in out
    assert "gaps" in out and "1,2,3,5,7,11" in out


def test_info_json(capsys):
    code, out, _ = run_cli(capsys, "info", "4,6,9", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["generators"] == [4, 6, 9]
    assert doc["frobenius"] == 11
    assert doc["genus"] == 6
    assert doc["apery"] == {"0": 0, "1": 9, "2": 6, "3": 15}


def test_presentation_json(capsys):
    code, out, _ = run_cli(capsys, "presentation", "4,6,9", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["betti"] == [12, 18]
    assert doc["degrees"] == [12, 18]
    assert {"left": [3, 0, 0], "right": [0, 2, 0], "degree": 12} in doc["relations"]


def test_glue_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "glue", "2,3", "2,3", "--lambda", "4", "--mu", "5")
    assert code == 0
    assert "8,10,12,15" in out and "29" in out

    code, out, _ = run_cli(
        capsys, "glue", "3,7", "1", "--lambda", "10", "--mu", "3", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["generators"] == [9, 10, 21]
    assert doc["frobenius"] == 53
    assert doc["extra_degree"] == 30
    assert doc["identity_holds"] is True


def test_glue_domain_error(capsys):
    code, out, err = run_cli(capsys, "glue", "2,3", "2,3", "--lambda", "3", "--mu", "5")
    assert code == 1
    assert out == ""
    assert "lambda" in err


def test_ci_tree_text(capsys):
    code, out, _ = run_cli(capsys, "ci-tree", "8,10,12,15")
    assert code == 0
    assert "(4*(2*N + 3*N : d=6) + 5*(2*N + 3*N : d=6) : d=20)" in out

    code, out, _ = run_cli(capsys, "ci-tree", "3,5,7")
    assert code == 0
    assert "no" in out


def test_ci_tree_json(capsys):
    code, out, _ = run_cli(capsys, "ci-tree", "4,5,6", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["ci"] is True
    assert doc["tree"]["extra_degree"] == 10

    code, out, _ = run_cli(capsys, "ci-tree", "3,5,7", "--format", "json")
    assert json.loads(out) == {"generators": [3, 5, 7], "ci": False}


def test_star_json(capsys):
    code, out, _ = run_cli(capsys, "star", "3,5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["star_verdict"] == "failed"
    assert doc["margin"] == -1

    code, out, _ = run_cli(capsys, "star", "3,5,7", "--format", "json")
    doc = json.loads(out)
    assert doc["star_verdict"] == "undefined"
    assert doc["d_max"] is None


def test_classify(capsys):
    code, out, _ = run_cli(capsys, "classify", "3,4")
    assert code == 0 and "three_four" in out
    code, out, _ = run_cli(capsys, "classify", "2,11", "--format", "json")
    assert json.loads(out)["exception"] == "two_generated_with_two"


def test_inductive(capsys):
    code, out, _ = run_cli(capsys, "inductive", "3,7", "1", "--lambda", "10", "--mu", "3")
    assert code == 0
    assert "star_with_small_partner" in out
    assert "passed" in out and "yes" in out

    code, _, err = run_cli(capsys, "inductive", "2,3", "4,6,9", "--lambda", "5", "--mu", "8")
    assert code == 1
    assert "hypothesis" in err or "branch" in err


def test_hypotheses(capsys):
    code, out, _ = run_cli(capsys, "hypotheses", "4,6,9", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["branch"] == "star_condition"
    assert doc["holds"] is True


def test_enumerate_json_lines(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--max-genus", "2", "--format", "json")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines == [record_to_doc(r) for r in enumerate_records(2)]


def test_enumerate_text(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--max-genus", "1")
    assert code == 0
    assert "genus=1" in out and "2,3" in out


def test_enumerate_to_file(tmp_path, capsys):
    target = tmp_path / "records.ndjson"
    code, out, _ = run_cli(capsys, "enumerate", "--max-genus", "3", "--out", str(target))
    assert code == 0
    assert "wrote 8 records" in out
    assert list(read_records(target)) == enumerate_records(3)


def test_enumerate_jobs_flag_is_invisible_in_output(capsys):
    code1, out1, _ = run_cli(capsys, "enumerate", "--max-genus", "6", "--format", "json")
    code2, out2, _ = run_cli(
        capsys, "enumerate", "--max-genus", "6", "--jobs", "2", "--format", "json"
    )
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-genus", "4")
    assert code == 0
    assert "verification up to genus 4" in out
    assert "counterexamples: none" in out
    assert "2,3 | 2,5 | 2,7 | 3,4 | 2,9 | 3,5" in out


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-genus", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["per_genus"] == [1, 1, 2, 4, 7]
    assert doc["counterexamples"] == []
    assert doc["ci_count"] == 8


def test_verify_writes_records(tmp_path, capsys):
    target = tmp_path / "verified.ndjson"
    code, out, _ = run_cli(capsys, "verify", "--max-genus", "2", "--out", str(target))
    assert code == 0
    assert len(list(read_records(target))) == 4


def test_usage_errors_exit_two(capsys):
    assert run_cli(capsys, )[0] == 2
    assert run_cli(capsys, "bogus")[0] == 2
    assert run_cli(capsys, "info")[0] == 2
    assert run_cli(capsys, "info", "4,x")[0] == 2
    assert run_cli(capsys, "info", "4,6,9", "--format", "yaml")[0] == 2
    assert run_cli(capsys, "glue", "2,3", "2,3", "--lambda", "4")[0] == 2
    assert run_cli(capsys, "enumerate")[0] == 2
    assert run_cli(capsys, "enumerate", "--max-genus", "2", "--jobs", "0")[0] == 2


def test_help_exits_zero(capsys):
    assert run_cli(capsys, "--help")[0] == 0
    assert run_cli(capsys, "info", "--help")[0] == 0


def test_domain_errors_exit_one(capsys):
    code, out, err = run_cli(capsys, "info", "4,6")
    assert code == 1
    assert "gcd" in err and out == ""

    code, _, err = run_cli(capsys, "enumerate", "--max-genus", "99")
    assert code == 1
    assert "ceiling" in err


def test_work_ceiling_env_is_respected(monkeypatch, capsys):
    monkeypatch.setenv(ENV_WORK_CEILING, "3")
    code, _, err = run_cli(capsys, "verify", "--max-genus", "4")
    assert code == 1 and "ceiling" in err
    monkeypatch.setenv(ENV_WORK_CEILING, "4")
    assert run_cli(capsys, "verify", "--max-genus", "4")[0] == 0


def test_io_failure_exits_one(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "enumerate", "--max-genus", "1", "--out", str(tmp_path / "no" / "dir.ndjson")
    )
    assert code == 1
    assert err.startswith("error:")


def test_repeated_invocations_agree(capsys):
    first = run_cli(capsys, "verify", "--max-genus", "5", "--format", "json")
    second = run_cli(capsys, "verify", "--max-genus", "5", "--format", "json")
    assert first == second
