import io
import json
import subprocess
import sys

import pytest

from qgordon.cli import dispatch
from qgordon.report import FAIL, PASS, CheckReport, Mismatch, params_dict
from qgordon.suite import SuiteConfig, emit_report, jobs_from_env, tasks

RESULT_KEYS = {"check", "params", "order", "status", "expected_status", "first_mismatch", "elapsed_ms"}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_theorem_exit_zero():
    code, out, _ = run("verify", "theorem", "--d", "1", "--k", "2", "--e", "1", "--a", "2", "--f", "1", "--order", "60")
    assert code == 0
    assert "PASS" in out


def test_count_prints_value():
    code, out, _ = run("count", "--n", "6", "--pair-bound", "2", "--initial-bound", "2", "--divisor", "1", "--parity", "none")
    assert code == 0 and out == "3\n"
    code, out, _ = run("count", "--n", "6", "--pair-bound", "2", "--initial-bound", "2", "--brute")
    assert out == "3\n"


def test_invalid_parameters_exit_two():
    code, _, err = run("verify", "theorem", "--d", "3", "--k", "2", "--e", "3", "--a", "1", "--f", "1", "--order", "50")
    assert code == 2 and "invalid parameters" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("frobnicate",),
        ("verify", "theorem", "--order", "10"),
        ("verify", "jtp", "--a", "5", "--modulus", "5", "--order", "10"),
        ("sweep", "--max-d", "3", "--max-k", "2"),
        ("count", "--n", "-1", "--pair-bound", "2", "--initial-bound", "2"),
    ],
)
def test_usage_errors_exit_two(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and err.startswith("qgordon:")


def test_negative_control_is_expected_failure():
    code, out, _ = run("verify", "negative_control", "--d", "3", "--k", "3", "--e", "1", "--a", "1", "--f", "1", "--order", "60", "--json")
    assert code == 0
    doc = json.loads(out)
    r = doc["results"][0]
    assert r["status"] == FAIL and r["expected_status"] == FAIL
    assert doc["summary"] == {"pass": 0, "fail": 1, "unexpected": 0}


def test_unexpected_result_exit_one():
    # a positive corner makes the inverse check fail; the suite expects that, so flip the expectation
    from qgordon.construction import check_matrix_adjugate

    r = check_matrix_adjugate(2, 1, 1, "alpha", 5, 10, corner=1)
    r.expected_status = PASS
    doc = json.loads(emit_report([r], "json"))
    assert doc["summary"]["unexpected"] == 1


def test_json_schema_keys():
    code, out, _ = run("verify", "jtp", "--a", "2", "--modulus", "5", "--order", "40", "--json")
    doc = json.loads(out)
    assert set(doc) == {"suite", "config", "results", "summary"}
    r = doc["results"][0]
    assert set(r) == RESULT_KEYS
    assert set(r["params"]) == {"d", "k", "e", "a", "f", "variant"}
    assert set(r["order"]) == {"m", "n"}
    assert r["first_mismatch"] is None
    assert set(doc["summary"]) == {"pass", "fail", "unexpected"}


def test_empty_report():
    doc = json.loads(emit_report([], "json"))
    assert doc["results"] == []
    assert doc["summary"] == {"pass": 0, "fail": 0, "unexpected": 0}


def test_mismatch_coefficients_are_decimal_strings():
    big = 3**200
    r = CheckReport("theorem", params_dict(1, 1, 1, 1, 1, "even"), (None, 5), FAIL, Mismatch(None, 4, big, -big))
    rec = json.loads(emit_report([r], "json"))["results"][0]["first_mismatch"]
    assert rec["lhs"] == str(big)
    assert Mismatch.from_json(rec) == r.first_mismatch


def test_text_table_has_one_row_per_check():
    code, out, _ = run("sweep", "--max-d", "1", "--max-k", "2", "--checks", "theorem", "--order", "20", "--no-timing")
    assert code == 0
    lines = out.splitlines()
    n_checks = len(tasks(SuiteConfig(max_d=1, max_k=2, order_n=20, checks=("theorem",))))
    assert lines[0].startswith("check")
    assert len(lines) == 1 + n_checks + 2


def test_sweep_output_is_stable_across_workers():
    argv = ("sweep", "--max-d", "2", "--max-k", "2", "--checks", "theorem", "oracle", "negative_control", "--order", "30", "--brute-n", "12", "--json", "--no-timing")
    first = run(*argv, "--jobs", "1")
    second = run(*argv, "--jobs", "2")
    assert first[0] == 0
    assert first[1] == second[1]


def test_jobs_from_environment(monkeypatch):
    monkeypatch.setenv("QGORDON_JOBS", "3")
    assert jobs_from_env() == 3
    monkeypatch.setenv("QGORDON_JOBS", "zero")
    with pytest.raises(ValueError):
        jobs_from_env()
    monkeypatch.delenv("QGORDON_JOBS")
    assert jobs_from_env() == 1


def test_expand_product_matches_series():
    args = ("--d", "2", "--k", "2", "--e", "1", "--a", "1", "--f", "1", "--order", "15")
    _, product, _ = run("expand", "product", *args)
    _, series, _ = run("expand", "series-c", *args)
    assert product == series
    counts = [run("count", "--n", str(n), "--pair-bound", "5", "--initial-bound", "3", "--divisor", "2", "--parity", "even")[1].strip() for n in range(16)]
    assert product.split() == counts


def test_expand_json_theta():
    code, out, _ = run("expand", "theta", "--a", "2", "--modulus", "5", "--order", "6", "--json")
    assert json.loads(out)["coefficients"] == ["1", "0", "-1", "-1", "0", "0", "0"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qgordon", "count", "--n", "5", "--pair-bound", "99", "--initial-bound", "99"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "7\n"
