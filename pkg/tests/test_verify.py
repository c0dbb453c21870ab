"""The self-check suites: dispatch, reporting, and small-depth runs."""

import pytest

from planecone.verify import CheckResult, format_report, run_suite


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_single_suite_small_depth():
    results = run_suite("gamma", 25)
    assert all(isinstance(r, CheckResult) for r in results)
    assert all(r.passed for r in results)


def test_all_runs_every_suite():
    results = run_suite("all", 6)
    names = {r.name for r in results}
    assert "gamma inversion" in names
    assert "interval disjointness" in names
    assert "collapsing walls" in names
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_format_report_lines_and_exit_code():
    results = [
        CheckResult("first", True, "10 checks"),
        CheckResult("second", False, "1 of 3 failed"),
    ]
    text, code = format_report(results)
    assert code == 1
    lines = text.splitlines()
    assert lines[0].startswith("PASS first")
    assert lines[1].startswith("FAIL second")
    assert lines[-1] == "1/2 checks passed"
    _, ok_code = format_report([CheckResult("only", True, "")])
    assert ok_code == 0
