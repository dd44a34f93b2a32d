"""Acceptance bookkeeping: runtime budgets and a one-line verdict per criterion.

Tests marked ``@pytest.mark.criterion(label, title, budget_seconds)`` fail
when their call phase exceeds the budget; the terminal summary prints one
PASS/FAIL line per label.
"""

import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, title, budget): acceptance criterion with runtime budget")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    label, title, budget = mark.args
    if report.passed and report.duration > budget:
        report.outcome = "failed"
        report.longrepr = f"runtime {report.duration:.1f} s exceeds budget {budget} s"
    entry = _results.setdefault(label, {"title": title, "ok": True, "time": 0.0, "budget": 0.0})
    entry["ok"] = entry["ok"] and report.passed
    entry["time"] += report.duration
    entry["budget"] += budget


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_results, key=lambda s: (int(s.split()[0]), s)):
        r = _results[label]
        verdict = "PASS" if r["ok"] else "FAIL"
        terminalreporter.write_line(
            f"criterion {label:<14} {verdict}  {r['time']:7.2f} s / {r['budget']:g} s  {r['title']}"
        )
