"""Shared pytest hooks.

The acceptance module doubles as a scorecard. After a run that included
it, the terminal summary prints one pass/fail line per criterion so the
whole contract can be audited at a glance.
"""

import pytest

_acceptance_outcomes = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    if item.fspath.basename == "test_acceptance.py":
        _acceptance_outcomes[item.name] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance_outcomes):
        outcome = _acceptance_outcomes[name]
        status = "PASS" if outcome == "passed" else outcome.upper()
        terminalreporter.write_line("{:<4} {}".format(status, name))
