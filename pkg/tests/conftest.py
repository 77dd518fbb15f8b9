import time

import pytest

SUITE_LIMIT_SECONDS = 120.0

_started = {}
_acceptance_lines = []


@pytest.fixture
def acceptance_log():
    """Collects the one-line criterion verdicts printed in the terminal summary."""
    return _acceptance_lines


def pytest_sessionstart(session):
    _started["t"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if "t" not in _started:
        return
    elapsed = time.perf_counter() - _started["t"]
    ok = elapsed < SUITE_LIMIT_SECONDS
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
    terminalreporter.write_line(
        f"[acceptance] criterion 8 (full suite < {SUITE_LIMIT_SECONDS:.0f} s): "
        f"{'PASS' if ok else 'FAIL'} ({elapsed:.1f} s)"
    )


def pytest_sessionfinish(session, exitstatus):
    if "t" in _started and time.perf_counter() - _started["t"] >= SUITE_LIMIT_SECONDS and exitstatus == 0:
        session.exitstatus = 1
