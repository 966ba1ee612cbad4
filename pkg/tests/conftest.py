import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_OUTCOMES = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion this test decides")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, title = marker.args
    ok = report.passed if report.when == "call" else not report.failed
    prev = _OUTCOMES.get(n, (title, True))
    _OUTCOMES[n] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_OUTCOMES):
        title, ok = _OUTCOMES[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
