import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    outcome = "PASS" if call.excinfo is None else "FAIL"
    prev = _ACCEPTANCE.get(number)
    if prev is not None and prev[1] == "FAIL":
        outcome = "FAIL"
    _ACCEPTANCE[number] = (title, outcome)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE, key=int):
        title, outcome = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {outcome}  {title}")


@pytest.fixture(scope="session")
def grid101():
    return [i / 100 for i in range(101)]
