import sys
from pathlib import Path

import pytest

from jetcomplex import GridShape

sys.path.insert(0, str(Path(__file__).parent))

SMALL_SHAPES = [(2, 2), (2, 3), (3, 3), (2, 4)]
ORACLE_SHAPES = SMALL_SHAPES + [(2, 5), (3, 4), (2, 6)]


@pytest.fixture(params=SMALL_SHAPES, ids=lambda s: f"{s[0]}x{s[1]}")
def small_shape(request):
    return GridShape(*request.param)


_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        prev = _CRITERIA.get(number, (title, "passed"))[1]
        status = rep.outcome if prev == "passed" else prev
        _CRITERIA[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        word = "PASS" if status == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {word}  {title}")
