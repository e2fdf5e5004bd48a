import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from p5gem.graph import Graph  # noqa: E402
from p5gem.special import cycle, path  # noqa: E402

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): exit criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _ACCEPTANCE.append((marker.args[0], rep.outcome, round(rep.duration, 2)))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, secs in _ACCEPTANCE:
        flag = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{flag}  {name}  ({secs}s)")


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def p5():
    return path(5)


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20240601)
