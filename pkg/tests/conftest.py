import random

import pytest
from hypothesis import HealthCheck, settings

from ordchoquet import fixtures

settings.register_profile(
    "repo",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repo")


@pytest.fixture
def rng():
    return random.Random(20241019)


@pytest.fixture
def eight():
    return fixtures.ordered_eight()


@pytest.fixture
def remark_pair():
    return fixtures.nonmonotone_extension()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


_CRITERIA = []


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    ok = call.excinfo is None
    _CRITERIA.append((mark.args[0], mark.args[1], ok, call.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, secs in sorted(_CRITERIA):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title} ({secs:.1f} s)")
