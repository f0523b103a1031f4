import functools

import pytest

from pretzelkit.core import enumerate_codes
from pretzelkit.statesum import alexander

# The enumeration range used by the exhaustive property checks.
MAX_R = 5
MAX_TWIST = 7


@functools.lru_cache(maxsize=None)
def range_codes():
    return tuple(enumerate_codes(MAX_R, MAX_TWIST))


@functools.lru_cache(maxsize=None)
def range_alexander():
    return {c: alexander(c) for c in range_codes()}


@pytest.fixture(scope="session")
def codes():
    return range_codes()


@pytest.fixture(scope="session")
def deltas():
    return range_alexander()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
