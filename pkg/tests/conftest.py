import os
import time

import pytest
from hypothesis import HealthCheck, settings

from catprime.oracle import run_census

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def timed_census():
    """Exhaustive census for n = 1..6 with checks and member sets, plus its wall time."""
    start = time.perf_counter()
    result = {n: run_census(n, checks=True, record=True) for n in range(1, 7)}
    return result, time.perf_counter() - start


@pytest.fixture(scope="session")
def census(timed_census):
    return timed_census[0]


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
