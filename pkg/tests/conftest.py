import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from discpoly.polygon import regular_disc_polygon, reuleaux_triangle, spindle

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def reuleaux():
    return reuleaux_triangle()


@pytest.fixture
def pentagon():
    return regular_disc_polygon(5, 1.0)


@pytest.fixture
def lens():
    return spindle((-0.5, 0.0), (0.5, 0.0))


@pytest.fixture(params=["spindle", "reuleaux", "regular5"])
def shape(request):
    return {
        "spindle": spindle((-0.5, 0.0), (0.5, 0.0)),
        "reuleaux": reuleaux_triangle(),
        "regular5": regular_disc_polygon(5, 1.0),
    }[request.param]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# one PASS/FAIL line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
