import pytest
from hypothesis import HealthCheck, settings

from lambdacond.groups import PrimaryGroup

settings.register_profile(
    "default", settings(suppress_health_check=[HealthCheck.too_slow], max_examples=60, deadline=None)
)
settings.load_profile("default")

SMALL_GROUPS = [
    PrimaryGroup(2, [2]),
    PrimaryGroup(2, [4]),
    PrimaryGroup(2, [2, 2]),
    PrimaryGroup(2, [2, 4]),
    PrimaryGroup(3, [3]),
    PrimaryGroup(3, [9]),
    PrimaryGroup(3, [3, 3]),
    PrimaryGroup(5, [5]),
]

ACCEPTANCE_LINES = []


@pytest.fixture(params=SMALL_GROUPS, ids=lambda g: g.spec_string())
def small_group(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
