import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hecke_a2.engine import Engine
from hecke_a2.group import FIN_TAGS, from_parts

settings.register_profile(
    "default", max_examples=150, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def engine():
    return Engine()


def elements(bound: int = 4):
    coord = st.integers(-bound, bound)
    return st.builds(from_parts, coord, coord, st.sampled_from(FIN_TAGS), st.integers(0, 2))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
