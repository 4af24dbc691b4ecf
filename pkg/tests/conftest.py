from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from polycert.exactpoly import Poly

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def rationals(bound: int = 20, max_den: int = 6):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, max_den))


def positive_rationals(bound: int = 20, max_den: int = 6):
    return st.builds(Fraction, st.integers(1, bound), st.integers(1, max_den))


@st.composite
def polys(draw, min_degree: int = 0, max_degree: int = 6, bound: int = 20, max_den: int = 6):
    deg = draw(st.integers(min_degree, max_degree))
    lead = draw(rationals(bound, max_den).filter(bool))
    rest = draw(st.lists(rationals(bound, max_den), min_size=deg, max_size=deg))
    return Poly((lead, *rest))


@pytest.fixture
def t():
    return Poly.of(1, 0)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: full-size acceptance criteria (slow)")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
