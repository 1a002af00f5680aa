from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from heisencf.corpus import ALL_DIGITS, LARGE_DIGITS
from heisencf.gaussian import GaussianInteger, GaussianRational
from heisencf.siegel import HeisenbergPoint, IntegerPoint
from heisencf.unitary import j_matrix, translation

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small = st.integers(-6, 6)
gints = st.builds(GaussianInteger, small, small)
nonzero_gints = gints.filter(lambda z: not z.is_zero())


@st.composite
def grationals(draw, span=6, den_max=12):
    return GaussianRational(draw(gints), draw(st.integers(1, den_max)))


@st.composite
def rational_points(draw, den_max=12):
    u = draw(grationals(den_max=den_max))
    t = Fraction(draw(st.integers(-40, 40)), draw(st.integers(1, den_max)))
    return HeisenbergPoint(u, GaussianRational.from_parts(u.norm() / 2, t))


lattice_points = st.sampled_from(ALL_DIGITS)
large_digits = st.sampled_from(LARGE_DIGITS)
words = st.lists(st.one_of(st.just("J"), lattice_points), min_size=1, max_size=8)


@pytest.fixture
def J():
    return j_matrix()


@pytest.fixture
def g2():
    """The lattice point (2, 2+i)."""
    return IntegerPoint(GaussianInteger(2, 0), 1)


@pytest.fixture
def M_g2(g2):
    """J T_(2, 2+i), a non-torsion matrix with a cubic fixed point."""
    return j_matrix() @ translation(g2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n].line())
