from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from conftest import grationals
from heisencf.ball import ComplexBall, ball_eval, precision_schedule
from heisencf.gaussian import GaussianInteger as G, GaussianRational as Q


def test_exact_zero():
    b = ball_eval(Q(0), 64)
    assert b.rad == 0 and b.contains(Q(0))


def test_dyadic_is_exact():
    b = ball_eval(Q(G(1, -1), 2), 64)
    assert b.contains(Q(G(1, -1), 2)) and b.rad <= Fraction(1, 2**60)


def test_third_radius_bound():
    for p in (32, 64, 128, 256):
        b = ball_eval(Q(1, 3), p)
        assert b.contains(Q(1, 3))
        assert b.rad <= Fraction(2, 2 ** (p - 1))


def test_schedule_doubles_to_cap():
    assert list(precision_schedule(128, 1024)) == [128, 256, 512, 1024]


@given(grationals(), grationals(), st.sampled_from([53, 100, 256]))
def test_ops_enclose_exact_results(a, b, p):
    A, B = ball_eval(a, p), ball_eval(b, p)
    assert (A + B).contains(a + b)
    assert (A - B).contains(a - b)
    assert (A * B).contains(a * b)
    assert A.conjugate().contains(a.conjugate())
    if not b.is_zero():
        assert (A / B).contains(a / b)


@given(grationals())
def test_abs2_bounds_enclose_norm(a):
    lo, hi = ball_eval(a, 80).abs2_bounds()
    assert lo <= a.norm() <= hi


def test_zero_test_is_conservative():
    tiny = ComplexBall.exact(Q(1, 2**200), 64)
    assert ball_eval(Q(0), 64).contains_zero()
    assert not ComplexBall.exact(Q(1), 64).contains_zero()
    assert tiny.contains(Q(1, 2**200))
