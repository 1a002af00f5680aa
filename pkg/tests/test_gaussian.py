from fractions import Fraction

import pytest
from hypothesis import given

from conftest import gints, grationals, nonzero_gints
from heisencf.gaussian import (
    UNITS,
    GaussianInteger as G,
    GaussianRational as Q,
    format_scalar,
    gaussian_sqrt,
    ggcd,
    parse_scalar,
    unit_normalizer,
)


def test_hand_values():
    assert G(1, 1) * G(1, -1) == G(2)
    assert G(3, -2).conjugate() == G(3, 2)
    assert G(2, 1).norm() == 5


def test_division_examples():
    assert Q(1) / Q(G(1, 1)) == Q(G(1, -1), 2)
    a = Q(G(3, -7), 5)
    assert a / 1 == a
    assert Q(G(2, 2)) / Q(G(1, 1)) == Q(2)


def test_units_are_norm_one():
    assert set(UNITS) == {z for z in (G(x, y) for x in range(-2, 3) for y in range(-2, 3)) if z.norm() == 1}


def test_canonical_form():
    q = Q(G(4, 6), 8)
    assert (q.num, q.den) == (G(2, 3), 4)
    assert Q(G(0, 0), 7).den == 1
    with pytest.raises(ZeroDivisionError):
        Q(G(1), 0)


@pytest.mark.parametrize("text", ["-2+3i", "(1-1i)/2", "0", "i", "-i", "7/3", "(3+8i)/24"])
def test_text_round_trip(text):
    x = parse_scalar(text)
    assert parse_scalar(format_scalar(x)) == x


def test_decimal_text():
    assert parse_scalar("0.6+0.2i") == Q.from_parts(Fraction(3, 5), Fraction(1, 5))


@given(gints, gints)
def test_ring_laws(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b).norm() == a.norm() * b.norm()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@given(grationals(), grationals().filter(lambda x: not x.is_zero()))
def test_field_division(a, b):
    assert (a / b) * b == a
    assert a / b == a * b.conjugate() / b.norm()


@given(gints, nonzero_gints)
def test_round_div_remainder_small(a, b):
    q = a.round_div(b)
    assert 2 * (a - q * b).norm() <= b.norm()


@given(nonzero_gints, nonzero_gints)
def test_gcd_divides(a, b):
    g = ggcd(a, b)
    assert (Q(a) / Q(g)).is_integral() and (Q(b) / Q(g)).is_integral()


@given(nonzero_gints)
def test_unit_normalizer_is_unit(z):
    assert unit_normalizer(z) in UNITS


@given(gints)
def test_sqrt_of_square(z):
    r = gaussian_sqrt(z * z)
    assert r is not None and r * r == z * z


def test_i_is_not_a_square():
    assert gaussian_sqrt(G(0, 1)) is None
