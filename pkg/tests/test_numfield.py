import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import grationals, rational_points
from heisencf.cf import DigitSequence, euler_matrix
from heisencf.errors import ConjugationError, PointAtInfinityError, SelectionError, TorsionMatrixError
from heisencf.gaussian import GaussianInteger as G, GaussianRational as Q, parse_scalar as S
from heisencf.numfield import (
    NumberField,
    char_poly,
    colinearity_certificate,
    eigenvalue_at,
    factor_spectrum,
    fixed_point_of,
    fixed_points,
    poly_eval,
)
from heisencf.serialize import point_from_json, point_to_json
from heisencf.siegel import HeisenbergPoint as H, IntegerPoint
from heisencf.unitary import act, identity, translation

one, m1 = Q(1), Q(-1)
# t^3 - 2: irreducible over Q(i)
K3 = NumberField((S("-2"), 0, 0, 1))


def test_char_poly_examples(J, M_g2):
    assert char_poly(identity()) == (m1, Q(3), Q(-3), one)
    assert char_poly(J) == (one, m1, m1, one)
    assert char_poly(M_g2)[0].norm() == 1


def test_factor_spectrum_examples(J):
    assert factor_spectrum(char_poly(identity())) == [((m1, one), 3)]
    assert sorted(factor_spectrum(char_poly(J)), key=lambda f: f[1]) == [((one, one), 1), ((m1, one), 2)]


def test_irreducibility_checks():
    NumberField((S("-i"), 0, 1))  # i is not a square in Q(i)
    with pytest.raises(ValueError):
        NumberField((S("-2i"), 0, 1))  # 2i = (1+i)^2
    with pytest.raises(ValueError):
        NumberField((S("-1"), 0, 0, 1))  # 1 is a root
    with pytest.raises(ValueError):
        NumberField((S("-8"), 0, 0, 1))  # 2 is a root


def test_root_is_isolated():
    for k in range(3):
        F = NumberField(K3.modulus, k)
        b = F.root_ball(256)
        assert poly_eval(F.modulus, b).contains_zero()
        assert b.rad < Q(1, 2**200).real


field_elems = st.lists(grationals(), min_size=3, max_size=3).map(K3.element)


@given(field_elems, field_elems, field_elems)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == K3.one
        assert (b / a) * a == b


@given(field_elems, field_elems)
def test_ball_evaluation_is_a_homomorphism(a, b):
    assert (a * b).ball(200).overlaps(a.ball(200) * b.ball(200))
    assert (a + b).ball(200).overlaps(a.ball(200) + b.ball(200))


def test_conjugation_of_irrational_raises():
    with pytest.raises(ConjugationError):
        K3.gen.conjugate()
    assert K3(S("1+2i")).conjugate() == K3(S("1-2i"))


def test_fixed_point_examples(J, M_g2, g2):
    with pytest.raises(PointAtInfinityError):
        fixed_point_of(translation(g2))
    with pytest.raises(SelectionError):
        fixed_point_of(J)
    h = fixed_point_of(M_g2)
    assert h.u.field.degree == 3
    assert colinearity_certificate(M_g2, h)
    assert act(M_g2, h) == h


def test_fixed_points_are_ordered(M_g2):
    pts = fixed_points(M_g2)
    classes = {p.modulus_class for p in pts if not p.at_infinity}
    assert {"contracting", "expanding"} <= classes
    lam = eigenvalue_at(M_g2, fixed_point_of(M_g2))
    assert lam.ball(128).abs_upper() < 1


def test_colinearity_examples():
    h = H(S("1/2"), S("1/8+i"))
    assert colinearity_certificate(identity(), h)
    assert not colinearity_certificate(translation(IntegerPoint(G(1, 1), 0)), h)


@given(rational_points())
def test_translations_fix_no_finite_point(h):
    assert not colinearity_certificate(translation(IntegerPoint(G(1, 1), 0)), h)


def test_point_json_round_trip(M_g2):
    h = fixed_point_of(M_g2)
    back = point_from_json(point_to_json(h))
    assert back == h
    assert colinearity_certificate(M_g2, back)


def test_powers_share_fixed_points(M_g2):
    h = fixed_point_of(M_g2)
    assert colinearity_certificate(M_g2 @ M_g2, h)
    assert colinearity_certificate(M_g2.inverse(), h)


def test_torsion_sequence_is_rejected():
    with pytest.raises(TorsionMatrixError):
        euler_matrix(DigitSequence((IntegerPoint(G(0), 0),), (IntegerPoint(G(0), 0),)))
