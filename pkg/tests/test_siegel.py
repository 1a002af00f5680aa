import pytest
from hypothesis import assume, given

from conftest import lattice_points, rational_points
from heisencf.errors import (
    BackendMismatchError,
    InversionAtOriginError,
    NotLatticePointError,
    NotOnQuadricError,
    PointAtInfinityError,
)
from heisencf.gaussian import GaussianInteger as G, parse_scalar as S
from heisencf.siegel import (
    INFINITY,
    ORIGIN,
    HeisenbergPoint as H,
    IntegerPoint,
    ProjectivePoint,
    distance,
    distance4,
    gauge_norm,
    gauge_norm4,
    group_inv,
    group_mul,
    koranyi_inv,
    pairing,
    planar_to_projective,
    projective_to_planar,
)


def P(u, v):
    return H(S(u), S(v))


def test_quadric_is_enforced():
    with pytest.raises(NotOnQuadricError):
        P("1", "7")
    with pytest.raises(NotOnQuadricError):
        ProjectivePoint(S("1"), S("0"), S("1"))
    # |2+2i|^2 = 8 = 2 Re(2 (2+2i)), so this one is on the quadric
    X = ProjectivePoint(S("2"), S("2+2i"), S("2+2i"))
    assert projective_to_planar(X) == P("1+i", "1+i")


def test_group_law_examples():
    h = P("1+i", "1")
    assert group_mul(ORIGIN, h) == h
    assert group_mul(h, P("1-i", "1")) == P("2", "2-2i")
    assert group_inv(ORIGIN) == ORIGIN
    assert group_inv(h) == P("-1-i", "1")
    assert group_inv(P("2", "2+i")) == P("-2", "2-i")


def test_inversion_examples():
    assert koranyi_inv(P("1+i", "1")) == P("-1-i", "1")
    assert koranyi_inv(ProjectivePoint(1, 0, 0)) == INFINITY
    with pytest.raises(InversionAtOriginError):
        koranyi_inv(ORIGIN)


def test_norm_examples():
    assert gauge_norm(ORIGIN) == 0
    assert gauge_norm(P("1+i", "1")) == 1
    assert gauge_norm4(P("2", "2+i")) == 5
    assert gauge_norm(P("2", "2+i")) == pytest.approx(5**0.25)
    assert distance(P("1+i", "1"), ORIGIN) == 1


def test_projective_examples():
    h = P("1/2", "1/8+i")
    X = planar_to_projective(h)
    assert projective_to_planar(X) == h
    with pytest.raises(PointAtInfinityError):
        projective_to_planar(INFINITY)


def test_lattice_points_need_even_norm():
    with pytest.raises(NotLatticePointError):
        IntegerPoint(G(1, 0), 0)
    g = IntegerPoint(G(2, 0), 1)
    assert g.v == G(2, 1)
    assert IntegerPoint.from_json([S("2"), 1]) == g == IntegerPoint.from_json(g.to_json())


def test_ball_and_field_do_not_mix():
    from heisencf.numfield import NumberField

    K = NumberField((S("-2"), 0, 1))
    with pytest.raises(BackendMismatchError):
        pairing((K.gen, 0, 0), (P("0", "0").ball(64).u, 0, 1))


@given(rational_points(), rational_points(), rational_points())
def test_group_axioms(a, b, c):
    assert group_mul(group_mul(a, b), c) == group_mul(a, group_mul(b, c))
    assert group_mul(a, group_inv(a)) == ORIGIN
    assert group_mul(group_inv(a), a) == ORIGIN


@given(rational_points())
def test_inversion_is_involution(h):
    assume(not h.is_origin())
    assert koranyi_inv(koranyi_inv(h)) == h


@given(rational_points())
def test_inversion_scales_norm(h):
    assume(not h.is_origin())
    assert gauge_norm4(koranyi_inv(h)) * gauge_norm4(h) == 1


@given(rational_points(), rational_points())
def test_distance_symmetric_and_left_invariant(a, b):
    assert distance4(a, b) == distance4(b, a)
    assert distance4(a, a) == 0
    g = P("1+i", "1")
    assert distance4(group_mul(g, a), group_mul(g, b)) == distance4(a, b)


@given(rational_points(), rational_points())
def test_distance_is_norm_of_difference(a, b):
    assert distance4(a, b) == gauge_norm4(group_mul(group_inv(a), b))


@given(rational_points())
def test_ball_backend_agrees(h):
    hb = h.ball(128)
    lo, hi = gauge_norm4(hb).real_bounds()
    assert lo <= gauge_norm4(h) <= hi


@given(rational_points(), rational_points())
def test_pairing_vanishes_iff_same_point(a, b):
    z = pairing(a.projective(), b.projective())
    assert z.is_zero() == (a == b)


@given(lattice_points, lattice_points)
def test_lattice_is_a_subgroup(g, h):
    assert (g * h).point == group_mul(g.point, h.point)
    assert g.inverse().point == group_inv(g.point)
