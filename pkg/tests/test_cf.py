import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import lattice_points, rational_points
from heisencf import corpus
from heisencf.cf import (
    Convergent,
    DigitSequence,
    convergents,
    detect_period,
    distance_trace,
    euler_matrix,
    expand,
    gauss_map,
    lagrange_expansion,
    lagrange_report,
    qproduct_check,
    vrelation_check,
    vrelation_lhs,
)
from heisencf.errors import DegenerateOrbitError, TorsionMatrixError
from heisencf.gaussian import GaussianInteger as G, ggcd, parse_scalar as S
from heisencf.lattice import FundamentalDomainConfig
from heisencf.numfield import colinearity_certificate, eigenvalue_at, fixed_point_of
from heisencf.siegel import ORIGIN, HeisenbergPoint as H, IntegerPoint
from heisencf.unitary import GeneratorWord, act, identity, j_matrix, tokens_to_matrix, translation

ZERO = IntegerPoint(G(0), 0)
H0 = H(S("0.6+0.2i"), S("0.2+0.3i"))


def test_gauss_map_fixes_origin():
    assert gauss_map(ORIGIN) == (ZERO, ORIGIN)


def test_expand_examples(g2):
    tr = expand(g2.point, 10)
    assert tr.digits == [g2] and tr.iterates == [ORIGIN] and tr.terminated
    assert expand(H0, 5).digits[0].is_zero()


@given(rational_points())
def test_rational_points_terminate_exactly(h):
    tr = expand(h, 10000)
    assert tr.terminated
    assert convergents(tr)[-1].point == h
    d = detect_period(h)
    assert d.period is None and list(d.preperiod) == tr.digits


@given(rational_points())
def test_later_digits_are_nonzero(h):
    assert not any(g.is_zero() for g in expand(h, 10000).digits[1:])


def test_single_digit_convergent(g2):
    (c,) = convergents([g2])
    assert c.projective == g2.point.projective()


@given(st.lists(lattice_points, min_size=1, max_size=6))
def test_convergents_match_the_word_action(digits):
    toks = [digits[0]]
    for g in digits[1:]:
        toks += ["J", g]
    c = convergents(digits)[-1]
    assert c.projective == act(tokens_to_matrix(toks), ORIGIN.projective())


def test_digits_do_not_depend_on_precision(M_g2):
    h = fixed_point_of(M_g2)
    lo = expand(h, 12, FundamentalDomainConfig(precision_start=64))
    hi = expand(h, 12, FundamentalDomainConfig(precision_start=1024))
    assert lo.digits == hi.digits


def test_detect_period_examples(M_g2):
    assert detect_period(ORIGIN) == DigitSequence((ZERO,), None)
    h = fixed_point_of(M_g2)
    d = detect_period(h, 500)
    assert d.period and len(d.period) >= 1
    assert colinearity_certificate(euler_matrix(d), h)


def test_detect_period_reports_not_found(M_g2):
    assert detect_period(fixed_point_of(M_g2), 1) is None


def test_euler_examples(g2, M_g2):
    assert euler_matrix(DigitSequence((ZERO,), (g2,))) == M_g2
    a = IntegerPoint(G(1, 1), 1)
    Ta = translation(a)
    assert euler_matrix(DigitSequence((a,), (g2,))) == Ta @ M_g2 @ Ta.inverse()


def test_euler_ignores_representation(g2):
    b = IntegerPoint(G(-1, 1), 3)
    d = DigitSequence((ZERO, b), (g2, b))
    assert colinearity_certificate(euler_matrix(d.unrolled(7)), fixed_point_of(euler_matrix(d)))


def test_sequence_json_and_normal_form(g2):
    d = DigitSequence((ZERO, g2, g2), (g2,))
    assert d.normalized() == DigitSequence((ZERO,), (g2,))
    assert DigitSequence.from_json(d.to_json()) == d
    assert DigitSequence.from_json({"preperiod": [[0, 0]], "period": [{"a": "2", "c": 1}]}) == DigitSequence((ZERO,), (g2,))


def test_prefixing_a_word_moves_the_limit(M_g2):
    h = fixed_point_of(M_g2)
    d = detect_period(h, 500)
    toks = [IntegerPoint(G(1, 1), -1), "J", IntegerPoint(G(2), 2)]
    A = tokens_to_matrix(toks)
    d2 = d.prepend_word(toks)
    Ah = act(A, h)
    assert colinearity_certificate(euler_matrix(d2), Ah)
    dist = distance_trace(Ah, d2, 40)
    assert dist[-1] < 1e-8


def test_lagrange_example(M_g2):
    h = fixed_point_of(M_g2)
    r = lagrange_report(M_g2, h)
    assert r.sequence.period is not None
    assert r.euler_certificate
    assert colinearity_certificate(euler_matrix(r.sequence), h)
    assert r.distances[r.certified_at] < 1e-8


def test_lagrange_power_gives_same_limit(M_g2):
    h = fixed_point_of(M_g2)
    d1 = lagrange_expansion(M_g2, h)
    d2 = lagrange_expansion(M_g2 @ M_g2, h)
    assert distance_trace(h, d1, 120)[-1] < 1e-8
    assert distance_trace(h, d2, 120)[-1] < 1e-8


def test_lagrange_rejects_translations(g2, M_g2):
    with pytest.raises(ValueError):
        lagrange_report(translation(g2), fixed_point_of(M_g2))


@pytest.mark.parametrize("seed", range(4))
def test_lagrange_on_conjugated_words(seed):
    M, h = corpus.random_fixed_point_case(random.Random(seed))
    r = lagrange_report(M, h)
    assert r.euler_certificate and r.certified_at <= 40


def test_qproduct_single_step(g2):
    # M = J T_g: Q' + QQ u1 - Q v1 = -1/v0 where (u0, v0) = J T_g (u1, v1)
    h1 = H(S("1/2"), S("1/8+i"))
    M = j_matrix() @ translation(g2)
    h0 = act(M, h1)
    assert eigenvalue_at(M, h1) == -1 / h0.v
    assert qproduct_check(GeneratorWord(None, (g2,)), h1)


def test_qproduct_empty_word():
    assert qproduct_check(GeneratorWord(None, ()), H0)


@settings(max_examples=25)
@given(st.lists(lattice_points.filter(lambda g: not g.is_zero()), min_size=4, max_size=4), rational_points())
def test_qproduct_on_rational_points(body, h):
    try:
        assert qproduct_check(GeneratorWord(None, tuple(body)), h)
    except DegenerateOrbitError:
        pass


def test_qproduct_at_a_field_point(M_g2, g2):
    assert qproduct_check(GeneratorWord(None, (g2,)), fixed_point_of(M_g2))


def test_vrelation(M_g2):
    h = fixed_point_of(M_g2)
    assert vrelation_check(M_g2, h)
    assert vrelation_check(M_g2 @ M_g2, h)
    with pytest.raises(TorsionMatrixError):
        vrelation_check(identity(), ORIGIN)


def test_vrelation_sign(M_g2):
    """The product of the two sides is -1, not +1."""
    h = fixed_point_of(M_g2)
    for M in (M_g2, M_g2 @ M_g2):
        assert vrelation_lhs(M, h) * eigenvalue_at(M, h) == h.u.field(-1)


def test_convergents_are_primitive():
    c = convergents([IntegerPoint(G(1, 1), 1), IntegerPoint(G(2), -1)])[-1]
    assert isinstance(c, Convergent)
    assert ggcd(ggcd(c.q, c.r), c.p).is_unit()
