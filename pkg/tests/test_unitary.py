import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import large_digits, lattice_points, rational_points, words
from heisencf.errors import NotUnitaryError, PointAtInfinityError
from heisencf.gaussian import UNITS, GaussianInteger as G, parse_scalar as S
from heisencf.siegel import ORIGIN, HeisenbergPoint as H, IntegerPoint, koranyi_inv
from heisencf.unitary import (
    GeneratorWord,
    UnitaryMatrix,
    act,
    corner_zero_structure,
    dagger_bar_form_holds,
    dagger_word_identity_check,
    decompose_power4,
    diagonal,
    diagonals,
    identity,
    is_root_of_unity,
    tokens_to_matrix,
    translation,
    verify_unitary,
    word_to_matrix,
)

I = identity()
ZERO = IntegerPoint(G(0), 0)


def test_generator_examples(J, g2):
    assert J @ J == I
    assert translation(ZERO) == I
    assert len(diagonals()) == 8
    assert verify_unitary(J)
    assert verify_unitary(translation(g2))
    bad = [list(r) for r in I.rows()]
    bad[0][2] = G(1)
    assert not verify_unitary(bad)
    with pytest.raises(NotUnitaryError):
        UnitaryMatrix(bad)


def test_all_sixteen_unit_pairs_are_unitary():
    mats = [diagonal(a, b) for a in UNITS for b in UNITS]
    assert all(verify_unitary(D) for D in mats)
    assert len(set(mats)) == 16
    # the enumerated eight are those with beta = +-1
    assert set(diagonals()) == {diagonal(a, b) for a in UNITS for b in (G(1), G(-1))}


@pytest.mark.parametrize("D", diagonals())
def test_diagonal_properties(D, J):
    assert D**4 == I
    assert D @ J == J @ D
    assert D.inverse() == D.dagger()
    assert is_root_of_unity(D)[0] and 4 % is_root_of_unity(D)[1] == 0


def test_word_examples(J, g2):
    assert word_to_matrix(GeneratorWord(ZERO, ())) == I
    assert tokens_to_matrix(["J", ZERO, "J"]) == I
    assert (J @ translation(g2)).to_json() == ["-2-1i", "-2", "-1", "2", "1", "0", "-1", "0", "0"]


def test_act_examples(J, g2):
    p = H(S("1/2"), S("1/8+i"))
    assert act(I, p) == p
    assert act(translation(g2), ORIGIN) == g2.point
    assert act(J, p) == koranyi_inv(p)
    with pytest.raises(PointAtInfinityError):
        act(J, ORIGIN)


def test_inverse_examples(J, g2):
    assert J.inverse() == J
    assert translation(g2).inverse() == translation(g2.inverse())


def test_corner_examples(J, g2):
    T = translation(g2)
    cs = corner_zero_structure(T)
    assert cs.kind == "DT" and cs.gamma == g2 and cs.D == I
    assert corner_zero_structure(T @ J).kind == "DTJ"
    assert corner_zero_structure(J @ T).kind == "DJT"
    assert corner_zero_structure(J @ T @ J).kind == "JTJD"


@given(large_digits, large_digits)
def test_two_letter_words_with_large_digits_have_no_zero_corner(a, b):
    assert corner_zero_structure(tokens_to_matrix(["J", a, "J", b])).kind == "none"


def test_dagger_examples():
    for text in ("0", "1+i", "2"):
        a = S(text).num
        g = IntegerPoint(a, 0 if a.is_zero() else 1)
        assert dagger_word_identity_check(g)


@given(lattice_points)
def test_dagger_is_inverse_letter(g):
    assert dagger_word_identity_check(g)


@given(lattice_points)
def test_dagger_bar_form_needs_special_letters(g):
    # (conj u, v) agrees with (-u, conj v) only when u is imaginary and v real
    assert dagger_bar_form_holds(g) == (g.a.re == 0 and g.c == 0)


def test_torsion_examples(J, g2):
    assert is_root_of_unity(J) == (True, 2)
    assert is_root_of_unity(translation(g2)) == (False, None)
    assert is_root_of_unity(J @ translation(g2)) == (False, None)


@given(words)
def test_words_are_unitary(toks):
    M = tokens_to_matrix(toks)
    assert verify_unitary(M)
    assert M.det().norm() == 1
    assert M @ M.inverse() == I


@given(words)
def test_word_normal_form_keeps_the_matrix(toks):
    w = GeneratorWord.from_tokens(toks)
    assert word_to_matrix(w) == tokens_to_matrix(toks)
    assert not any(g.is_zero() for g in w.body[:-1])
    assert GeneratorWord.from_json(w.to_json()) == w


def test_decompose_examples(J, M_g2):
    assert decompose_power4(I).tokens() == []
    assert decompose_power4(J).tokens() == []
    assert word_to_matrix(decompose_power4(M_g2)) == M_g2**4


@given(words)
def test_decompose_round_trip(toks):
    M = tokens_to_matrix(toks)
    assert word_to_matrix(decompose_power4(M)) == M**4


@given(st.sampled_from(diagonals()), words)
def test_decompose_absorbs_diagonals(D, toks):
    M = D @ tokens_to_matrix(toks)
    assert word_to_matrix(decompose_power4(M)) == M**4


@given(words, rational_points())
def test_action_is_a_group_action(toks, h):
    M = tokens_to_matrix(toks)
    try:
        left = act(M, act(M, h))
    except PointAtInfinityError:
        return
    assert left == act(M @ M, h)
