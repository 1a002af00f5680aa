"""Seeded random inputs for the self-test and the acceptance suite.

Everything is drawn from one ``random.Random(seed)`` so a run is reproducible
from its seed alone.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .cf import DigitSequence
from .errors import HeisenbergError
from .gaussian import GaussianInteger, GaussianRational
from .numfield import fixed_point_of
from .siegel import HeisenbergPoint, IntegerPoint, integer_points
from .unitary import UnitaryMatrix, is_root_of_unity, tokens_to_matrix

A_BOUND = 3
C_BOUND = 3

ALL_DIGITS = list(integer_points(A_BOUND, C_BOUND))
NONZERO_DIGITS = [g for g in ALL_DIGITS if not g.is_zero()]
# digits with ||g|| >= 2, i.e. |v|^2 >= 16: words in these always converge
LARGE_DIGITS = [g for g in ALL_DIGITS if g.v.norm() >= 16]


def random_digit(rng: random.Random, pool=ALL_DIGITS) -> IntegerPoint:
    return rng.choice(pool)


def random_tokens(rng: random.Random, max_len: int = 12) -> list:
    """A random word in T_g and J with at most max_len letters in total."""
    n = rng.randint(1, max_len)
    toks = []
    for _ in range(n):
        toks.append("J" if rng.random() < 0.4 else random_digit(rng))
    return toks


def random_rational(rng: random.Random, den_max: int = 40, span: int = 3) -> GaussianRational:
    d = rng.randint(1, den_max)
    return GaussianRational(GaussianInteger(rng.randint(-span * d, span * d), rng.randint(-span * d, span * d)), d)


def random_rational_point(rng: random.Random, den_max: int = 40) -> HeisenbergPoint:
    u = random_rational(rng, den_max)
    t = Fraction(rng.randint(-4 * den_max, 4 * den_max), rng.randint(1, den_max))
    v = GaussianRational.from_parts(u.norm() / 2, t)
    return HeisenbergPoint(u, v)


def random_offlattice_point(rng: random.Random) -> HeisenbergPoint:
    while True:
        h = random_rational_point(rng)
        if not (h.u.is_integral() and h.v.is_integral()):
            return h


def _scale(rng, h):
    k = GaussianRational(GaussianInteger(rng.randint(-5, 5) or 1, rng.randint(-5, 5)), rng.randint(1, 7))
    return tuple(k * x for x in h.vector())


def random_projective_pair(rng: random.Random, den_max: int = 6):
    """Two raw coordinate triples on the quadric and whether the points they
    were built from coincide (about half of the time)."""
    h = random_rational_point(rng, den_max)
    g = h if rng.random() < 0.5 else random_rational_point(rng, den_max)
    return _scale(rng, h), _scale(rng, g), g == h


def random_nontorsion_word(rng: random.Random, max_len: int = 12) -> UnitaryMatrix:
    while True:
        M = tokens_to_matrix(random_tokens(rng, max_len))
        if not is_root_of_unity(M)[0]:
            return M


def random_periodic_sequence(rng: random.Random, pre_max: int = 3, per_max: int = 4) -> DigitSequence:
    pre = [random_digit(rng, NONZERO_DIGITS) for _ in range(rng.randint(1, pre_max))]
    per = [random_digit(rng, LARGE_DIGITS) for _ in range(rng.randint(1, per_max))]
    return DigitSequence(tuple(pre), tuple(per))


def _b_word(rng, kmax: int):
    toks = []
    for _ in range(rng.randint(1, kmax)):
        toks += ["J", random_digit(rng, LARGE_DIGITS)]
    return toks


def random_fixed_point_case(rng: random.Random, kmax: int = 3):
    """(M, h): M = A B A^-1 with B a large-digit word and A a short random word,
    h the contracting-eigenvalue fixed point of M."""
    while True:
        B = tokens_to_matrix(_b_word(rng, kmax))
        A_toks = [random_digit(rng, NONZERO_DIGITS)]
        if rng.random() < 0.5:
            A_toks += ["J", random_digit(rng, NONZERO_DIGITS)]
        A = tokens_to_matrix(A_toks)
        M = A @ B @ A.inverse()
        if is_root_of_unity(M)[0]:
            continue
        try:
            h = fixed_point_of(M)
        except HeisenbergError:
            continue
        return M, h
