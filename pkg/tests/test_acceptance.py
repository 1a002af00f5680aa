"""Acceptance checks at their stated sizes, tolerances and time budgets.

Each check prints one PASS/FAIL line (collected into the terminal summary).
Run directly with ``python3 tests/test_acceptance.py`` for the lines alone.
"""

import pytest

from heisencf.selftest import CHECKS, run_check

SEED = 0
RESULTS = {}


def result(n):
    if n not in RESULTS:
        RESULTS[n] = run_check(n, SEED)
    return RESULTS[n]


BAR_FORM = pytest.mark.xfail(
    strict=True,
    reason="(J T_g)^dagger = J T_(conj u, v) is false unless u is imaginary and v real; "
    "the identity that holds is (J T_g)^dagger = J T_(g^-1)",
)


@pytest.mark.parametrize(
    "number",
    [pytest.param(n, marks=BAR_FORM) if n == 2 else n for n, *_ in CHECKS],
    ids=[title.replace(" ", "_") for _, title, *_ in CHECKS],
)
def test_criterion(number):
    r = result(number)
    assert r.passed, r.line()


def test_generator_identities_hold_with_inverse_letter():
    # the part of the generator check that is true: unitarity, the five
    # labeled-entry identities and the adjoint formula with g^-1
    c = result(2).counts
    assert c["word_failures"] == 0
    assert c["inverse_form_failures"] == 0
    assert c["letters"] > 0


if __name__ == "__main__":
    for n, *_ in CHECKS:
        print(run_check(n, SEED).line())
