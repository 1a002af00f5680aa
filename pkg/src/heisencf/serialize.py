"""JSON forms of points, matrices, words and digit sequences."""

from __future__ import annotations

from .cf import Convergent, DigitSequence
from .gaussian import GaussianRational, parse_scalar
from .numfield import FieldElement, NumberField
from .siegel import HeisenbergPoint, IntegerPoint, ProjectivePoint
from .unitary import GeneratorWord, UnitaryMatrix


def point_to_json(h) -> dict:
    if isinstance(h, ProjectivePoint):
        return h.to_json()
    if isinstance(h, IntegerPoint):
        h = h.point
    if h.backend == "rational":
        return h.to_json()
    if h.backend == "field":
        if h.is_rational():
            return h.to_rational().to_json()
        return {"field": h.u.field.to_json(), "u": h.u.to_json(), "v": h.v.to_json()}
    raise TypeError("ball points have no JSON form")


def point_from_json(obj):
    if "q" in obj:
        return ProjectivePoint.from_json(obj)
    if "field" in obj:
        K = NumberField.from_json(obj["field"])
        u = K.element([parse_scalar(c) for c in obj["u"]])
        v = K.element([parse_scalar(c) for c in obj["v"]])
        return HeisenbergPoint._raw(u, v)
    if "a" in obj:
        return IntegerPoint.from_json(obj).point
    return HeisenbergPoint.from_json(obj)


def matrix_from_json(obj) -> UnitaryMatrix:
    if isinstance(obj, dict):
        obj = obj["matrix"]
    return UnitaryMatrix(obj)


def word_from_json(obj) -> GeneratorWord:
    if isinstance(obj, list):
        return GeneratorWord(None, tuple(IntegerPoint.from_json(g) for g in obj))
    return GeneratorWord.from_json(obj)


def sequence_from_json(obj) -> DigitSequence:
    return DigitSequence.from_json(obj)


def convergent_to_json(c: Convergent) -> dict:
    return c.to_json()


def scalar_to_json(x) -> str | list:
    if isinstance(x, FieldElement):
        return x.to_json()
    return str(GaussianRational.coerce(x)) if not isinstance(x, str) else x
