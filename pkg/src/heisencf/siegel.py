"""The Heisenberg group as the Siegel quadric |u|^2 - 2 Re(v) = 0.

Points carry scalars from one of three backends:

* ``rational`` -- :class:`GaussianRational`, everything exact;
* ``field``    -- number-field elements (see :mod:`heisencf.numfield`), exact
  arithmetic but conjugation is only available for Q(i)-valued elements;
* ``ball``     -- :class:`ComplexBall` enclosures.

Exact backends never take square roots: gauge norms and distances are
reported as fourth powers (``|v|^2``) so comparisons stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ball import DEFAULT_PRECISION, ComplexBall, ball_eval
from .errors import (
    BackendMismatchError,
    InversionAtOriginError,
    NotLatticePointError,
    NotOnQuadricError,
    PointAtInfinityError,
)
from .gaussian import (
    GaussianInteger,
    GaussianRational,
    format_scalar,
    ggcd,
    parse_scalar,
    unit_normalizer,
)

__all__ = [
    "HeisenbergPoint",
    "ProjectivePoint",
    "IntegerPoint",
    "ORIGIN",
    "INFINITY",
    "backend_of",
    "conj",
    "group_mul",
    "group_inv",
    "koranyi_inv",
    "gauge_norm4",
    "gauge_norm",
    "distance4",
    "distance",
    "planar_to_projective",
    "projective_to_planar",
    "integer_points",
    "distance_w",
    "pairing",
]


def backend_of(x) -> str:
    if isinstance(x, (GaussianRational, GaussianInteger, int, Fraction)):
        return "rational"
    if isinstance(x, ComplexBall):
        return "ball"
    if hasattr(x, "field"):
        return "field"
    raise TypeError(f"unsupported scalar {x!r}")


def conj(x):
    if isinstance(x, int):
        return x
    return x.conjugate()


def _is_zero(x) -> bool:
    if isinstance(x, ComplexBall):
        return x.is_exact() and x.contains_zero()
    if isinstance(x, int):
        return x == 0
    return x.is_zero()


def _unify(*xs):
    """Bring scalars to a common backend (rational < field, rational < ball)."""
    kinds = [backend_of(x) for x in xs]
    out = [GaussianRational.coerce(x) if k == "rational" else x for x, k in zip(xs, kinds)]
    if "field" in kinds and "ball" in kinds:
        raise BackendMismatchError("cannot mix number-field and ball scalars")
    if "field" in kinds:
        fields = {x.field for x, k in zip(xs, kinds) if k == "field"}
        if len(fields) > 1:
            raise BackendMismatchError("scalars live in different number fields")
        fld = fields.pop()
        out = [fld(x) if k == "rational" else x for x, k in zip(out, kinds)]
    elif "ball" in kinds:
        prec = min(x.prec for x, k in zip(xs, kinds) if k == "ball")
        out = [ComplexBall.exact(x, prec) if k == "rational" else x for x, k in zip(out, kinds)]
    return out


def _quadric_value(u, v):
    return u * conj(u) - (v + conj(v))


class HeisenbergPoint:
    """A planar point (u, v) on the Siegel quadric."""

    __slots__ = ("u", "v")

    def __init__(self, u, v, *, check: bool = True):
        u, v = _unify(u, v)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        if check:
            self._check()

    @classmethod
    def _raw(cls, u, v) -> "HeisenbergPoint":
        h = object.__new__(cls)
        object.__setattr__(h, "u", u)
        object.__setattr__(h, "v", v)
        return h

    def __setattr__(self, name, value):
        raise AttributeError("HeisenbergPoint is immutable")

    def _check(self):
        kind = self.backend
        if kind == "rational":
            if self.u.norm() != 2 * self.v.real:
                raise NotOnQuadricError(f"{self} is not on the Siegel quadric")
        elif kind == "ball":
            if not _quadric_value(self.u, self.v).contains_zero():
                raise NotOnQuadricError("ball constraint excludes zero")
        elif self.u.is_rational() and self.v.is_rational():
            if self.u.to_rational().norm() != 2 * self.v.to_rational().real:
                raise NotOnQuadricError(f"{self} is not on the Siegel quadric")
        # irrational field points are certified where they are produced

    @property
    def backend(self) -> str:
        return backend_of(self.v)

    def is_origin(self) -> bool:
        return _is_zero(self.u) and _is_zero(self.v)

    def is_rational(self) -> bool:
        kind = self.backend
        if kind == "rational":
            return True
        if kind == "field":
            return self.u.is_rational() and self.v.is_rational()
        return False

    def to_rational(self) -> "HeisenbergPoint":
        if self.backend == "rational":
            return self
        if self.backend == "field" and self.is_rational():
            return HeisenbergPoint._raw(self.u.to_rational(), self.v.to_rational())
        raise TypeError("point does not have Q(i) coordinates")

    def ball(self, prec: int = DEFAULT_PRECISION) -> "HeisenbergPoint":
        return HeisenbergPoint._raw(ball_eval(self.u, prec), ball_eval(self.v, prec))

    def projective(self) -> "ProjectivePoint":
        return planar_to_projective(self)

    def vector(self):
        one = self.v.field.one if self.backend == "field" else GaussianRational(1)
        if self.backend == "ball":
            one = ComplexBall.exact(1, self.v.prec)
        return (one, self.u, self.v)

    def __mul__(self, other):
        if isinstance(other, IntegerPoint):
            other = other.point
        if not isinstance(other, HeisenbergPoint):
            return NotImplemented
        return group_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, IntegerPoint):
            return group_mul(other.point, self)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, IntegerPoint):
            other = other.point
        if not isinstance(other, HeisenbergPoint):
            return NotImplemented
        try:
            u, v, u2, v2 = _unify(self.u, self.v, other.u, other.v)
        except BackendMismatchError:
            return False
        return u == u2 and v == v2

    def __hash__(self):
        if self.is_rational():
            r = self.to_rational()
            return hash((r.u, r.v))
        return hash((self.u, self.v))

    def __repr__(self):
        return f"HeisenbergPoint({_show(self.u)}, {_show(self.v)})"

    def to_json(self) -> dict:
        if self.backend != "rational":
            raise TypeError("only Q(i) points have the plain JSON form")
        return {"u": format_scalar(self.u), "v": format_scalar(self.v)}

    @classmethod
    def from_json(cls, obj: dict) -> "HeisenbergPoint":
        return cls(parse_scalar(obj["u"]), parse_scalar(obj["v"]))


def _show(x) -> str:
    if isinstance(x, GaussianRational):
        return format_scalar(x)
    return repr(x)


ORIGIN = HeisenbergPoint(0, 0)


# --------------------------------------------------------------------------
# integer points


@dataclass(frozen=True)
class IntegerPoint:
    """gamma = (a, |a|^2/2 + c i) in S(Z); needs Re(a) + Im(a) even."""

    a: GaussianInteger
    c: int

    def __post_init__(self):
        a = GaussianInteger.coerce(self.a)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", int(self.c))
        if (a.re + a.im) % 2:
            raise NotLatticePointError(f"|{a}|^2 is odd; ({a}, ...) is not in S(Z)")

    @property
    def v(self) -> GaussianInteger:
        return GaussianInteger(self.a.norm() // 2, self.c)

    @property
    def point(self) -> HeisenbergPoint:
        return HeisenbergPoint._raw(GaussianRational(self.a), GaussianRational(self.v))

    @classmethod
    def from_uv(cls, u, v) -> "IntegerPoint":
        u, v = GaussianRational.coerce(u), GaussianRational.coerce(v)
        if not (u.is_integral() and v.is_integral()):
            raise NotLatticePointError(f"({u}, {v}) has non-integral coordinates")
        if u.norm() != 2 * v.real:
            raise NotOnQuadricError(f"({u}, {v}) is not on the Siegel quadric")
        return cls(u.num, v.b)

    @classmethod
    def from_point(cls, h: HeisenbergPoint) -> "IntegerPoint":
        h = h.to_rational()
        return cls.from_uv(h.u, h.v)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.c == 0

    def inverse(self) -> "IntegerPoint":
        return IntegerPoint(-self.a, -self.c)

    def __mul__(self, other: "IntegerPoint") -> "IntegerPoint":
        if not isinstance(other, IntegerPoint):
            return NotImplemented
        v = self.v + self.a.conjugate() * other.a + other.v
        return IntegerPoint(self.a + other.a, v.im)

    def bar(self) -> "IntegerPoint":
        """(conj(u), v), the involution written with an overline in the
        literature; note (J T_g)^dagger = J T_{g^-1}, not J T_{g.bar()}."""
        return IntegerPoint(self.a.conjugate(), self.c)

    def sort_key(self) -> tuple[int, int, int]:
        return (self.a.re, self.a.im, self.c)

    def __repr__(self):
        return f"IntegerPoint({self.a}, {self.c})"

    def to_json(self) -> dict:
        return {"a": str(self.a), "c": self.c}

    @classmethod
    def from_json(cls, obj) -> "IntegerPoint":
        if isinstance(obj, (list, tuple)):
            a, c = obj
        else:
            a, c = obj["a"], obj["c"]
        a = parse_scalar(a) if isinstance(a, str) else GaussianRational(a)
        if not a.is_integral():
            raise NotLatticePointError(f"a = {a} is not a Gaussian integer")
        return cls(a.num, int(c))


ZERO = IntegerPoint(GaussianInteger(0, 0), 0)


def integer_points(a_bound: int, c_bound: int):
    """All gamma with |Re a|, |Im a| <= a_bound and |c| <= c_bound."""
    for x in range(-a_bound, a_bound + 1):
        for y in range(-a_bound, a_bound + 1):
            if (x + y) % 2:
                continue
            for c in range(-c_bound, c_bound + 1):
                yield IntegerPoint(GaussianInteger(x, y), c)


# --------------------------------------------------------------------------
# group structure


def _as_point(h) -> HeisenbergPoint:
    return h.point if isinstance(h, IntegerPoint) else h


def group_mul(h1, h2) -> HeisenbergPoint:
    """(u1, v1) * (u2, v2) = (u1 + u2, v1 + conj(u1) u2 + v2)."""
    h1, h2 = _as_point(h1), _as_point(h2)
    u1, v1, u2, v2 = _unify(h1.u, h1.v, h2.u, h2.v)
    return HeisenbergPoint._raw(u1 + u2, v1 + conj(u1) * u2 + v2)


def group_inv(h) -> HeisenbergPoint:
    h = _as_point(h)
    return HeisenbergPoint._raw(-h.u, conj(h.v))


def koranyi_inv(h):
    """iota(u, v) = (-u/v, 1/v); on projective points this is the action of J."""
    if isinstance(h, ProjectivePoint):
        return ProjectivePoint(-h.p, h.r, -h.q, check=False)
    h = _as_point(h)
    if isinstance(h.v, ComplexBall):
        if h.v.contains_zero():
            raise InversionAtOriginError("v encloses 0")
    elif _is_zero(h.v):
        raise InversionAtOriginError("the Koranyi inversion is undefined at the origin")
    w = 1 / h.v
    return HeisenbergPoint._raw(-h.u * w, w)


def gauge_norm4(h, prec: int = DEFAULT_PRECISION):
    """||h||^4 = |v|^2: a Fraction on the rational backend, a real ball otherwise."""
    h = _as_point(h)
    if h.backend == "rational":
        return h.v.norm()
    return ball_eval(h.v, prec).abs2()


def gauge_norm(h, prec: int = DEFAULT_PRECISION) -> float:
    """||h|| = |v|^(1/2) as a float (informational; decisions use gauge_norm4)."""
    h = _as_point(h)
    if h.backend == "rational":
        return float(h.v.norm()) ** 0.25
    return float(ball_eval(h.v, prec).abs2().mid_re) ** 0.25


def _distance_w(h1, h2):
    u1, v1, u2, v2 = _unify(h1.u, h1.v, h2.u, h2.v)
    return v1 - u1 * conj(u2) + conj(v2)


def distance_w(h1, h2):
    """w with d(h1, h2)^2 = |w|, namely v1 - u1 conj(u2) + conj(v2).

    Only the second argument is conjugated; when it cannot be (a number-field
    point) the arguments are swapped, which changes w to a conjugate.
    """
    h1, h2 = _as_point(h1), _as_point(h2)
    if h2.backend == "field" and not h2.is_rational():
        h1, h2 = h2, h1
    return _distance_w(h1, h2)


def distance4(h1, h2, prec: int = DEFAULT_PRECISION):
    """d(h1, h2)^4 = |v1 - u1 conj(u2) + conj(v2)|^2 (Fraction when exact)."""
    w = distance_w(h1, h2)
    if backend_of(w) == "rational":
        return GaussianRational.coerce(w).norm()
    return ball_eval(w, prec).abs2()


def distance(h1, h2, prec: int = DEFAULT_PRECISION) -> float:
    d4 = distance4(h1, h2, prec)
    if isinstance(d4, ComplexBall):
        d4 = d4.mid_re
    return float(d4) ** 0.25


# --------------------------------------------------------------------------
# projective model


class ProjectivePoint:
    """(q : r : p) with |r|^2 - 2 Re(conj(q) p) = 0.

    Exact coordinates are stored in canonical form: Gaussian integers with
    gcd 1, first nonzero coordinate with argument in [0, pi/2).  Number-field
    coordinates are scaled so the first nonzero coordinate is 1.
    """

    __slots__ = ("q", "r", "p")

    def __init__(self, q, r, p, *, check: bool = True):
        q, r, p = _unify(q, r, p)
        if all(_is_zero(x) for x in (q, r, p)):
            raise ValueError("(0:0:0) is not a projective point")
        kind = backend_of(q)
        if check and kind == "rational":
            if r.norm() != 2 * (q.conjugate() * p).real:
                raise NotOnQuadricError(f"({q}:{r}:{p}) is not on the Siegel quadric")
        if kind == "rational":
            q, r, p = _canonical_exact(q, r, p)
        elif kind == "field":
            lead = next(x for x in (q, r, p) if not _is_zero(x))
            q, r, p = q / lead, r / lead, p / lead
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("ProjectivePoint is immutable")

    @property
    def backend(self) -> str:
        return backend_of(self.q)

    def is_infinity(self) -> bool:
        return _is_zero(self.q)

    def coords(self):
        return (self.q, self.r, self.p)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.coords() == other.coords()

    def __hash__(self):
        return hash(self.coords())

    def __repr__(self):
        return f"ProjectivePoint({_show(self.q)} : {_show(self.r)} : {_show(self.p)})"

    def to_json(self) -> dict:
        return {"q": format_scalar(self.q), "r": format_scalar(self.r), "p": format_scalar(self.p)}

    @classmethod
    def from_json(cls, obj: dict) -> "ProjectivePoint":
        return cls(parse_scalar(obj["q"]), parse_scalar(obj["r"]), parse_scalar(obj["p"]))


def _canonical_exact(q, r, p):
    from math import lcm

    xs = [GaussianRational.coerce(x) for x in (q, r, p)]
    L = lcm(*(x.den for x in xs))
    ints = [x.num * (L // x.den) for x in xs]
    g = GaussianInteger(0, 0)
    for z in ints:
        g = ggcd(g, z)
    ints = [GaussianInteger.coerce(GaussianRational(z) / g) for z in ints]
    lead = next(z for z in ints if not z.is_zero())
    w = unit_normalizer(lead)
    return tuple(GaussianRational(z * w) for z in ints)


INFINITY = ProjectivePoint(0, 0, 1)


def pairing(x, y):
    """x^dagger J y = -conj(q1) p2 + conj(r1) r2 - conj(p1) q2.

    Takes ProjectivePoints or raw (q, r, p) triples.  Two points of the quadric
    pair to zero exactly when they are the same projective point.
    """
    q1, r1, p1 = x.coords() if isinstance(x, ProjectivePoint) else x
    q2, r2, p2 = y.coords() if isinstance(y, ProjectivePoint) else y
    q1, r1, p1, q2, r2, p2 = _unify(q1, r1, p1, q2, r2, p2)
    return -conj(q1) * p2 + conj(r1) * r2 - conj(p1) * q2


def planar_to_projective(h) -> ProjectivePoint:
    h = _as_point(h)
    one = h.vector()[0]
    return ProjectivePoint(one, h.u, h.v, check=False)


def projective_to_planar(P: ProjectivePoint) -> HeisenbergPoint:
    if P.is_infinity():
        raise PointAtInfinityError("(0:0:1) has no planar coordinates")
    return HeisenbergPoint._raw(P.r / P.q, P.p / P.q)
