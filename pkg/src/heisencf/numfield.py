"""Exact arithmetic in K = Q(i)[t]/(f) for irreducible f of degree <= 3.

A field is a modulus together with the index of one of its roots; roots are
isolated by certified discs (any disc of radius n|f(z)/f'(z)| about z holds a
root of a degree-n polynomial, so pairwise disjoint discs isolate).  mpmath
supplies the first approximations, refinement is dyadic Newton iteration
with the same certificate.

Fixed points of a unitary matrix are eigenvectors over K.  Whether an
eigenvector is null (lies on the quadric) is decided exactly:

* if |lambda| != 1, then |lambda|^2 z^dagger J z = z^dagger J z forces 0;
* if |lambda| = 1, conj(lambda) = 1/lambda lies in K, so conjugation is a
  field automorphism and z^dagger J z can be evaluated in K.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from decimal import Context
from math import floor, lcm

import mpmath

from .ball import DEFAULT_PRECISION, PRECISION_CAP, ComplexBall, _rad_up, _sqrt_up, precision_schedule
from .errors import (
    BackendMismatchError,
    CertificationError,
    ConjugationError,
    PointAtInfinityError,
    PrecisionCapError,
    SelectionError,
)
from .gaussian import UNITS, GaussianInteger, GaussianRational, format_scalar, gaussian_sqrt, parse_scalar
from .siegel import HeisenbergPoint

__all__ = [
    "NumberField",
    "FieldElement",
    "FixedPoint",
    "char_poly",
    "factor_spectrum",
    "isolate_roots",
    "fixed_points",
    "fixed_point_of",
    "colinearity_certificate",
    "eigenvalue_at",
    "is_root_of_unity_element",
]

_Q = GaussianRational


# --------------------------------------------------------------------------
# polynomials over Q(i): tuples of coefficients, constant term first


def _trim(p):
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return tuple(p)


def _poly(coeffs):
    return _trim(_Q.coerce(c) if not isinstance(c, str) else parse_scalar(c) for c in coeffs)


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_deriv(p):
    return tuple(c * k for k, c in enumerate(p))[1:]


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [_Q(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return _trim(out)


def poly_sub(p, q):
    n = max(len(p), len(q))
    p = list(p) + [_Q(0)] * (n - len(p))
    q = list(q) + [_Q(0)] * (n - len(q))
    return _trim(a - b for a, b in zip(p, q))


def poly_divmod(p, q):
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(_trim(p))
    out = [_Q(0)] * max(0, len(r) - len(q) + 1)
    lead = q[-1]
    while len(r) >= len(q) and r:
        k = len(r) - len(q)
        c = r[-1] / lead
        out[k] = c
        for i, b in enumerate(q):
            r[k + i] = r[k + i] - c * b
        r = list(_trim(r))
    return _trim(out), tuple(r)


def _monic(p):
    return tuple(c / p[-1] for c in p)


def format_poly(p) -> list[str]:
    return [format_scalar(c) for c in p]


# --------------------------------------------------------------------------
# root isolation


def _to_fraction(x) -> Fraction:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0:
        return Fraction(0)
    return (-1) ** sign * Fraction(man) * (Fraction(2) ** exp)


def _disc_radius(p, z) -> Fraction:
    """Radius n|p(z)/p'(z)| (rounded up) of a disc about z holding a root."""
    fz = poly_eval(p, z)
    dz = poly_eval(poly_deriv(p), z)
    if fz.is_zero():
        return Fraction(0)
    if dz.is_zero():
        return None
    n = len(p) - 1
    return _rad_up(n * _sqrt_up(fz.norm() / dz.norm()))


def _round_dyadic(x: GaussianRational, bits: int) -> GaussianRational:
    s = 1 << bits
    return _Q.from_parts(Fraction(floor(x.real * s + Fraction(1, 2)), s), Fraction(floor(x.imag * s + Fraction(1, 2)), s))


def _disjoint(d1, d2) -> bool:
    (c1, r1), (c2, r2) = d1, d2
    return (c1 - c2).norm() > (r1 + r2) ** 2


@lru_cache(maxsize=256)
def isolate_roots(p) -> tuple:
    """Pairwise disjoint discs (center, radius), one around each root of the
    squarefree polynomial p, in a fixed order."""
    p = _trim(p)
    n = len(p) - 1
    if n < 1:
        return ()
    if n == 1:
        return ((-p[0] / p[1], Fraction(0)),)
    for dps in (60, 120, 240, 480):
        with mpmath.workdps(dps):
            cs = [
                mpmath.mpc(mpmath.mpf(c.real.numerator) / c.real.denominator,
                           mpmath.mpf(c.imag.numerator) / c.imag.denominator)
                for c in reversed(p)
            ]
            try:
                approx = mpmath.polyroots(cs, maxsteps=400, extraprec=2 * dps)
            except mpmath.libmp.NoConvergence:
                continue
            zs = [_round_dyadic(_Q.from_parts(_to_fraction(z.real), _to_fraction(z.imag)), 3 * dps) for z in approx]
        discs = []
        for z in zs:
            r = _disc_radius(p, z)
            if r is None:
                break
            discs.append((z, r))
        else:
            if all(_disjoint(discs[i], discs[j]) for i in range(n) for j in range(i + 1, n)):
                return tuple(sorted(discs, key=lambda d: (d[0].real, d[0].imag)))
    raise CertificationError(f"could not isolate the roots of {format_poly(p)}")


@lru_cache(maxsize=1024)
def _root_ball(p, index: int, prec: int) -> ComplexBall:
    c0, r0 = isolate_roots(p)[index]
    if r0 == 0:
        return ComplexBall.exact(c0, prec + 64)
    bits = prec + 40
    target = Fraction(1, 1 << (prec + 8))
    z, r = c0, r0
    dp = poly_deriv(p)
    for _ in range(200):
        if r <= target:
            break
        z = _round_dyadic(z - poly_eval(p, z) / poly_eval(dp, z), bits)
        r = _disc_radius(p, z)
        if r is None:
            raise CertificationError("Newton step hit a critical point")
    else:
        raise CertificationError("root refinement did not converge")
    # the refined disc must sit inside the isolating one to name the same root
    if (z, r) != (c0, r0) and (r0 <= r or (z - c0).norm() > (r0 - r) ** 2):
        raise CertificationError("refined root left its isolating disc")
    return ComplexBall.exact(z, prec + 64) + ComplexBall(0, 0, 0, r, prec + 64)


# --------------------------------------------------------------------------
# fields and elements


class NumberField:
    """Q(i)[t]/(f) with t identified with the ``index``-th isolated root of f."""

    __slots__ = ("modulus", "index")

    def __init__(self, modulus, index: int = 0):
        f = _monic(_poly(modulus))
        if not 2 <= len(f) <= 4:
            raise ValueError("modulus must have degree 1, 2 or 3")
        if len(f) > 2 and any(poly_eval(f, u).is_zero() for u in UNITS):
            raise ValueError("modulus has a unit root; it is reducible")
        if len(f) == 3:
            a, b = f[1], f[0]
            disc = a * a - 4 * b
            if _q_is_square(disc):
                raise ValueError("quadratic modulus splits over Q(i)")
        if len(poly_gcd(f, poly_deriv(f))) > 1:
            raise ValueError("modulus has a repeated root")
        if len(f) == 4 and _has_q_root(f):
            raise ValueError("cubic modulus has a root in Q(i)")
        if not 0 <= index < len(f) - 1:
            raise ValueError("root index out of range")
        object.__setattr__(self, "modulus", f)
        object.__setattr__(self, "index", index)

    def __setattr__(self, name, value):
        raise AttributeError("NumberField is immutable")

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def __eq__(self, other):
        return isinstance(other, NumberField) and (self.modulus, self.index) == (other.modulus, other.index)

    def __hash__(self):
        return hash((self.modulus, self.index))

    def __repr__(self):
        return f"NumberField({format_poly(self.modulus)}, root #{self.index})"

    def __call__(self, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.field != self:
                raise BackendMismatchError("element of another field")
            return x
        return FieldElement(self, (_Q.coerce(x),))

    def element(self, coeffs) -> "FieldElement":
        return FieldElement(self, tuple(_Q.coerce(c) for c in coeffs))

    @property
    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return FieldElement(self, (-self.modulus[0],))
        return FieldElement(self, (_Q(0), _Q(1)))

    @property
    def one(self) -> "FieldElement":
        return self(1)

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    def root_disc(self):
        return isolate_roots(self.modulus)[self.index]

    def root_ball(self, prec: int = DEFAULT_PRECISION) -> ComplexBall:
        return _root_ball(self.modulus, self.index, prec)

    @classmethod
    def from_root_ball(cls, modulus, ball: ComplexBall) -> "NumberField":
        """The field whose selected root is the one enclosed by ``ball``."""
        f = _monic(_poly(modulus))
        hits = [
            k for k, (c, r) in enumerate(isolate_roots(f))
            if (ball - c).abs_lower() <= r
        ]
        if len(hits) != 1:
            raise SelectionError(f"root ball matches {len(hits)} roots of the modulus")
        return cls(f, hits[0])

    def to_json(self) -> dict:
        b = self.root_ball(128)
        return {
            "modulus": format_poly(self.modulus),
            "root": {
                "re": _decimal(b.mid_re),
                "im": _decimal(b.mid_im),
                "rad": "1e-25",
                "precision": 128,
            },
        }

    @classmethod
    def from_json(cls, obj) -> "NumberField":
        root = obj["root"]
        mid = _Q.from_parts(Fraction(root["re"]), Fraction(root["im"]))
        ball = ComplexBall.exact(mid, 128) + ComplexBall(0, 0, 0, Fraction(root["rad"]), 128)
        return cls.from_root_ball(obj["modulus"], ball)


def _decimal(x: Fraction, digits: int = 32) -> str:
    ctx = Context(prec=digits)
    return str(ctx.divide(x.numerator, x.denominator))


def _q_is_square(x: GaussianRational) -> bool:
    if x.is_zero():
        return True
    # x = num/den is a square iff num*den is a square in Z[i]
    return gaussian_sqrt(x.num * x.den) is not None


def _has_q_root(f) -> bool:
    # with D the common denominator, D * root is a root of a monic Z[i]
    # polynomial, hence a Gaussian integer: round and test exactly
    D = lcm(*(x.den for x in f))
    for c, _ in isolate_roots(f):
        z = c * D
        s = GaussianInteger(round(z.real), round(z.imag))
        if poly_eval(f, _Q(s) / D).is_zero():
            return True
    return False


def poly_gcd(p, q):
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return _monic(p) if p else p


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs):
        coeffs = _trim(coeffs)
        if len(coeffs) > field.degree:
            coeffs = poly_divmod(coeffs, field.modulus)[1]
        coeffs = tuple(coeffs) + (_Q(0),) * (field.degree - len(coeffs))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, o):
        if isinstance(o, FieldElement):
            if o.field != self.field:
                raise BackendMismatchError("elements of different number fields")
            return o
        if isinstance(o, (GaussianRational, GaussianInteger, int, Fraction)):
            return self.field(o)
        return None

    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, poly_mul(_trim(self.coeffs), _trim(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        # extended Euclid: s*a + t*f = g with g a nonzero constant
        r0, r1 = self.field.modulus, _trim(self.coeffs)
        s0, s1 = (), (_Q(1),)
        while len(r1) > 1:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        g = r1[0]
        return FieldElement(self.field, tuple(c / g for c in s1))

    def __truediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_rational(self) -> bool:
        return self.field.degree == 1 or all(c.is_zero() for c in self.coeffs[1:])

    def to_rational(self) -> GaussianRational:
        if not self.is_rational():
            raise TypeError("element is not in Q(i)")
        if self.field.degree == 1:
            return self.coeffs[0]
        return self.coeffs[0]

    def conjugate(self) -> "FieldElement":
        if self.is_rational():
            return self.field(self.to_rational().conjugate())
        raise ConjugationError("complex conjugation of a number-field element")

    def unit_circle_conjugate(self) -> "FieldElement":
        """conj(x), valid when the generator has modulus 1 (conj(t) = 1/t)."""
        tinv = self.field.gen.inverse()
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * tinv + c.conjugate()
        return acc

    def ball(self, prec: int = DEFAULT_PRECISION) -> ComplexBall:
        if self.is_rational():
            return ComplexBall.exact(self.to_rational(), prec)
        t = self.field.root_ball(prec + 32)
        acc = ComplexBall.exact(0, t.prec)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (GaussianRational, GaussianInteger, int, Fraction)):
            return self.is_rational() and self.to_rational() == _Q.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.to_rational())
        return hash((self.field, self.coeffs))

    def __repr__(self):
        terms = [format_scalar(c) for c in self.coeffs]
        return f"FieldElement([{', '.join(terms)}])"

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coeffs]


def is_root_of_unity_element(x) -> bool:
    from .unitary import TORSION_EXPONENT

    if isinstance(x, FieldElement):
        return (x ** TORSION_EXPONENT) == x.field.one
    x = _Q.coerce(x)
    return x ** 4 == 1  # the roots of unity in Q(i) are the four units


# --------------------------------------------------------------------------
# spectra


def char_poly(M) -> tuple:
    """det(tI - M) as coefficients, constant term first."""
    a = M.entries
    tr = a[0] + a[4] + a[8]
    c2 = (a[0] * a[4] - a[1] * a[3]) + (a[0] * a[8] - a[2] * a[6]) + (a[4] * a[8] - a[5] * a[7])
    return tuple(_Q(x) for x in (-M.det(), c2, -tr, 1))


def factor_spectrum(p) -> list[tuple[tuple, int]]:
    """Irreducible factors over Q(i) with multiplicities.

    p must be monic with Gaussian-integer coefficients and unit constant term;
    its Q(i)-roots are then units, so four exact tests find every linear factor.
    """
    p = _poly(p)
    if not p or p[-1] != 1:
        raise ValueError("polynomial must be monic")
    if not all(c.is_integral() for c in p) or p[0].norm() != 1:
        raise ValueError("coefficients must be Gaussian integers with unit constant term")
    factors: dict = {}
    for u in UNITS:
        lin = (_Q(-u), _Q(1))
        while len(p) > 1:
            q, r = poly_divmod(p, lin)
            if r:
                break
            factors[lin] = factors.get(lin, 0) + 1
            p = q
    if len(p) == 3:
        disc = p[1] * p[1] - 4 * p[0]
        assert not _q_is_square(disc), "a quadratic factor with Q(i) roots was missed"
    if len(p) > 1:
        factors[p] = factors.get(p, 0) + 1
    return sorted(factors.items(), key=lambda kv: (len(kv[0]), [(c.real, c.imag) for c in kv[0]]))


def _squarefree_part(spectrum):
    out = (_Q(1),)
    for f, _ in spectrum:
        out = poly_mul(out, f)
    return out


# --------------------------------------------------------------------------
# exact linear algebra over K


def _nullspace(rows):
    """Basis of {x : A x = 0} by Gauss-Jordan elimination (entries in a field)."""
    A = [list(r) for r in rows]
    n = len(A[0])
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, len(A)) if not A[i][col].is_zero()), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        inv = A[row][col].inverse() if hasattr(A[row][col], "inverse") else 1 / A[row][col]
        A[row] = [x * inv for x in A[row]]
        for i in range(len(A)):
            if i != row and not A[i][col].is_zero():
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    one = A[0][0] * 0 + 1
    basis = []
    for fc in free:
        v = [one * 0] * n
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -A[r][fc]
        basis.append(tuple(v))
    return basis


def _hermitian(x, y, conj):
    """x^dagger J y = -conj(x0) y2 + conj(x1) y1 - conj(x2) y0."""
    return -conj(x[0]) * y[2] + conj(x[1]) * y[1] - conj(x[2]) * y[0]


@dataclass(frozen=True)
class FixedPoint:
    """A null eigen-direction of M."""

    eigenvalue: object
    vector: tuple
    modulus_class: str  # "contracting" (|l| < 1), "expanding" (|l| > 1) or "unit"

    @property
    def at_infinity(self) -> bool:
        return self.vector[0].is_zero()

    @property
    def point(self) -> HeisenbergPoint:
        z = self.vector
        if z[0].is_zero():
            raise PointAtInfinityError("the fixed point is (0:0:1)")
        u, v = z[1] / z[0], z[2] / z[0]
        if isinstance(u, FieldElement) and u.is_rational() and v.is_rational():
            u, v = u.to_rational(), v.to_rational()
        if isinstance(u, GaussianRational):
            return HeisenbergPoint(u, v)
        return HeisenbergPoint._raw(u, v)


def _modulus_class(lam, spectrum, cap: int) -> str:
    """Compare |lambda| with 1 exactly, using that 1/conj(lambda) is again a root."""
    if not isinstance(lam, FieldElement):
        n = _Q.coerce(lam).norm()
        return "unit" if n == 1 else ("contracting" if n < 1 else "expanding")
    sq = _squarefree_part(spectrum)
    discs = isolate_roots(sq)
    for prec in precision_schedule(DEFAULT_PRECISION, cap):
        b = lam.ball(prec)
        lo, hi = b.abs2_bounds()
        if hi < 1:
            return "contracting"
        if lo > 1:
            return "expanding"
        # 1/conj(lambda) is a root too; it is lambda itself iff both balls
        # meet the same single isolating disc
        hl, hr = _disc_hits(b, discs), _disc_hits(b.conjugate().inverse(), discs)
        if len(hl) == 1 and hl == hr:
            return "unit"
    raise PrecisionCapError("could not compare |lambda| with 1")


def _disc_hits(b: ComplexBall, discs) -> list[int]:
    return [k for k, (c, r) in enumerate(discs) if (b - c).abs_lower() <= r]


def fixed_points(M, *, precision_cap: int = PRECISION_CAP) -> list[FixedPoint]:
    """Every null eigen-direction of M, in a deterministic order."""
    spectrum = factor_spectrum(char_poly(M))
    out = []
    for f, _mult in spectrum:
        for idx in range(len(f) - 1):
            if len(f) == 2:
                lam = -f[0]
                K = None
                entries = [_Q(x) for x in M.entries]
            else:
                K = NumberField(f, idx)
                lam = K.gen
                entries = [K(x) for x in M.entries]
            A = [[entries[3 * i + j] - (lam if i == j else 0) for j in range(3)] for i in range(3)]
            basis = _nullspace(A)
            cls = _modulus_class(lam, spectrum, precision_cap)
            for z in _null_directions(basis, lam, cls):
                out.append(FixedPoint(lam, z, cls))
    return out


def _null_directions(basis, lam, cls):
    if cls == "unit" and isinstance(lam, FieldElement):
        conj = FieldElement.unit_circle_conjugate
    else:
        conj = lambda x: x.conjugate()  # noqa: E731  (Q(i) values)
    if len(basis) == 1:
        z = basis[0]
        if cls != "unit" or _hermitian(z, z, conj).is_zero():
            yield z
        return
    if len(basis) == 2:
        # only possible for lambda in Q(i); restrict the form to the plane
        b1, b2 = basis
        g11 = _hermitian(b1, b1, conj)
        g12 = _hermitian(b1, b2, conj)
        g22 = _hermitian(b2, b2, conj)
        det = g11 * g22 - g12 * g12.conjugate()
        if not det.is_zero():
            return  # no null line (definite) or a whole circle of them (indefinite)
        # kernel of the rank-one Gram matrix [[g11, g12], [conj g12, g22]]
        if g11.is_zero() and g12.is_zero():
            yield b1
        else:
            yield tuple(-g12 * p + g11 * q for p, q in zip(b1, b2))
        return
    # nullity 3 means M is scalar, hence torsion; nothing to select


def fixed_point_of(M, which: int = 0, *, precision_cap: int = PRECISION_CAP) -> HeisenbergPoint:
    """The which-th finite fixed point of M on the quadric.

    Finite fixed points are ordered contracting, expanding, unit eigenvalue,
    then by field and root order.
    """
    pts = fixed_points(M, precision_cap=precision_cap)
    finite = [p for p in pts if not p.at_infinity]
    order = {"contracting": 0, "expanding": 1, "unit": 2}
    finite.sort(key=lambda p: order[p.modulus_class])
    if not finite:
        if pts:
            raise PointAtInfinityError("the only fixed point on the quadric is (0:0:1)")
        raise SelectionError("no eigenvector lies on the quadric")
    if not 0 <= which < len(finite):
        raise SelectionError(f"only {len(finite)} finite fixed points")
    return finite[which].point


# --------------------------------------------------------------------------
# certificates


def _image(M, h):
    one, u, v = h.vector()
    x = (one, u, v)
    y = tuple(x[0] * M[i, 0] + x[1] * M[i, 1] + x[2] * M[i, 2] for i in range(3))
    return x, y


def colinearity_certificate(M, h) -> bool:
    """M (1, u, v)^T is a multiple of (1, u, v)^T, checked by exact 2x2 minors."""
    if h.backend == "ball":
        raise TypeError("the colinearity certificate needs exact coordinates")
    x, y = _image(M, h)
    return all((y[i] * x[j] - y[j] * x[i]).is_zero() for i in range(3) for j in range(i + 1, 3))


def eigenvalue_at(M, h):
    """Q' + QQ u - Q v, the eigenvalue of M at a fixed point h."""
    return _image(M, h)[1][0]
