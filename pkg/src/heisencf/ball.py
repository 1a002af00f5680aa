"""Certified complex ball arithmetic on dyadic midpoints.

A ball is ``(re + i*im) * 2**exp`` with radius ``rad``.  Midpoints are exact
integers scaled by a power of two; every operation computes the exact
midpoint result, rounds it to ``prec`` bits and adds the rounding error to
the radius, so each result encloses the exact value of any inputs drawn from
the operand balls.  Radii are dyadic fractions rounded upward.

Precision is carried per value; there is no global context.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .gaussian import GaussianInteger, GaussianRational

__all__ = [
    "ComplexBall",
    "ball_eval",
    "DEFAULT_PRECISION",
    "PRECISION_CAP",
    "precision_schedule",
]

DEFAULT_PRECISION = 128
PRECISION_CAP = 65536
_RAD_BITS = 32


def precision_schedule(start: int = DEFAULT_PRECISION, cap: int = PRECISION_CAP):
    """start, 2*start, ... up to and including cap."""
    if start < 2 or cap < start:
        raise ValueError("need 2 <= start <= cap")
    p = start
    while p < cap:
        yield p
        p *= 2
    yield cap


def _pow2(e: int) -> Fraction:
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)


def _rad_up(x: Fraction) -> Fraction:
    """Round a nonnegative fraction up to a dyadic with ~32 significant bits."""
    if x <= 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    shift = _RAD_BITS - (n.bit_length() - d.bit_length())
    if shift >= 0:
        m = -((-n << shift) // d)
    else:
        m = -(-n // (d << -shift))
    return Fraction(m) * _pow2(-shift)


def _sqrt_up(x: Fraction) -> Fraction:
    """Upper bound on sqrt(x) for x >= 0, with ~64 correct bits."""
    if x <= 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    k = max(0, 64 - (n.bit_length() - d.bit_length()) // 2)
    # sqrt(n/d) = sqrt(n*d)/d ; scale by 4**k for precision
    t = n * d << (2 * k)
    s = isqrt(t)
    if s * s < t:
        s += 1
    return Fraction(s, d) * _pow2(-k)


def _sqrt_down(x: Fraction) -> Fraction:
    if x <= 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    k = max(0, 64 - (n.bit_length() - d.bit_length()) // 2)
    t = n * d << (2 * k)
    return Fraction(isqrt(t), d) * _pow2(-k)


def _round_mid(re_: int, im: int, exp: int, prec: int):
    """Round an exact dyadic midpoint to prec bits; return (re, im, exp, err)."""
    bl = max(abs(re_).bit_length(), abs(im).bit_length())
    if bl <= prec:
        return re_, im, exp, Fraction(0)
    s = bl - prec
    half = 1 << (s - 1)
    r2 = (re_ + half) >> s
    i2 = (im + half) >> s
    dr, di = re_ - (r2 << s), im - (i2 << s)
    return r2, i2, exp + s, _sqrt_up(Fraction(dr * dr + di * di)) * _pow2(exp)


class ComplexBall:
    __slots__ = ("re", "im", "exp", "rad", "prec")

    def __init__(self, re_: int, im: int, exp: int, rad: Fraction, prec: int):
        self.re = re_
        self.im = im
        self.exp = exp
        self.rad = rad
        self.prec = prec

    @classmethod
    def _make(cls, re_, im, exp, rad, prec):
        re_, im, exp, err = _round_mid(re_, im, exp, prec)
        if re_ == 0 and im == 0:
            exp = 0
        return cls(re_, im, exp, _rad_up(rad + err), prec)

    # construction -------------------------------------------------------
    @classmethod
    def exact(cls, x, prec: int = DEFAULT_PRECISION) -> "ComplexBall":
        """Enclosure of an exact scalar; radius <= 2**(1-prec) * (1 + |x|)."""
        if prec < 2:
            raise ValueError("precision must be at least 2")
        if isinstance(x, ComplexBall):
            return x
        if isinstance(x, (int, GaussianInteger, Fraction)):
            x = GaussianRational(x)
        if not isinstance(x, GaussianRational):
            raise TypeError(f"cannot enclose {x!r}")
        a, b, d = x.a, x.b, x.den
        if a == 0 and b == 0:
            return cls(0, 0, 0, Fraction(0), prec)
        if d & (d - 1) == 0:  # dyadic input: exact unless it is too long
            e = -(d.bit_length() - 1)
            return cls._make(a, b, e, Fraction(0), prec)
        # scale so the larger component carries prec bits, round to nearest
        top = max(abs(a), abs(b)).bit_length()
        k = max(0, prec - top + d.bit_length())
        qa = (2 * (a << k) + d) // (2 * d)
        qb = (2 * (b << k) + d) // (2 * d)
        dr = Fraction(a << k, d) - qa
        di = Fraction(b << k, d) - qb
        err = _sqrt_up(dr * dr + di * di) * _pow2(-k)
        return cls(qa, qb, -k, _rad_up(err), prec)

    # accessors ----------------------------------------------------------
    @property
    def mid_re(self) -> Fraction:
        return self.re * _pow2(self.exp)

    @property
    def mid_im(self) -> Fraction:
        return self.im * _pow2(self.exp)

    def mid(self) -> GaussianRational:
        return GaussianRational.from_parts(self.mid_re, self.mid_im)

    def _mid_abs_up(self) -> Fraction:
        n = self.re * self.re + self.im * self.im
        s = isqrt(n)
        if s * s < n:
            s += 1
        return s * _pow2(self.exp)

    def _mid_abs_down(self) -> Fraction:
        return isqrt(self.re * self.re + self.im * self.im) * _pow2(self.exp)

    def abs_upper(self) -> Fraction:
        return self._mid_abs_up() + self.rad

    def abs_lower(self) -> Fraction:
        return max(Fraction(0), self._mid_abs_down() - self.rad)

    def real_bounds(self) -> tuple[Fraction, Fraction]:
        m = self.mid_re
        return m - self.rad, m + self.rad

    def imag_bounds(self) -> tuple[Fraction, Fraction]:
        m = self.mid_im
        return m - self.rad, m + self.rad

    def abs2_bounds(self) -> tuple[Fraction, Fraction]:
        """Enclosure of |z|^2 as (lower, upper)."""
        lo, hi = self.abs_lower(), self.abs_upper()
        return lo * lo, hi * hi

    def contains_zero(self) -> bool:
        return (self.re * self.re + self.im * self.im) * _pow2(2 * self.exp) <= self.rad * self.rad

    def contains(self, x) -> bool:
        x = GaussianRational.coerce(x)
        dr = x.real - self.mid_re
        di = x.imag - self.mid_im
        return dr * dr + di * di <= self.rad * self.rad

    def overlaps(self, other: "ComplexBall") -> bool:
        return (self - other).contains_zero()

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, ComplexBall):
            return other
        if isinstance(other, (int, Fraction, GaussianInteger, GaussianRational)):
            return ComplexBall.exact(other, self.prec)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        e = min(self.exp, o.exp)
        s1, s2 = self.exp - e, o.exp - e
        return ComplexBall._make(
            (self.re << s1) + (o.re << s2),
            (self.im << s1) + (o.im << s2),
            e,
            self.rad + o.rad,
            min(self.prec, o.prec),
        )

    __radd__ = __add__

    def __neg__(self):
        return ComplexBall(-self.re, -self.im, self.exp, self.rad, self.prec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        rad = Fraction(0)
        if self.rad or o.rad:
            rad = self._mid_abs_up() * o.rad + o._mid_abs_up() * self.rad + self.rad * o.rad
        return ComplexBall._make(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
            self.exp + o.exp,
            rad,
            min(self.prec, o.prec),
        )

    __rmul__ = __mul__

    def inverse(self) -> "ComplexBall":
        n = self.re * self.re + self.im * self.im
        m_lo = self._mid_abs_down()
        if n == 0 or m_lo <= self.rad:
            raise ZeroDivisionError("ball contains zero")
        prec = self.prec
        top = max(abs(self.re), abs(self.im)).bit_length()
        k = prec + 2 + n.bit_length() - top
        qr = ((self.re << (k + 1)) // n + 1) >> 1
        qi = ((-self.im << (k + 1)) // n + 1) >> 1
        # center of 1/m is (re - i im) / (n 2^exp); we used scale 2^(k) so
        # the approximation is (qr + i qi) * 2^(-k-exp) with error <= 2^(-k-exp)
        err = _pow2(-k - self.exp)
        prop = Fraction(0)
        if self.rad:
            prop = self.rad / (m_lo * (m_lo - self.rad))
        return ComplexBall._make(qr, qi, -k - self.exp, err + prop, prec)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ComplexBall.exact(1, self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "ComplexBall":
        return ComplexBall(self.re, -self.im, self.exp, self.rad, self.prec)

    def abs2(self) -> "ComplexBall":
        """|z|^2 as a real ball."""
        lo, hi = self.abs2_bounds()
        c = (lo + hi) / 2
        return ComplexBall.exact(GaussianRational.from_parts(c), self.prec) + ComplexBall(
            0, 0, 0, _rad_up((hi - lo) / 2), self.prec
        )

    def real_part(self) -> "ComplexBall":
        return ComplexBall(self.re, 0, self.exp, self.rad, self.prec)

    def is_exact(self) -> bool:
        return self.rad == 0

    def to_complex(self) -> complex:
        return complex(float(self.mid_re), float(self.mid_im))

    def __repr__(self):
        return f"ComplexBall({self.to_complex()!r} +/- {float(self.rad):.3g}, prec={self.prec})"

    # exact identity of the representation (not of the enclosed sets)
    def __eq__(self, other):
        if not isinstance(other, ComplexBall):
            return NotImplemented
        return (self.mid_re, self.mid_im, self.rad) == (other.mid_re, other.mid_im, other.rad)

    def __hash__(self):
        return hash((self.mid_re, self.mid_im, self.rad))


def ball_eval(x, prec: int = DEFAULT_PRECISION) -> ComplexBall:
    """Certified enclosure of an exact scalar (or number-field element)."""
    if hasattr(x, "ball"):
        return x.ball(prec)
    return ComplexBall.exact(x, prec)
