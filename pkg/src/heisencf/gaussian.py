"""Exact scalars: the Gaussian integers Z[i] and the Gaussian rationals Q(i).

Text form used in every JSON payload: ``a+bi`` with optional sign, e.g.
``-2+3i``, ``5i``, ``(1-1i)/2``, ``1/3``.  The parser additionally accepts
``i``/``-i`` and terminating decimals (``0.6+0.2i``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt

__all__ = [
    "GaussianInteger",
    "GaussianRational",
    "UNITS",
    "ggcd",
    "gaussian_sqrt",
    "unit_normalizer",
    "parse_scalar",
    "format_scalar",
    "as_rational",
]


def _round_div(n: int, d: int) -> int:
    """Nearest integer to n/d for d > 0 (halves rounded up)."""
    return (2 * n + d) // (2 * d)


class GaussianInteger:
    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = int(re)
        self.im = int(im)

    @staticmethod
    def coerce(x) -> "GaussianInteger":
        if isinstance(x, GaussianInteger):
            return x
        if isinstance(x, int):
            return GaussianInteger(x, 0)
        if isinstance(x, GaussianRational) and x.den == 1:
            return GaussianInteger(x.a, x.b)
        raise TypeError(f"cannot interpret {x!r} as a Gaussian integer")

    # ring operations
    def __add__(self, other):
        if isinstance(other, GaussianInteger):
            return GaussianInteger(self.re + other.re, self.im + other.im)
        if isinstance(other, int):
            return GaussianInteger(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianInteger):
            return GaussianInteger(self.re - other.re, self.im - other.im)
        if isinstance(other, int):
            return GaussianInteger(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GaussianInteger(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianInteger):
            return GaussianInteger(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, int):
            return GaussianInteger(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (GaussianInteger, int)):
            return GaussianRational(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return GaussianRational(other) / self
        return NotImplemented

    def __neg__(self):
        return GaussianInteger(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return GaussianRational(self) ** n
        result = GaussianInteger(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianInteger":
        return GaussianInteger(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def round_div(self, other: "GaussianInteger") -> "GaussianInteger":
        """Nearest Gaussian integer to self/other (the Euclidean quotient)."""
        other = GaussianInteger.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        p = self * other.conjugate()
        return GaussianInteger(_round_div(p.re, n), _round_div(p.im, n))

    def __eq__(self, other):
        if isinstance(other, GaussianInteger):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"GaussianInteger({self.re}, {self.im})"

    def __str__(self):
        return _format_parts(self.re, self.im)


def _format_parts(re_: int, im: int) -> str:
    if im == 0:
        return str(re_)
    if re_ == 0:
        return f"{im}i"
    return f"{re_}{im:+d}i"


class GaussianRational:
    """(a + b i) / d with d > 0 and gcd(a, b, d) = 1."""

    __slots__ = ("a", "b", "den")

    def __init__(self, num=0, den: int = 1):
        if isinstance(num, GaussianRational):
            a, b, d = num.a, num.b, num.den * den
        elif isinstance(num, GaussianInteger):
            a, b, d = num.re, num.im, den
        elif isinstance(num, int):
            a, b, d = num, 0, den
        elif isinstance(num, Fraction):
            a, b, d = num.numerator, 0, num.denominator * den
        else:
            raise TypeError(f"cannot build a Gaussian rational from {num!r}")
        d = int(d)
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        self.a = a
        self.b = b
        self.den = d

    @classmethod
    def from_parts(cls, re_: Fraction | int, im: Fraction | int = 0) -> "GaussianRational":
        re_, im = Fraction(re_), Fraction(im)
        d = re_.denominator * im.denominator // gcd(re_.denominator, im.denominator)
        return cls(
            GaussianInteger(re_.numerator * (d // re_.denominator),
                            im.numerator * (d // im.denominator)),
            d,
        )

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (GaussianInteger, int, Fraction)):
            return GaussianRational(x)
        raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")

    @property
    def num(self) -> GaussianInteger:
        return GaussianInteger(self.a, self.b)

    @property
    def real(self) -> Fraction:
        return Fraction(self.a, self.den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.b, self.den)

    def _parts(self, other):
        if isinstance(other, GaussianRational):
            return other.a, other.b, other.den
        if isinstance(other, GaussianInteger):
            return other.re, other.im, 1
        if isinstance(other, int):
            return other, 0, 1
        if isinstance(other, Fraction):
            return other.numerator, 0, other.denominator
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b, d = p
        return GaussianRational(
            GaussianInteger(self.a * d + a * self.den, self.b * d + b * self.den),
            self.den * d,
        )

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b, d = p
        return GaussianRational(
            GaussianInteger(self.a * d - a * self.den, self.b * d - b * self.den),
            self.den * d,
        )

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return (-self).__add__(other)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b, d = p
        return GaussianRational(
            GaussianInteger(self.a * a - self.b * b, self.a * b + self.b * a),
            self.den * d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b, d = p
        n = a * a + b * b
        if n == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        # (x/e) / ((a+bi)/d) = x * (a-bi) * d / (e * n)
        x = GaussianInteger(self.a, self.b) * GaussianInteger(a, -b)
        return GaussianRational(x * d, self.den * n)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational.coerce(other) / self

    def __neg__(self):
        r = GaussianRational.__new__(GaussianRational)
        r.a, r.b, r.den = -self.a, -self.b, self.den
        return r

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return (1 / self) ** (-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        r = GaussianRational.__new__(GaussianRational)
        r.a, r.b, r.den = self.a, -self.b, self.den
        return r

    def norm(self) -> Fraction:
        return Fraction(self.a * self.a + self.b * self.b, self.den * self.den)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_integral(self) -> bool:
        return self.den == 1

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b, d = p
        return self.a * d == a * self.den and self.b * d == b * self.den

    def __hash__(self):
        if self.den == 1:
            return hash(GaussianInteger(self.a, self.b))
        return hash((self.a, self.b, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


UNITS = (GaussianInteger(1, 0), GaussianInteger(0, 1), GaussianInteger(-1, 0), GaussianInteger(0, -1))


def as_rational(x) -> GaussianRational:
    return GaussianRational.coerce(x)


def ggcd(x: GaussianInteger, y: GaussianInteger) -> GaussianInteger:
    """A greatest common divisor in Z[i] (defined up to a unit)."""
    x, y = GaussianInteger.coerce(x), GaussianInteger.coerce(y)
    while not y.is_zero():
        x, y = y, x - y * x.round_div(y)
    return x


def unit_normalizer(z: GaussianInteger) -> GaussianInteger:
    """The unit w with w*z having argument in [0, pi/2), i.e. re > 0, im >= 0."""
    z = GaussianInteger.coerce(z)
    if z.is_zero():
        return UNITS[0]
    for w in UNITS:
        t = w * z
        if t.re > 0 and t.im >= 0:
            return w
    raise AssertionError("unreachable")


def gaussian_sqrt(z: GaussianInteger) -> GaussianInteger | None:
    """Exact square root in Z[i], or None when z is not a square.

    Solves s^2 = z through |s|^2 = |z| and re(s)^2 - im(s)^2 = re(z).
    """
    z = GaussianInteger.coerce(z)
    n = z.norm()
    m = isqrt(n)
    if m * m != n:
        return None
    if (m + z.re) % 2:
        return None
    x2, y2 = (m + z.re) // 2, (m - z.re) // 2
    x, y = isqrt(x2), isqrt(y2)
    if x * x != x2 or y * y != y2:
        return None
    for s in (GaussianInteger(x, y), GaussianInteger(x, -y)):
        if s * s == z:
            return s
    return None


def format_scalar(x) -> str:
    if isinstance(x, (int, GaussianInteger)):
        x = GaussianRational(x)
    if not isinstance(x, GaussianRational):
        raise TypeError(f"not an exact Gaussian scalar: {x!r}")
    body = _format_parts(x.a, x.b)
    if x.den == 1:
        return body
    if x.b == 0:
        return f"{body}/{x.den}"
    return f"({body})/{x.den}"


_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:/\d+)?"
_TERM = re.compile(rf"([+-]?)({_NUM})?(i?)")
_QUOT = re.compile(r"^\((.*)\)/(\d+)$")


def _parse_real(tok: str) -> Fraction:
    if "/" in tok:
        n, d = tok.split("/")
        return Fraction(n) / Fraction(d)
    return Fraction(tok)


def parse_scalar(text) -> GaussianRational:
    """Parse the text form of a Gaussian rational (ints pass through)."""
    if isinstance(text, (int, GaussianInteger, GaussianRational)):
        return GaussianRational(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a scalar string, got {text!r}")
    s = text.replace(" ", "")
    m = _QUOT.match(s)
    if m:
        return parse_scalar(m.group(1)) / int(m.group(2))
    if not s:
        raise ValueError("empty scalar")
    re_part, im_part = Fraction(0), Fraction(0)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group(2) is None and not m.group(3)):
            raise ValueError(f"cannot parse scalar {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if pos > 0 and not m.group(1):
            raise ValueError(f"cannot parse scalar {text!r}")
        mag = _parse_real(m.group(2)) if m.group(2) is not None else Fraction(1)
        if m.group(3):
            im_part += sign * mag
        else:
            re_part += sign * mag
        pos = m.end()
    return GaussianRational.from_parts(re_part, im_part)
