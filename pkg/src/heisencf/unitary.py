"""U(2,1; Z[i]): Gaussian-integer 3x3 matrices with M^dagger J M = J.

Entries are labeled as

    ( Q'  QQ  -Q )
    ( R'  RR  -R )
    ( P'  PP  -P )

(``QQ``, ``RR``, ``PP`` being the middle column).  The three generator
families are the inversion J, translations T_gamma and diagonals D.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .ball import ComplexBall
from .errors import NotLatticePointError, NotUnitaryError, PointAtInfinityError
from .gaussian import GaussianInteger, GaussianRational, UNITS, parse_scalar
from .siegel import HeisenbergPoint, IntegerPoint, ProjectivePoint

__all__ = [
    "UnitaryMatrix",
    "GeneratorWord",
    "CornerStructure",
    "j_matrix",
    "identity",
    "translation",
    "diagonal",
    "diagonals",
    "verify_unitary",
    "act",
    "inverse",
    "corner_zero_structure",
    "word_to_matrix",
    "decompose_power4",
    "is_root_of_unity",
    "dagger_word_identity_check",
    "TORSION_EXPONENT",
    "tokens_to_matrix",
    "dagger_bar_form_holds",
]

# every finite order of an element of U(2,1; Z[i]) divides this
TORSION_EXPONENT = 2520

_ZERO = GaussianInteger(0, 0)
_ONE = GaussianInteger(1, 0)


def _mm(a, b):
    return tuple(
        a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j]
        for i in range(3)
        for j in range(3)
    )


def _dagger(a):
    return tuple(a[3 * j + i].conjugate() for i in range(3) for j in range(3))


_J = tuple(GaussianInteger(x) for x in (0, 0, -1, 0, 1, 0, -1, 0, 0))
_I = tuple(GaussianInteger(x) for x in (1, 0, 0, 0, 1, 0, 0, 0, 1))


def _as_entries(rows):
    if isinstance(rows, UnitaryMatrix):
        return rows.entries
    flat = [x for row in rows for x in row] if len(rows) == 3 else list(rows)
    if len(flat) != 9:
        raise ValueError("expected a 3x3 matrix")
    out = []
    for x in flat:
        if isinstance(x, str):
            x = parse_scalar(x)
        if isinstance(x, GaussianRational):
            if not x.is_integral():
                raise NotUnitaryError(f"entry {x} is not a Gaussian integer")
            x = x.num
        out.append(GaussianInteger.coerce(x))
    return tuple(out)


def verify_unitary(rows) -> bool:
    """True iff M^dagger J M = J holds exactly."""
    try:
        a = _as_entries(rows)
    except NotUnitaryError:
        return False
    return _mm(_mm(_dagger(a), _J), a) == _J


class UnitaryMatrix:
    __slots__ = ("entries",)

    def __init__(self, rows, *, check: bool = True):
        a = _as_entries(rows)
        object.__setattr__(self, "entries", a)
        if check:
            if _mm(_mm(_dagger(a), _J), a) != _J:
                raise NotUnitaryError("M^dagger J M != J")
            self._check_identities()

    @classmethod
    def _raw(cls, entries) -> "UnitaryMatrix":
        m = object.__new__(cls)
        object.__setattr__(m, "entries", entries)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("UnitaryMatrix is immutable")

    # labeled entries
    Qp = property(lambda s: s.entries[0])
    QQ = property(lambda s: s.entries[1])
    Q = property(lambda s: -s.entries[2])
    Rp = property(lambda s: s.entries[3])
    RR = property(lambda s: s.entries[4])
    R = property(lambda s: -s.entries[5])
    Pp = property(lambda s: s.entries[6])
    PP = property(lambda s: s.entries[7])
    P = property(lambda s: -s.entries[8])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[3 * i + j]

    def rows(self):
        a = self.entries
        return [list(a[0:3]), list(a[3:6]), list(a[6:9])]

    def column(self, j: int):
        return tuple(self.entries[3 * i + j] for i in range(3))

    def mtransform_identities(self) -> tuple:
        """The five quantities that unitarity forces to (0, 0, 0, 1, 0)."""
        Qp, QQ, Q, Rp, RR, R, Pp, PP, P = (
            self.Qp, self.QQ, self.Q, self.Rp, self.RR, self.R, self.Pp, self.PP, self.P,
        )
        c = GaussianInteger.conjugate
        return (
            Rp.norm() - 2 * (c(Pp) * Qp).re,
            R.norm() - 2 * (c(P) * Q).re,
            -c(Qp) * PP + c(Rp) * RR - c(Pp) * QQ,
            -c(Qp) * P + c(Rp) * R - c(Pp) * Q,
            QQ.norm() + 2 * (c(Qp) * Q).re,
        )

    def _check_identities(self):
        got = self.mtransform_identities()
        assert got == (0, 0, _ZERO, _ONE, 0), f"labeled-entry identities fail: {got}"

    def det(self) -> GaussianInteger:
        a = self.entries
        return (
            a[0] * (a[4] * a[8] - a[5] * a[7])
            - a[1] * (a[3] * a[8] - a[5] * a[6])
            + a[2] * (a[3] * a[7] - a[4] * a[6])
        )

    def trace(self) -> GaussianInteger:
        a = self.entries
        return a[0] + a[4] + a[8]

    def dagger(self) -> "UnitaryMatrix":
        return UnitaryMatrix._raw(_dagger(self.entries))

    def inverse(self) -> "UnitaryMatrix":
        return UnitaryMatrix._raw(_mm(_mm(_J, _dagger(self.entries)), _J))

    def __matmul__(self, other):
        if not isinstance(other, UnitaryMatrix):
            return NotImplemented
        return UnitaryMatrix._raw(_mm(self.entries, other.entries))

    __mul__ = __matmul__

    def __pow__(self, n: int) -> "UnitaryMatrix":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = _I
        b = base.entries
        while n:
            if n & 1:
                result = _mm(result, b)
            b = _mm(b, b)
            n >>= 1
        return UnitaryMatrix._raw(result)

    def is_identity(self) -> bool:
        return self.entries == _I

    def __eq__(self, other):
        if not isinstance(other, UnitaryMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        rows = "; ".join(", ".join(str(x) for x in r) for r in self.rows())
        return f"UnitaryMatrix([{rows}])"

    def to_json(self) -> list:
        return [str(x) for x in self.entries]

    @classmethod
    def from_json(cls, obj) -> "UnitaryMatrix":
        return cls(obj)


def identity() -> UnitaryMatrix:
    return UnitaryMatrix._raw(_I)


def j_matrix() -> UnitaryMatrix:
    return UnitaryMatrix._raw(_J)


def _lattice(g) -> IntegerPoint:
    if isinstance(g, IntegerPoint):
        return g
    if isinstance(g, HeisenbergPoint):
        return IntegerPoint.from_point(g)
    if isinstance(g, (tuple, list)) and len(g) == 2:
        return IntegerPoint(*g)
    raise NotLatticePointError(f"{g!r} is not an integer point")


def translation(g) -> UnitaryMatrix:
    g = _lattice(g)
    a, v = g.a, g.v
    return UnitaryMatrix._raw((_ONE, _ZERO, _ZERO, a, _ONE, _ZERO, v, a.conjugate(), _ONE))


def diagonal(alpha, beta) -> UnitaryMatrix:
    alpha, beta = GaussianInteger.coerce(alpha), GaussianInteger.coerce(beta)
    if not (alpha.is_unit() and beta.is_unit()):
        raise NotUnitaryError("diagonal entries must be units")
    return UnitaryMatrix._raw((alpha, _ZERO, _ZERO, _ZERO, beta, _ZERO, _ZERO, _ZERO, alpha))


def diagonals() -> list[UnitaryMatrix]:
    """diag(alpha, +-1, alpha) for the four units alpha.

    diag(alpha, +-i, alpha) is unitary as well; the decomposition code accepts
    any unit middle entry, but this enumeration keeps the familiar eight.
    """
    return [diagonal(a, b) for a in UNITS for b in (1, -1)]


def inverse(M: UnitaryMatrix) -> UnitaryMatrix:
    """J M^dagger J."""
    return M.inverse()


# --------------------------------------------------------------------------
# action on points


def act(M: UnitaryMatrix, h):
    """Linear fractional action; planar output needs Q' + QQ u - Q v != 0."""
    if isinstance(h, IntegerPoint):
        h = h.point
    if isinstance(h, ProjectivePoint):
        x = h.coords()
        y = [sum((x[j] * M[i, j] for j in range(1, 3)), x[0] * M[i, 0]) for i in range(3)]
        return ProjectivePoint(*y, check=False)
    one, u, v = h.vector()
    q = one * M[0, 0] + u * M[0, 1] + v * M[0, 2]
    r = one * M[1, 0] + u * M[1, 1] + v * M[1, 2]
    p = one * M[2, 0] + u * M[2, 1] + v * M[2, 2]
    if isinstance(q, ComplexBall):
        if q.contains_zero():
            raise PointAtInfinityError("image denominator encloses 0")
    elif q.is_zero():
        raise PointAtInfinityError("the image is the point at infinity")
    w = 1 / q
    return HeisenbergPoint._raw(r * w, p * w)


# --------------------------------------------------------------------------
# zero corners


@dataclass(frozen=True)
class CornerStructure:
    """How a matrix with a zero corner factors.

    kind is one of ``"DT"`` (M = D T_g), ``"DTJ"`` (M = D T_g J),
    ``"JTJD"`` (M = J T_g J D), ``"DJT"`` (M = D J T_g) or ``"none"``.
    """

    kind: str
    corner: str | None = None
    alpha: GaussianInteger | None = None
    beta: GaussianInteger | None = None
    gamma: IntegerPoint | None = None

    @property
    def D(self) -> UnitaryMatrix:
        return diagonal(self.alpha, self.beta)

    def factors(self) -> list[UnitaryMatrix]:
        D, T, J = self.D, translation(self.gamma), j_matrix()
        return {
            "DT": [D, T],
            "DTJ": [D, T, J],
            "JTJD": [J, T, J, D],
            "DJT": [D, J, T],
        }[self.kind]

    def product(self) -> UnitaryMatrix:
        return reduce(lambda x, y: x @ y, self.factors())


def _udiv(x: GaussianInteger, unit: GaussianInteger) -> GaussianInteger:
    return x * unit.conjugate()


def _point(u: GaussianInteger, v: GaussianInteger) -> IntegerPoint:
    return IntegerPoint.from_uv(u, v)


def corner_zero_structure(M: UnitaryMatrix) -> CornerStructure:
    """Classify M by its zero corners and recover the factorization."""
    a = M.entries
    corners = {"Q": a[2], "Q'": a[0], "P'": a[6], "P": a[8]}
    # adjacent entries and the three diagonal-adjacent entries that must be units
    pattern = {
        "Q": ((1, 5), (0, 4, 8)),
        "Q'": ((1, 3), (2, 4, 6)),
        "P'": ((3, 7), (0, 4, 8)),
        "P": ((5, 7), (2, 4, 6)),
    }
    for name in ("Q", "Q'", "P'", "P"):
        if not corners[name].is_zero():
            continue
        zeros, units = pattern[name]
        assert all(a[k].is_zero() for k in zeros), f"corner {name} is 0 but a neighbour is not"
        assert all(a[k].is_unit() for k in units), f"corner {name} is 0 but the anti-diagonal is not units"
        if name == "Q":
            al, be = a[0], a[4]
            g = _point(_udiv(a[3], be), _udiv(a[6], al))
            kind = "DT"
        elif name == "Q'":
            al, be = -a[2], a[4]
            g = _point(-_udiv(a[5], be), -_udiv(a[8], al))
            kind = "DTJ"
        elif name == "P'":
            al, be = a[0], a[4]
            g = _point(-_udiv(a[5], al), _udiv(a[2], al))
            kind = "JTJD"
        else:
            al, be = -a[6], a[4]
            g = _point(_udiv(a[3], be), -_udiv(a[0], al))
            kind = "DJT"
        cs = CornerStructure(kind, name, al, be, g)
        assert cs.product() == M, f"{kind} factorization does not reproduce M"
        return cs
    return CornerStructure("none")


# --------------------------------------------------------------------------
# generator words


@dataclass(frozen=True)
class GeneratorWord:
    """T_{leading} J T_{body[0]} J T_{body[1]} ... J T_{body[-1]} [J].

    ``leading=None`` drops the initial translation.
    """

    leading: IntegerPoint | None = None
    body: tuple = field(default_factory=tuple)
    trailing_j: bool = False

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(_lattice(g) for g in self.body))
        if self.leading is not None:
            object.__setattr__(self, "leading", _lattice(self.leading))

    def tokens(self) -> list:
        """Flat letter list: IntegerPoint for T_g, the string "J" for J."""
        out = [] if self.leading is None else [self.leading]
        for g in self.body:
            out += ["J", g]
        if self.trailing_j:
            out.append("J")
        return out

    @classmethod
    def from_tokens(cls, tokens) -> "GeneratorWord":
        toks = _reduce_tokens(tokens)
        leading = None
        if toks and toks[0] != "J":
            leading = toks.pop(0)
        body = []
        while len(toks) >= 2:
            assert toks[0] == "J" and toks[1] != "J"
            body.append(toks[1])
            del toks[:2]
        return cls(leading, tuple(body), bool(toks))

    def normalized(self) -> "GeneratorWord":
        """Drop T_(0,0) letters, cancel J J and merge adjacent translations."""
        return GeneratorWord.from_tokens(self.tokens())

    def __len__(self):
        return len(self.body)

    def to_json(self) -> dict:
        return {
            "leading": None if self.leading is None else self.leading.to_json(),
            "body": [g.to_json() for g in self.body],
            "trailing_j": self.trailing_j,
        }

    @classmethod
    def from_json(cls, obj) -> "GeneratorWord":
        lead = obj.get("leading")
        return cls(
            None if lead is None else IntegerPoint.from_json(lead),
            tuple(IntegerPoint.from_json(g) for g in obj.get("body", [])),
            bool(obj.get("trailing_j", False)),
        )


def _reduce_tokens(tokens) -> list:
    # the stack always alternates J / nonzero T, so one comparison per letter suffices
    out = []
    for t in tokens:
        if t != "J" and t.is_zero():
            continue
        if out and t == "J" and out[-1] == "J":
            out.pop()
        elif out and t != "J" and out[-1] != "J":
            m = out.pop() * t
            if not m.is_zero():
                out.append(m)
        else:
            out.append(t)
    return out


def tokens_to_matrix(tokens) -> UnitaryMatrix:
    acc = _I
    for t in tokens:
        acc = _mm(acc, _J if t == "J" else translation(t).entries)
    return UnitaryMatrix._raw(acc)


def word_to_matrix(w: GeneratorWord) -> UnitaryMatrix:
    M = tokens_to_matrix(w.tokens())
    assert verify_unitary(M)
    return M


def _rotate(g: IntegerPoint, alpha, beta) -> IntegerPoint:
    # D T_(u,v) D^-1 = T_(beta conj(alpha) u, v)
    return IntegerPoint(beta * alpha.conjugate() * g.a, g.c)


def decompose_power4(M: UnitaryMatrix) -> GeneratorWord:
    """A word in T and J equal to M^4.

    The first column of M is expanded as a rational point, giving a word M'
    with the same first column up to a unit; (M')^-1 M is then upper
    triangular, i.e. J T_g J D, and the diagonal D is pushed through the
    fourth power and cancelled since D^4 = I.
    """
    from .cf import expand_rational_digits

    q, r, p = M.column(0)
    if q.is_zero():
        prefix = ["J"]
    else:
        h = HeisenbergPoint(GaussianRational(r) / q, GaussianRational(p) / q)
        digits = expand_rational_digits(h)
        prefix = [digits[0]]
        for g in digits[1:]:
            prefix += ["J", g]
    Mp = tokens_to_matrix(prefix)
    U = Mp.inverse() @ M
    cs = corner_zero_structure(U)
    assert cs.kind in ("JTJD", "DT") and U.entries[6].is_zero(), "(M')^-1 M is not upper triangular"
    al, be = U.entries[0], U.entries[4]
    # U = J T_g J D  with  U = [[al, -conj(u) be, v al], [0, be, -u al], [0, 0, al]]
    g = IntegerPoint.from_uv(-_udiv(U.entries[5], al), _udiv(U.entries[2], al))
    base = prefix + ["J", g, "J"]
    assert tokens_to_matrix(base) @ diagonal(al, be) == M
    tokens = []
    for k in range(4):
        a_k, b_k = al**k, be**k
        tokens += [t if t == "J" else _rotate(t, a_k, b_k) for t in base]
    w = GeneratorWord.from_tokens(tokens)
    assert word_to_matrix(w) == M**4, "decomposition does not reproduce M^4"
    return w


# --------------------------------------------------------------------------
# torsion


def is_root_of_unity(M: UnitaryMatrix) -> tuple[bool, int | None]:
    """(True, order) if M^n = I for some n >= 1, else (False, None)."""
    t = M.trace()
    if t.norm() > 9:  # three unit-modulus eigenvalues
        return False, None
    if not (M**TORSION_EXPONENT).is_identity():
        return False, None
    n = TORSION_EXPONENT
    for p in (2, 3, 5, 7):
        while n % p == 0 and (M ** (n // p)).is_identity():
            n //= p
    return True, n


def dagger_word_identity_check(g) -> bool:
    """(J T_g)^dagger == J T_{g^-1}.

    The adjoint of J T_(u,v) is J T_(-u, conj(v)), the inverse letter.  The
    variant with (conj(u), v) in place of g^-1 holds only when u is purely
    imaginary and v is real; see :func:`dagger_bar_form_holds`.
    """
    g = _lattice(g)
    lhs = (j_matrix() @ translation(g)).dagger()
    return lhs == j_matrix() @ translation(g.inverse())


def dagger_bar_form_holds(g) -> bool:
    """Whether (J T_g)^dagger equals J T_(conj(u), v) for this g."""
    g = _lattice(g)
    return (j_matrix() @ translation(g)).dagger() == j_matrix() @ translation(g.bar())
