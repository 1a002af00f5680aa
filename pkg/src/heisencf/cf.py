"""Continued fractions on the Heisenberg group.

The expansion of h is gamma_0 = [h], h_0 = gamma_0^-1 * h and then
gamma_i = [iota h_{i-1}], h_i = gamma_i^-1 * iota h_{i-1}.  Unwinding the
recursion gives h = T_{g0} J T_{g1} J ... J T_{gn} h_n, so the n-th
convergent is the first column of that word matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .ball import ComplexBall, ball_eval
from .errors import (
    CertificationError,
    DegenerateOrbitError,
    HeisenbergError,
    PointAtInfinityError,
    TorsionMatrixError,
)
from .gaussian import GaussianInteger, GaussianRational
from .lattice import DEFAULT_CONFIG, FundamentalDomainConfig, dirichlet_reduce, nearest_integer
from .numfield import FieldElement, colinearity_certificate, eigenvalue_at
from .siegel import (
    HeisenbergPoint,
    IntegerPoint,
    ProjectivePoint,
    distance4,
    group_mul,
    koranyi_inv,
)
from .unitary import (
    GeneratorWord,
    UnitaryMatrix,
    act,
    decompose_power4,
    is_root_of_unity,
    j_matrix,
    tokens_to_matrix,
    translation,
)

__all__ = [
    "DigitSequence",
    "Convergent",
    "ExpansionTrace",
    "LagrangeReport",
    "gauss_map",
    "expand",
    "expand_rational_digits",
    "convergents",
    "detect_period",
    "euler_matrix",
    "lagrange_expansion",
    "lagrange_report",
    "qproduct_check",
    "vrelation_check",
    "distance_trace",
    "vrelation_lhs",
]

ZERO = IntegerPoint(GaussianInteger(0, 0), 0)


# --------------------------------------------------------------------------
# digit sequences


@dataclass(frozen=True)
class DigitSequence:
    """gamma_0, gamma_1, ...: a finite preperiod then an optional repeating period."""

    preperiod: tuple = ()
    period: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        if self.period is not None:
            per = tuple(self.period)
            if not per:
                raise ValueError("a period must be nonempty")
            object.__setattr__(self, "period", per)

    @property
    def is_terminating(self) -> bool:
        return self.period is None

    def digit(self, i: int) -> IntegerPoint:
        if i < len(self.preperiod):
            return self.preperiod[i]
        if self.period is None:
            raise IndexError("past the end of a terminating expansion")
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def digits(self, n: int) -> list:
        """The first n digits (fewer if the sequence terminates)."""
        if self.period is None:
            return list(self.preperiod[:n])
        return [self.digit(i) for i in range(n)]

    def unrolled(self, n: int) -> "DigitSequence":
        """Same sequence with at least n digits in the preperiod."""
        if self.period is None or len(self.preperiod) >= n:
            return self
        k = n - len(self.preperiod)
        L = len(self.period)
        pre = self.preperiod + tuple(self.period[i % L] for i in range(k))
        per = tuple(self.period[(k + i) % L] for i in range(L))
        return DigitSequence(pre, per)

    def prepend_translation(self, g: IntegerPoint) -> "DigitSequence":
        """Digits of T_g h given the digits of h: gamma_0 becomes g * gamma_0."""
        s = self.unrolled(1)
        return DigitSequence((g * s.preperiod[0],) + s.preperiod[1:], s.period)

    def prepend_inversion(self) -> "DigitSequence":
        """Digits of J h: drop a zero gamma_0, otherwise insert (0,0) in front."""
        s = self.unrolled(2)
        if s.preperiod and s.preperiod[0].is_zero():
            return DigitSequence(s.preperiod[1:], s.period).normalized()
        return DigitSequence((ZERO,) + s.preperiod, s.period)

    def prepend_word(self, tokens) -> "DigitSequence":
        s = self
        for t in reversed(list(tokens)):
            s = s.prepend_inversion() if t == "J" else s.prepend_translation(t)
        return s.normalized()

    def normalized(self) -> "DigitSequence":
        """Primitive period, shortest preperiod, and gamma_0 kept in the preperiod."""
        pre, per = list(self.preperiod), self.period
        if per is None:
            return DigitSequence(tuple(pre), None)
        per = list(per)
        L = len(per)
        for d in range(1, L + 1):
            if L % d == 0 and per == per[:d] * (L // d):
                per = per[:d]
                break
        while len(pre) > 1 and pre[-1] == per[-1]:
            pre.pop()
            per = [per[-1]] + per[:-1]
        if not pre:
            pre, per = [per[0]], per[1:] + per[:1]
        return DigitSequence(tuple(pre), tuple(per))

    def to_json(self) -> dict:
        return {
            "preperiod": [g.to_json() for g in self.preperiod],
            "period": None if self.period is None else [g.to_json() for g in self.period],
        }

    @classmethod
    def from_json(cls, obj) -> "DigitSequence":
        per = obj.get("period")
        return cls(
            tuple(IntegerPoint.from_json(g) for g in obj["preperiod"]),
            None if per is None else tuple(IntegerPoint.from_json(g) for g in per),
        )


@dataclass(frozen=True)
class Convergent:
    """(q : r : p) with coprime Gaussian-integer coordinates."""

    q: GaussianInteger
    r: GaussianInteger
    p: GaussianInteger

    @classmethod
    def from_column(cls, col) -> "Convergent":
        P = ProjectivePoint(*(GaussianRational(x) for x in col))
        return cls(*(x.num for x in P.coords()))

    @property
    def projective(self) -> ProjectivePoint:
        return ProjectivePoint(GaussianRational(self.q), GaussianRational(self.r), GaussianRational(self.p))

    @property
    def point(self) -> HeisenbergPoint:
        if self.q.is_zero():
            raise PointAtInfinityError("convergent at infinity")
        q = GaussianRational(self.q)
        return HeisenbergPoint._raw(GaussianRational(self.r) / q, GaussianRational(self.p) / q)

    def to_json(self) -> dict:
        return {"q": str(self.q), "r": str(self.r), "p": str(self.p)}


@dataclass
class ExpansionTrace:
    """Iterates h_i, digits gamma_i, word matrices and the v_i of each iterate."""

    digits: list = field(default_factory=list)
    iterates: list = field(default_factory=list)
    matrices: list = field(default_factory=list)
    terminated: bool = False

    @property
    def denominators(self) -> list:
        return [h.v for h in self.iterates]

    def sequence(self) -> DigitSequence:
        return DigitSequence(tuple(self.digits), None)


# --------------------------------------------------------------------------
# the Gauss map


def gauss_map(h: HeisenbergPoint, cfg: FundamentalDomainConfig = DEFAULT_CONFIG):
    """(gamma, h') with gamma = [iota h] and h' = gamma^-1 * iota h; (0,0) is fixed."""
    if h.is_origin():
        return ZERO, h
    ih = koranyi_inv(h)
    g = nearest_integer(ih, cfg)
    return g, group_mul(g.inverse().point, ih)


def expand(h: HeisenbergPoint, n: int, cfg: FundamentalDomainConfig = DEFAULT_CONFIG) -> ExpansionTrace:
    """gamma_0 .. gamma_n (fewer when some h_i = (0,0))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    g, cur = dirichlet_reduce(h, cfg)
    tr = ExpansionTrace([g], [cur], [translation(g)])
    for i in range(1, n + 1):
        if cur.is_origin():
            tr.terminated = True
            break
        try:
            g, cur = gauss_map(cur, cfg)
        except HeisenbergError as e:
            raise type(e)(f"step {i}: {e}") from e
        tr.digits.append(g)
        tr.iterates.append(cur)
        tr.matrices.append(tr.matrices[-1] @ j_matrix() @ translation(g))
    else:
        tr.terminated = cur.is_origin()
    return tr


def expand_rational_digits(h: HeisenbergPoint, cfg: FundamentalDomainConfig = DEFAULT_CONFIG, limit: int = 100000):
    """All digits of a Q(i) point; its expansion always terminates."""
    h = h.to_rational()
    g, cur = dirichlet_reduce(h, cfg)
    out = [g]
    while not cur.is_origin():
        assert len(out) < limit, "rational expansion did not terminate"
        g, cur = gauss_map(cur, cfg)
        out.append(g)
    return out


def _word_tokens(digits) -> list:
    toks = [digits[0]]
    for g in digits[1:]:
        toks += ["J", g]
    return toks


def convergents(d, upto: int | None = None) -> list[Convergent]:
    """Convergents 0..upto of a DigitSequence, trace or digit list."""
    if isinstance(d, ExpansionTrace):
        digits = d.digits if upto is None else d.digits[: upto + 1]
    elif isinstance(d, DigitSequence):
        if upto is None:
            if d.period is not None:
                raise ValueError("upto is required for periodic sequences")
            upto = len(d.preperiod) - 1
        digits = d.digits(upto + 1)
    else:
        digits = list(d) if upto is None else list(d)[: upto + 1]
    out = []
    acc = None
    for k, g in enumerate(digits):
        T = translation(g)
        acc = T if k == 0 else acc @ j_matrix() @ T
        out.append(Convergent.from_column(acc.column(0)))
    return out


# --------------------------------------------------------------------------
# period detection


def detect_period(
    h: HeisenbergPoint,
    max_steps: int = 500,
    cfg: FundamentalDomainConfig = DEFAULT_CONFIG,
) -> DigitSequence | None:
    """Run the Gauss map with exact coordinates until an iterate repeats.

    Returns a terminating sequence for Q(i) points, an eventually periodic one
    on an exact repeat h_i = h_j, and None if neither happens in max_steps.
    """
    if h.backend == "ball":
        raise TypeError("period detection needs exact coordinates")
    g, cur = dirichlet_reduce(h, cfg)
    digits = [g]
    seen = {cur: 0}
    for j in range(1, max_steps + 1):
        if cur.is_origin():
            return DigitSequence(tuple(digits), None)
        g, cur = gauss_map(cur, cfg)
        digits.append(g)
        if cur in seen:
            i = seen[cur]
            pre, per = tuple(digits[: i + 1]), tuple(digits[i + 1 :])
            # confirm: one more full period returns to the same iterate
            probe = cur
            for want in per:
                got, probe = gauss_map(probe, cfg)
                if got != want:
                    raise CertificationError("period replay produced different digits")
            if probe != cur:
                raise CertificationError("period replay did not close up")
            return DigitSequence(pre, per).normalized()
        seen[cur] = j
    return None


# --------------------------------------------------------------------------
# periodic sequence -> matrix


def euler_matrix(d: DigitSequence) -> UnitaryMatrix:
    """A B A^-1 with A = T_{p0} J ... J T_{pj} and B = J T_{q1} ... J T_{qk}.

    Raises TorsionMatrixError when the product has finite order, in which
    case the periodic digit word cannot converge.
    """
    if d.period is None:
        raise ValueError("euler_matrix needs a periodic sequence")
    if not d.preperiod:
        d = d.unrolled(1)
    A = tokens_to_matrix(_word_tokens(list(d.preperiod)))
    toks = []
    for g in d.period:
        toks += ["J", g]
    B = tokens_to_matrix(toks)
    M = A @ B @ A.inverse()
    tors, order = is_root_of_unity(M)
    if tors:
        raise TorsionMatrixError(f"the period word has finite order {order}")
    return M


# --------------------------------------------------------------------------
# matrix -> periodic sequence


@dataclass
class LagrangeReport:
    sequence: DigitSequence
    power_word: GeneratorWord
    case: int
    A: list
    B: list
    branch: str
    distances: list
    certified_at: int
    euler_certificate: bool


def _split_power_word(w: GeneratorWord):
    """M^4 = A B A^-1 with B = J T_{b1} ... J T_{bk}; returns (case, A tokens, B letters)."""
    lead, g, trail = w.leading, list(w.body), w.trailing_j
    N = len(g)
    if lead is not None and trail:
        return 1, [lead], g + [lead]
    if lead is not None:
        seq = [lead] + g  # gamma_0 .. gamma_N
        s = 0
        while s < N - s and seq[s].inverse() == seq[N - s]:
            s += 1
        if N - 2 * s <= 0:
            raise TorsionMatrixError("the conjugated word collapses to a translation")
        A = _word_tokens(seq[: s + 1])
        B = seq[s + 1 : N - s] + [seq[N - s] * seq[s]]
        return 2, A, B
    if trail:
        if N == 0:
            raise TorsionMatrixError("M^4 = J has finite order")
        seq = [None] + g  # 1-based
        s = 1
        while s < N + 1 - s and seq[s].inverse() == seq[N + 1 - s]:
            s += 1
        if N + 1 - 2 * s <= 0:
            raise TorsionMatrixError("the conjugated word collapses to a translation")
        A = []
        for x in seq[1 : s + 1]:
            A += ["J", x]
        B = seq[s + 1 : N + 1 - s] + [seq[N + 1 - s] * seq[s]]
        return 3, A, B
    return 4, [], g


def _b_tokens(B) -> list:
    toks = []
    for x in B:
        toks += ["J", x]
    return toks


def distance_trace(h: HeisenbergPoint, d: DigitSequence, n_max: int, prec: int = 512) -> list:
    """Upper bounds on d(h, K_n) for n = 0 .. n_max (floats, from certified balls)."""
    out = []
    hb = h.ball(prec)
    for c in convergents(d, n_max):
        try:
            pt = c.point
        except PointAtInfinityError:
            out.append(float("inf"))
            continue
        d4 = distance4(hb, pt, prec)
        hi = d4.abs_upper()
        out.append(float(hi) ** 0.25)
    return out


def _certify_convergence(h, d: DigitSequence, n_max: int, tol: float, prec: int):
    """First n with d_{n-2}, d_{n-1}, d_n all below tol and that window's max
    below the max of the window before it (distances may oscillate inside a
    period, so strict step-by-step decrease is not required)."""
    dist = distance_trace(h, d, n_max, prec)
    for n in range(5, len(dist)):
        now = max(dist[n - 2 : n + 1])
        if now < tol and now < max(dist[n - 5 : n - 2]):
            return n, dist
    return None, dist


def lagrange_report(
    M: UnitaryMatrix,
    h: HeisenbergPoint,
    *,
    n_max: int = 200,
    tolerance: float = 1e-8,
    precision: int = 512,
) -> LagrangeReport:
    """Build and certify an eventually periodic expansion of a fixed point h of M."""
    if not colinearity_certificate(M, h):
        raise ValueError("h is not fixed by M")
    if is_root_of_unity(M)[0]:
        raise TorsionMatrixError("M has finite order")
    if M.Q.is_zero() and M.R.is_zero() and M.QQ.is_zero():
        # lower triangular: M = D T_g, whose only fixed point is at infinity
        raise TorsionMatrixError("a translation-type matrix fixes no finite point")
    w = decompose_power4(M)
    case, A, B = _split_power_word(w)
    Am, Bm = tokens_to_matrix(A), tokens_to_matrix(_b_tokens(B))
    assert Am @ Bm @ Am.inverse() == M**4, "A B A^-1 does not reproduce M^4"
    if Bm.Q.is_zero() and Bm.QQ.is_zero() and Bm.R.is_zero():
        raise TorsionMatrixError("B is a translation; no finite fixed point")
    hp = act(Am.inverse(), h)
    lam = eigenvalue_at(Bm, hp)
    forward = DigitSequence((ZERO,), tuple(B))
    inv = [x.inverse() for x in reversed(B)]  # b_k^-1, ..., b_1^-1
    backward = DigitSequence((inv[0],), tuple(inv[1:] + inv[:1]))
    b = ball_eval(lam, 128)
    lo, hi = b.abs2_bounds()
    if lo > 1:
        order = [("forward", forward)]
    elif hi < 1:
        order = [("reversed", backward)]
    else:
        order = [("forward", forward), ("reversed", backward)]
    for branch, seq in order:
        full = seq.prepend_word(A)
        n, dist = _certify_convergence(h, full, n_max, tolerance, precision)
        if n is None:
            continue
        try:
            cert = colinearity_certificate(euler_matrix(full), h)
        except TorsionMatrixError:
            cert = False
        if not cert:
            raise CertificationError("the expansion's matrix does not fix h")
        return LagrangeReport(full, w, case, A, B, branch, dist, n, cert)
    raise CertificationError(f"convergents did not reach {tolerance} within {n_max} steps")


def lagrange_expansion(M: UnitaryMatrix, h: HeisenbergPoint, **kw) -> DigitSequence:
    return lagrange_report(M, h, **kw).sequence


# --------------------------------------------------------------------------
# identities


def _check(lhs, rhs, prec: int, radius: Fraction):
    """Exact comparison when possible, else ball overlap with a small radius."""
    exact_kinds = (GaussianRational, FieldElement)
    exact = None
    if isinstance(lhs, exact_kinds) and isinstance(rhs, exact_kinds):
        exact = (lhs - rhs).is_zero()
    lb, rb = ball_eval(lhs, prec), ball_eval(rhs, prec)
    diff = lb - rb
    ball_ok = diff.contains_zero() and diff.rad <= radius
    return exact, ball_ok


def qproduct_check(word: GeneratorWord, h: HeisenbergPoint, *, prec: int = 256, radius=Fraction(1, 1 << 64)) -> bool:
    """Q' + QQ u_n - Q v_n = (-1)^n / (v_0 ... v_{n-1}) for M = J T_{g1} ... J T_{gn}.

    Here (u_n, v_n) = h and (u_{i-1}, v_{i-1}) = J T_{g_i} (u_i, v_i).
    """
    if word.leading is not None or word.trailing_j:
        raise ValueError("qproduct_check expects a word J T_g1 ... J T_gn")
    n = len(word.body)
    M = tokens_to_matrix(_b_tokens(word.body))
    pts = [h]
    for g in reversed(word.body):
        try:
            pts.append(act(j_matrix() @ translation(g), pts[-1]))
        except PointAtInfinityError as e:
            raise DegenerateOrbitError(f"an intermediate point is at infinity: {e}") from e
    pts.reverse()  # pts[i] = (u_i, v_i)
    prod = 1
    for p in pts[:n]:
        if _is_zero(p.v):
            raise DegenerateOrbitError("some v_i vanishes")
        prod = p.v * prod
    lhs = eigenvalue_at(M, h)
    rhs = (-1) ** n / prod if n else GaussianRational(1)
    exact, ball_ok = _check(lhs, rhs, prec, radius)
    return ball_ok and exact is not False


def _is_zero(x) -> bool:
    if isinstance(x, ComplexBall):
        return x.contains_zero()
    return x.is_zero() if not isinstance(x, int) else x == 0


def vrelation_check(M: UnitaryMatrix, h: HeisenbergPoint, *, prec: int = 256, radius=Fraction(1, 1 << 64)) -> bool:
    """v conj(Q) - u conj(R) + conj(P) = -1 / (Q' + QQ u - Q v) at a fixed point h.

    The sign comes from pairing the third column of M with the first:
    col3^dagger J col1 = J[2][0] = -1.
    """
    if is_root_of_unity(M)[0]:
        raise TorsionMatrixError("the relation is only asserted for non-torsion M")
    if not colinearity_certificate(M, h):
        raise ValueError("h is not fixed by M")
    lhs = vrelation_lhs(M, h)
    den = eigenvalue_at(M, h)
    if _is_zero(den):
        raise DegenerateOrbitError("Q' + QQ u - Q v vanishes")
    exact, _ = _check(lhs * den, GaussianRational(-1), prec, radius)
    d = ball_eval(lhs, prec) + ball_eval(den, prec).inverse()
    return exact is not False and d.contains_zero() and d.rad <= radius


def vrelation_lhs(M: UnitaryMatrix, h: HeisenbergPoint):
    return h.v * M.Q.conjugate() - h.u * M.R.conjugate() + M.P.conjugate()
