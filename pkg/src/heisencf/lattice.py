"""Nearest integer points and reduction into the Dirichlet domain K_D.

For gamma = (a, |a|^2/2 + c i) and h = (u, v) the gauge distance satisfies

    d(h, gamma)^4 = |u - a|^4 / 4 + (Im(v - u conj(a)) - c)^2,

so for fixed ``a`` the best ``c`` is the floor or ceiling of
``Im(v - u conj(a))`` and every ``a`` with ``|u - a| > r`` is farther than
``r^4 / 4``.  Search discs grow until the best distance found beats that bound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .ball import DEFAULT_PRECISION, PRECISION_CAP, ComplexBall, ball_eval, precision_schedule
from .errors import PrecisionCapError
from .gaussian import GaussianInteger, GaussianRational
from .siegel import HeisenbergPoint, IntegerPoint, group_mul

__all__ = [
    "FundamentalDomainConfig",
    "DomainStatus",
    "nearest_integer",
    "nearest_candidates",
    "dirichlet_reduce",
    "in_domain",
]


def _lex(g: IntegerPoint):
    return g.sort_key()


_TIE_BREAKS = {"lex": _lex}


@dataclass(frozen=True)
class FundamentalDomainConfig:
    tie_break: str = "lex"
    initial_search_radius: Fraction = Fraction(2)
    precision_start: int = DEFAULT_PRECISION
    precision_cap: int = PRECISION_CAP

    def __post_init__(self):
        if self.tie_break not in _TIE_BREAKS:
            raise ValueError(f"unknown tie-break {self.tie_break!r}; choose from {sorted(_TIE_BREAKS)}")
        object.__setattr__(self, "initial_search_radius", Fraction(self.initial_search_radius))
        if self.initial_search_radius <= 0:
            raise ValueError("initial_search_radius must be positive")
        list(precision_schedule(self.precision_start, self.precision_cap))  # validates

    def key(self, g: IntegerPoint):
        return _TIE_BREAKS[self.tie_break](g)

    def precisions(self):
        return precision_schedule(self.precision_start, self.precision_cap)


DEFAULT_CONFIG = FundamentalDomainConfig()


class DomainStatus(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary-ambiguous"
    OUTSIDE = "outside"


# --------------------------------------------------------------------------
# exact search


def _exact_minimizers(u: GaussianRational, v: GaussianRational, r0: Fraction):
    """All gamma at minimal distance from (u, v), with that d^4."""
    r = r0
    while True:
        best, found = None, []
        ur, ui = u.real, u.imag
        for x in range(ceil(ur - r), floor(ur + r) + 1):
            dx = ur - x
            for y in range(ceil(ui - r), floor(ui + r) + 1):
                if (x + y) % 2:
                    continue
                dy = ui - y
                h2 = dx * dx + dy * dy
                if h2 > r * r:
                    continue
                a = GaussianInteger(x, y)
                t = (v - u * a.conjugate()).imag
                for c in {floor(t), ceil(t)}:
                    d4 = h2 * h2 / 4 + (t - c) ** 2
                    if best is None or d4 < best:
                        best, found = d4, [IntegerPoint(a, c)]
                    elif d4 == best:
                        found.append(IntegerPoint(a, c))
        if best is not None and best <= r**4 / 4:
            return best, found
        r += 1


# --------------------------------------------------------------------------
# ball search


def _ball_survivors(ub: ComplexBall, vb: ComplexBall, r0: Fraction):
    """gamma whose distance interval overlaps the best upper bound.

    Returns a dict gamma -> (lo, hi) enclosure of d^4.
    """
    mx, my = round(ub.mid_re), round(ub.mid_im)
    R = max(1, ceil(r0))
    while True:
        rho = R - Fraction(1, 2) - ub.rad
        cands = {}
        for x in range(mx - R, mx + R + 1):
            for y in range(my - R, my + R + 1):
                if (x + y) % 2:
                    continue
                a = GaussianInteger(x, y)
                t = vb - ub * a.conjugate()
                lo, hi = t.imag_bounds()
                for c in range(floor(lo), ceil(hi) + 1):
                    g = IntegerPoint(a, c)
                    cands[g] = (t + g.v.conjugate()).abs2_bounds()
        best_hi = min(hi for _, hi in cands.values())
        if rho > 0 and best_hi <= rho**4 / 4:
            return {g: b for g, b in cands.items() if b[0] <= best_hi}
        R += 1


def nearest_candidates(h: HeisenbergPoint, cfg: FundamentalDomainConfig = DEFAULT_CONFIG, *, prec=None):
    """Integer points that may be nearest to ``h``.

    Exact backends return exactly the minimizers; balls return every candidate
    whose distance cannot be separated from the best at precision ``prec``.
    """
    kind = h.backend
    if kind == "field" and h.is_rational():
        h = h.to_rational()
        kind = "rational"
    if kind == "rational":
        return _exact_minimizers(h.u, h.v, cfg.initial_search_radius)[1]
    p = prec or (h.v.prec if kind == "ball" else cfg.precision_start)
    return list(_ball_survivors(ball_eval(h.u, p), ball_eval(h.v, p), cfg.initial_search_radius))


def nearest_integer(h: HeisenbergPoint, cfg: FundamentalDomainConfig = DEFAULT_CONFIG) -> IntegerPoint:
    """[h]: the integer point closest to h, ties broken by ``cfg``."""
    kind = h.backend
    if kind == "rational" or (kind == "field" and h.is_rational()):
        return min(nearest_candidates(h, cfg), key=cfg.key)
    if kind == "ball":
        c = nearest_candidates(h, cfg)
        if len(c) == 1:
            return c[0]
        raise PrecisionCapError(f"ball input cannot separate {len(c)} nearest candidates")
    for p in cfg.precisions():
        c = nearest_candidates(h, cfg, prec=p)
        if len(c) == 1:
            return c[0]
    raise PrecisionCapError(f"nearest integer undecided at {cfg.precision_cap} bits")


def dirichlet_reduce(h: HeisenbergPoint, cfg: FundamentalDomainConfig = DEFAULT_CONFIG):
    """(gamma, gamma^-1 * h) with gamma = [h]."""
    g = nearest_integer(h, cfg)
    return g, group_mul(g.inverse().point, h)


def in_domain(h: HeisenbergPoint, cfg: FundamentalDomainConfig = DEFAULT_CONFIG) -> DomainStatus:
    """Is the origin strictly the nearest integer point to h?"""
    zero = IntegerPoint(GaussianInteger(0, 0), 0)
    kind = h.backend
    if kind == "rational" or (kind == "field" and h.is_rational()):
        c = nearest_candidates(h, cfg)
        if zero not in c:
            return DomainStatus.OUTSIDE
        return DomainStatus.INSIDE if len(c) == 1 else DomainStatus.BOUNDARY
    precs = [None] if kind == "ball" else list(cfg.precisions())
    for p in precs:
        c = nearest_candidates(h, cfg, prec=p)
        if zero not in c:
            return DomainStatus.OUTSIDE
        if len(c) == 1:
            return DomainStatus.INSIDE
    return DomainStatus.BOUNDARY
