"""Normalized quartics ``t**4 + alpha t**3 + beta t**2 + gamma t + 1``.

Three independent deciders live here: the half-line rule (conditions
(A)/(B)/(C)), the real-line rule built from it, and the G/H/I route via
invariants of the form ``a0 t^4 + 4a1 t^3 + 6a2 t^2 + 4a3 t + a4``.  All
square-root comparisons are resolved by sign-aware squaring, so every
test is a rational sign test.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .exactpoly import Poly, to_rational
from .lowdeg import witness_for
from .sturm import real_zeros
from .types import Certificate, CertificateConflict, Classification, Region


@dataclass(frozen=True)
class QuarticNormal:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    def poly(self) -> Poly:
        return Poly.of(1, self.alpha, self.beta, self.gamma, 1)


@dataclass(frozen=True)
class QuarticInvariants:
    delta: Fraction
    lambda1: Fraction
    lambda2_defined: bool
    G: Fraction
    H: Fraction
    I: Fraction
    J: Fraction


class RegionClass(enum.Enum):
    OUTSIDE = "outside"
    BOUNDARY = "boundary"
    INTERIOR = "interior"
    APPENDIX = "appendix"


class Plane(enum.Enum):
    ALPHA_EQ_GAMMA = "alpha-eq-gamma"
    ALPHA_EQ_NEG_GAMMA = "alpha-eq-neg-gamma"


def quartic_delta(n: QuarticNormal) -> Fraction:
    a, b, g = n.alpha, n.beta, n.gamma
    return 4 * (b * b - 3 * a * g + 12) ** 3 - (72 * b + 9 * a * b * g - 2 * b ** 3 - 27 * a * a - 27 * g * g) ** 2


def quartic_invariants(n: QuarticNormal) -> QuarticInvariants:
    a, b, g = n.alpha, n.beta, n.gamma
    a1, a2, a3 = a / 4, b / 6, g / 4
    return QuarticInvariants(
        delta=quartic_delta(n),
        lambda1=(a - g) ** 2 - 16 * (a + b + g + 2),
        lambda2_defined=b > 2,
        G=a3 - 3 * a1 * a2 + 2 * a1 ** 3,
        H=a2 - a1 * a1,
        I=1 - 4 * a1 * a3 + 3 * a2 * a2,
        J=a2 + 2 * a1 * a2 * a3 - a1 * a1 - a3 * a3 - a2 ** 3,
    )


def _abs_le_4sqrt(x: Fraction, radicand: Fraction) -> bool:
    """``|x| <= 4*sqrt(radicand)`` without leaving Q."""
    return radicand >= 0 and x * x <= 16 * radicand


def _ge_minus_4sqrt(x: Fraction, radicand: Fraction) -> bool:
    """``x >= -4*sqrt(radicand)`` for ``radicand >= 0``."""
    return x >= 0 or x * x <= 16 * radicand


def halfline_conditions(n: QuarticNormal, delta: Optional[Fraction] = None) -> list[str]:
    """Labels of every satisfied nonnegativity condition on (0, inf)."""
    a, b, g = n.alpha, n.beta, n.gamma
    if delta is None:
        delta = quartic_delta(n)
    fired = []
    if delta <= 0 and a + g > 0:
        fired.append("(A)")
    if a >= 0 and g >= 0 and b >= -2:
        fired.append("(B)")
    if delta >= 0 and _abs_le_4sqrt(a - g, b + 2):
        if -2 <= b <= 6:
            fired.append("(C)(i)")
        elif b > 6 and _ge_minus_4sqrt(a + g, b - 2):
            fired.append("(C)(ii)")
    return fired


def _nonneg_refined(g: Poly, region: Region) -> Classification:
    """Split a closed-form 'nonnegative' verdict into strict / with zeros."""
    zeros = real_zeros(g, region)
    if any(z.multiplicity % 2 for z in zeros if not (region is Region.HALF_LINE and z.exact and z.lo == 0)):
        raise CertificateConflict(f"closed form says nonnegative but {g} crosses zero on {region.value}")
    return Classification.with_zeros(zeros)


def classify_quartic_halfline(n: QuarticNormal) -> tuple[Classification, Certificate]:
    inv = quartic_invariants(n)
    fired = halfline_conditions(n, inv.delta)
    values = {"alpha": n.alpha, "beta": n.beta, "gamma": n.gamma, "delta": inv.delta,
              "lambda1": inv.lambda1, "conditions": fired}
    f = n.poly()
    if fired:
        return _nonneg_refined(f, Region.HALF_LINE), Certificate("quartic-halfline", fired[0], values)
    return Classification.indefinite(witness_for(f, Region.HALF_LINE)), Certificate("quartic-halfline", "none", values)


def realline_nonnegative(n: QuarticNormal, delta: Fraction) -> Optional[str]:
    a, b, g = n.alpha, n.beta, n.gamma
    if delta < 0 or not _abs_le_4sqrt(a - g, b + 2):
        return None
    if -2 <= b <= 6:
        return "(i)"
    if b > 6 and _abs_le_4sqrt(a + g, b - 2):
        return "(ii)"
    return None


def is_appendix(n: QuarticNormal, delta: Optional[Fraction] = None) -> bool:
    a, b, g = n.alpha, n.beta, n.gamma
    if delta is None:
        delta = quartic_delta(n)
    return delta == 0 and a == g and a * a + 8 == 4 * b and 4 * b < 24


def classify_quartic_realline(n: QuarticNormal) -> tuple[Classification, Certificate]:
    inv = quartic_invariants(n)
    branch = realline_nonnegative(n, inv.delta)
    values = {"alpha": n.alpha, "beta": n.beta, "gamma": n.gamma, "delta": inv.delta}
    f = n.poly()
    if is_appendix(n, inv.delta):
        return Classification.positive(), Certificate("quartic-realline", "(A)", values)
    if inv.delta > 0 and branch:
        return Classification.positive(), Certificate("quartic-realline", "(B)" + branch, values)
    if branch:
        return _nonneg_refined(f, Region.REAL_LINE), Certificate("quartic-realline", "nonnegative" + branch, values)
    return Classification.indefinite(witness_for(f, Region.REAL_LINE)), Certificate("quartic-realline", "none", values)


def classify_quartic_wq05(n: QuarticNormal) -> tuple[Classification, Certificate]:
    """Real-line classification through the G, H, I invariants."""
    inv = quartic_invariants(n)
    k = 12 * inv.H ** 2 - inv.I
    values = {"alpha": n.alpha, "beta": n.beta, "gamma": n.gamma, "delta": inv.delta,
              "G": inv.G, "H": inv.H, "I": inv.I, "J": inv.J, "12H^2-I": k}
    f = n.poly()
    if inv.delta == 0 and inv.G == 0 and k == 0 and inv.H > 0:
        return Classification.positive(), Certificate("quartic-wq05", "(1)", values)
    if inv.delta > 0:
        if inv.H >= 0:
            return Classification.positive(), Certificate("quartic-wq05", "(2)(i)", values)
        if k < 0:
            return Classification.positive(), Certificate("quartic-wq05", "(2)(ii)", values)
    if inv.delta >= 0 and (inv.H >= 0 or k <= 0):
        return _nonneg_refined(f, Region.REAL_LINE), Certificate("quartic-wq05", "nonnegative", values)
    return Classification.indefinite(witness_for(f, Region.REAL_LINE)), Certificate("quartic-wq05", "none", values)


def quartic_region_classify(n: QuarticNormal) -> RegionClass:
    delta = quartic_delta(n)
    if is_appendix(n, delta):
        return RegionClass.APPENDIX
    branch = realline_nonnegative(n, delta)
    if branch is None:
        return RegionClass.OUTSIDE
    return RegionClass.INTERIOR if delta > 0 else RegionClass.BOUNDARY


def _frange(lo: Fraction, hi: Fraction, step: Fraction) -> Iterator[Fraction]:
    x = lo
    while x <= hi:
        yield x
        x += step


def region_cross_section(plane: Plane, alpha_lo, alpha_hi, beta_lo, beta_hi, step) -> list[tuple[Fraction, Fraction, RegionClass]]:
    """Grid over one symmetry plane, alpha-major then beta, both ascending."""
    alpha_lo, alpha_hi, beta_lo, beta_hi, step = map(to_rational, (alpha_lo, alpha_hi, beta_lo, beta_hi, step))
    if step <= 0:
        raise ValueError("step must be positive")
    if alpha_lo > alpha_hi or beta_lo > beta_hi:
        raise ValueError("empty grid: lo must not exceed hi")
    sign = 1 if plane is Plane.ALPHA_EQ_GAMMA else -1
    out = []
    for a in _frange(alpha_lo, alpha_hi, step):
        for b in _frange(beta_lo, beta_hi, step):
            out.append((a, b, quartic_region_classify(QuarticNormal(a, b, sign * a))))
    return out


def rational_fourth_root(x: Fraction) -> Optional[Fraction]:
    if x <= 0:
        return None
    roots = []
    for part in (x.numerator, x.denominator):
        r = math.isqrt(math.isqrt(part))
        if r ** 4 != part:
            return None
        roots.append(r)
    return Fraction(roots[0], roots[1])


def normalize_quartic(g: Poly) -> Optional[tuple[QuarticNormal, Fraction]]:
    """``(normal form, s)`` with ``g(s*x) = lc*s**4 * f(x)``, or ``None``.

    Only possible when ``e/a`` is the fourth power of a positive rational;
    otherwise normalizing would leave Q.
    """
    if g.degree != 4 or g.lc <= 0 or g.constant <= 0:
        return None
    a, b, c, d, e = g.coeffs
    s = rational_fourth_root(e / a)
    if s is None:
        return None
    return QuarticNormal(b / (a * s), c / (a * s * s), d / (a * s ** 3)), s


def cone_contains(n: QuarticNormal) -> bool:
    """Membership of the closed nonnegativity cone on R."""
    return realline_nonnegative(n, quartic_delta(n)) is not None


def ensure_consistent(n: QuarticNormal) -> None:
    """Cheap internal identities; raises ``CertificateConflict`` on failure."""
    inv = quartic_invariants(n)
    a, b, g = n.alpha, n.beta, n.gamma
    if 432 * inv.J != 72 * b + 9 * a * b * g - 27 * a * a - 27 * g * g - 2 * b ** 3:
        raise CertificateConflict("432 J identity failed")
    if inv.delta != 6912 * (inv.I ** 3 - 27 * inv.J ** 2):
        raise CertificateConflict("delta = 6912 (I^3 - 27 J^2) identity failed")
