"""Closed-form classification of quadratics and cubics.

Quadratic ``t**2 + u*t + v`` on [0, inf) and on R, and the positive-constant
cubic ``t**3 + p*t**2 + q*t + r`` on [0, inf), including the explicit double
root of the boundary case.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactpoly import Poly, to_rational
from .sturm import negative_point
from .types import Certificate, CertificateConflict, Classification, Region, ZeroLocation


@dataclass(frozen=True)
class QuadraticCoeffs:
    u: Fraction
    v: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", to_rational(self.u))
        object.__setattr__(self, "v", to_rational(self.v))

    def poly(self) -> Poly:
        return Poly.of(1, self.u, self.v)


@dataclass(frozen=True)
class CubicCoeffs:
    p: Fraction
    q: Fraction
    r: Fraction

    def __post_init__(self) -> None:
        for name in ("p", "q", "r"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    def poly(self) -> Poly:
        return Poly.of(1, self.p, self.q, self.r)


@dataclass(frozen=True)
class CubicSturmData:
    q2: Fraction
    r2: Fraction
    delta: Fraction


def witness_for(g: Poly, region: Region) -> Fraction:
    """Negative point for a polynomial a closed-form rule declared indefinite."""
    w = negative_point(g, region)
    if w is None:
        raise CertificateConflict(f"closed form says indefinite but {g} has no negative point on {region.value}")
    return w


def classify_quadratic(c: QuadraticCoeffs, region: Region = Region.HALF_LINE) -> tuple[Classification, Certificate]:
    u, v = c.u, c.v
    disc = u * u - 4 * v
    values = {"u": u, "v": v, "u^2-4v": disc}
    g = c.poly()
    if region is Region.REAL_LINE:
        if disc < 0:
            return Classification.positive(), Certificate("quadratic", "4v>u^2", values)
        if disc == 0:
            return Classification.with_zeros([ZeroLocation.at(-u / 2, 2)]), Certificate("quadratic", "4v=u^2", values)
        return Classification.indefinite(witness_for(g, region)), Certificate("quadratic", "4v<u^2", values)

    if v == 0:
        # t*(t + u)
        if u > 0:
            return Classification.with_zeros([ZeroLocation.at(0)]), Certificate("quadratic", "v=0,u>0", values)
        if u == 0:
            return Classification.with_zeros([ZeroLocation.at(0, 2)]), Certificate("quadratic", "v=0,u=0", values)
        return Classification.indefinite(witness_for(g, region)), Certificate("quadratic", "v=0,u<0", values)
    if u >= 0 and v > 0:
        return Classification.positive(), Certificate("quadratic", "(i)", values)
    if u < 0 and disc < 0:
        return Classification.positive(), Certificate("quadratic", "(ii)", values)
    if u < 0 and disc == 0:
        return Classification.with_zeros([ZeroLocation.at(-u / 2, 2)]), Certificate("quadratic", "u<0,4v=u^2", values)
    return Classification.indefinite(witness_for(g, region)), Certificate("quadratic", "other", values)


def cubic_discriminant(c: CubicCoeffs) -> Fraction:
    p, q, r = c.p, c.q, c.r
    return p * p * q * q + 18 * p * q * r - 27 * r * r - 4 * p ** 3 * r - 4 * q ** 3


def cubic_sturm_data(c: CubicCoeffs) -> CubicSturmData:
    p, q, r = c.p, c.q, c.r
    return CubicSturmData(q2=2 * p * p / 9 - 2 * q / 3, r2=p * q / 9 - r, delta=cubic_discriminant(c))


def classify_cubic_halfline(c: CubicCoeffs) -> tuple[Classification, Certificate]:
    """Positive-constant cubic on [0, inf).

    Strictly positive iff ``p, q >= 0`` or the discriminant is negative;
    a zero discriminant otherwise gives a double root at
    ``(9r - pq) / (2p^2 - 6q) > 0``; everything else dips below zero.
    """
    p, q, r = c.p, c.q, c.r
    if r <= 0:
        raise ValueError("classify_cubic_halfline needs r > 0")
    data = cubic_sturm_data(c)
    values = {"p": p, "q": q, "r": r, "delta": data.delta, "q2": data.q2, "r2": data.r2}
    if p >= 0 and q >= 0:
        return Classification.positive(), Certificate("cubic", "(A)", values)
    if data.delta < 0:
        return Classification.positive(), Certificate("cubic", "(B)", values)
    if data.delta == 0:
        den = 2 * p * p - 6 * q
        if den <= 0:
            raise CertificateConflict(f"zero-discriminant branch with 2p^2-6q = {den} <= 0")
        alpha = (9 * r - p * q) / den
        if alpha <= 0 or c.poly()(alpha) != 0:
            raise CertificateConflict(f"double root {alpha} is not a positive zero of {c.poly()}")
        values["alpha"] = alpha
        return Classification.with_zeros([ZeroLocation.at(alpha, 2)]), Certificate("cubic", "delta=0", values)
    return Classification.indefinite(witness_for(c.poly(), Region.HALF_LINE)), Certificate("cubic", "delta>0", values)
