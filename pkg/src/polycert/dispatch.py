"""Route an arbitrary polynomial to the closed-form rule that covers it.

Inputs outside every rule's hypotheses (degree 6 and up, quartics whose
``e/a`` is not a rational fourth power) go to the Sturm oracle and are
marked ``method="oracle"`` in the certificate.
"""
from __future__ import annotations

from fractions import Fraction

from .exactpoly import Poly, ZeroPolynomialError
from .lowdeg import CubicCoeffs, QuadraticCoeffs, classify_cubic_halfline, classify_quadratic, witness_for
from .quartic import classify_quartic_halfline, classify_quartic_realline, classify_quartic_wq05, normalize_quartic
from .quintic import QuinticCoeffs, classify_quintic_halfline
from .sturm import oracle_classify
from .types import Certificate, Classification, Region, Verdict, ZeroLocation


def classify(g: Poly, region: Region = Region.HALF_LINE) -> tuple[Classification, Certificate]:
    """Trichotomy of ``g`` on ``[0, inf)`` or on ``R`` with a certificate."""
    if g.is_zero():
        raise ZeroPolynomialError("cannot classify the zero polynomial")
    if g.degree == 0:
        if g.lc > 0:
            return Classification.positive(), Certificate("constant", "c>0", {"c": g.lc})
        return Classification.indefinite(Fraction(0)), Certificate("constant", "c<0", {"c": g.lc})
    if g.lc < 0:
        return _indefinite(g, region, "sign", "lc<0", {"lc": g.lc})
    if region is Region.REAL_LINE and g.degree % 2:
        return _indefinite(g, region, "sign", "odd degree", {"degree": g.degree})
    g = g.monic()
    k = _trailing_zeros(g)
    if k:
        return _strip_power_of_t(g, k, region)
    if g.constant < 0:
        return Classification.indefinite(Fraction(0)), Certificate("sign", "g(0)<0", {"g(0)": g.constant})
    if region is Region.HALF_LINE:
        return _halfline(g)
    return _realline(g)


def _indefinite(g: Poly, region: Region, method: str, case: str, values: dict):
    return Classification.indefinite(witness_for(g, region)), Certificate(method, case, values)


def _trailing_zeros(g: Poly) -> int:
    k = 0
    for c in reversed(g.coeffs):
        if c:
            break
        k += 1
    return k


def _strip_power_of_t(g: Poly, k: int, region: Region):
    """``g = t**k * h`` with ``h(0) != 0``."""
    h = Poly(g.coeffs[:len(g.coeffs) - k])
    values = {"k": k}
    if region is Region.REAL_LINE and k % 2:
        return _indefinite(g, region, "degenerate", "t^k, k odd", values)
    if h.degree == 0:
        h_cls, h_cert = Classification.positive(), Certificate("constant", "c>0", {"c": h.lc})
    else:
        h_cls, h_cert = classify(h, region)
    cert = Certificate("degenerate", "t^k", values, (h_cert,))
    if h_cls.verdict is Verdict.INDEFINITE:
        return Classification.indefinite(witness_for(g, region)), cert
    return Classification.with_zeros(list(h_cls.zeros) + [ZeroLocation.at(0, k)]), cert


def _oracle(g: Poly, region: Region, reason: str):
    return oracle_classify(g, region), Certificate("oracle", "fallback", {"reason": reason, "degree": g.degree})


def _halfline(g: Poly):
    n = g.degree
    if n == 1:
        return Classification.positive(), Certificate("linear", "c>0", {"c": g.constant})
    if n == 2:
        return classify_quadratic(QuadraticCoeffs(*g.coeffs[1:]), Region.HALF_LINE)
    if n == 3:
        return classify_cubic_halfline(CubicCoeffs(*g.coeffs[1:]))
    if n == 4:
        norm = normalize_quartic(g)
        if norm is None:
            return _oracle(g, Region.HALF_LINE, "e/a is not a rational fourth power")
        f, s = norm
        cls, cert = classify_quartic_halfline(f)
        return _rescale(cls, s), _with_scale(cert, s)
    if n == 5:
        return classify_quintic_halfline(QuinticCoeffs(*g.coeffs[1:]))
    return _oracle(g, Region.HALF_LINE, "no closed form above degree 5")


def _realline(g: Poly):
    n = g.degree
    if n == 2:
        return classify_quadratic(QuadraticCoeffs(*g.coeffs[1:]), Region.REAL_LINE)
    if n == 4:
        norm = normalize_quartic(g)
        if norm is None:
            return _oracle(g, Region.REAL_LINE, "e/a is not a rational fourth power")
        f, s = norm
        cls, cert = classify_quartic_realline(f)
        cross, cross_cert = classify_quartic_wq05(f)
        cert = Certificate(cert.method, cert.case, dict(cert.values, wq05_case=cross_cert.case,
                                                         wq05_agrees=cross.verdict is cls.verdict), cert.steps)
        return _rescale(cls, s), _with_scale(cert, s)
    return _oracle(g, Region.REAL_LINE, "no closed form for this degree on R")


def _rescale(cls: Classification, s: Fraction) -> Classification:
    """Map a verdict on ``f(x)`` back to ``g(t) = c * f(t / s)``, ``s > 0``."""
    if s == 1:
        return cls
    if cls.verdict is Verdict.INDEFINITE:
        return Classification.indefinite(cls.witness * s)
    return Classification.with_zeros([ZeroLocation(z.lo * s, z.hi * s, z.multiplicity) for z in cls.zeros])


def _with_scale(cert: Certificate, s: Fraction) -> Certificate:
    if s == 1:
        return cert
    return Certificate(cert.method, cert.case, dict(cert.values, scale=s), cert.steps)


def agrees(a: Classification, b: Classification) -> bool:
    """Same verdict and the same zeros (count, multiplicities, exact values)."""
    if a.verdict is not b.verdict:
        return False
    if len(a.zeros) != len(b.zeros):
        return False
    for x, y in zip(a.zeros, b.zeros):
        if x.multiplicity != y.multiplicity or x.exact != y.exact:
            return False
        if x.exact and x.lo != y.lo:
            return False
        if not x.exact and (x.hi <= y.lo or y.hi <= x.lo):
            return False
    return True


def check_against_oracle(g: Poly, region: Region, cls: Classification) -> bool:
    return agrees(cls, oracle_classify(g, region))

