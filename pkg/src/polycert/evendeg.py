"""Even-degree monic polynomials with unit constant term.

Inside the set of such polynomials that are positive on R, the
discriminant vanishes only on the "appendix": polynomials carrying a
squared quadratic factor without real roots.  Everywhere else in that set
its sign depends on the degree alone.  This module tests membership in
the appendix and surveys discriminant signs over random samples.
"""
from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exactpoly import Poly, discriminant, poly_derivative, poly_gcd
from .sturm import MINUS_INFINITY, PLUS_INFINITY, count_roots


@dataclass(frozen=True)
class MonicUnitPoly:
    poly: Poly

    def __post_init__(self) -> None:
        p = self.poly
        if p.degree < 4 or p.degree % 2:
            raise ValueError(f"need even degree >= 4, got {p.degree}")
        if p.lc != 1 or p.constant != 1:
            raise ValueError("leading and constant coefficients must both be 1")


def no_real_roots(p: Poly) -> bool:
    if p.degree < 1:
        return not p.is_zero()
    return count_roots(p, MINUS_INFINITY, PLUS_INFINITY) == 0


def appendix_factor(p: Poly) -> Optional[Poly]:
    """The repeated part ``gcd(p, p')`` when ``p`` lies in the appendix, else ``None``.

    A polynomial positive on R has only complex repeated roots, so its
    repeated part is a product of quadratics ``t^2 + u t + v`` with
    ``u^2 < 4v``; the cofactor then has no real roots either.
    """
    if p.lc <= 0 or not no_real_roots(p):
        return None
    g = poly_gcd(p, poly_derivative(p))
    return g if g.degree >= 1 else None


def appendix_membership(p: Union[MonicUnitPoly, Poly]) -> bool:
    """Plain ``Poly`` inputs skip the unit-constant check, since ``(t^2+1)^2 (t^2+2)``
    belongs to the set without being normalized."""
    return appendix_factor(p.poly if isinstance(p, MonicUnitPoly) else p) is not None


@dataclass(frozen=True)
class SurveyReport:
    degree: int
    samples_tested: int
    no_real_root_count: int
    positive_disc: int
    negative_disc: int
    zero_disc: int
    appendix_hits: int
    seed: int
    lock_violations: int = 0

    @property
    def lock_holds(self) -> bool:
        """Zero discriminant occurs exactly on appendix members."""
        return self.lock_violations == 0 and self.zero_disc == self.appendix_hits

    @property
    def nonzero_signs(self) -> set[int]:
        return {s for s, n in ((1, self.positive_disc), (-1, self.negative_disc)) if n}

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def random_monic_unit(degree: int, rng: random.Random, coeff_bound: int, rational: bool = False) -> Poly:
    inner = []
    for _ in range(degree - 1):
        num = rng.randint(-coeff_bound, coeff_bound)
        den = rng.randint(1, coeff_bound) if rational else 1
        inner.append(Fraction(num, den))
    return Poly.of(1, *inner, 1)


def appendix_witnesses(degree: int) -> list[Poly]:
    """A few known appendix members of the given even degree."""
    pad = Poly.of(1, 0, 1) ** ((degree - 4) // 2)
    return [Poly.of(1, -1, 1) ** 2 * pad, Poly.of(1, Fraction(1, 2), 1) ** 2 * pad, Poly.of(1, 1, 1) ** 2 * pad]


def survey_sample(p: Poly) -> tuple[bool, int, bool]:
    """``(no real roots, sign of discriminant, appendix member)`` for one sample."""
    if not no_real_roots(p):
        return False, 0, False
    disc = discriminant(p)
    sign = (disc > 0) - (disc < 0)
    return True, sign, appendix_factor(p) is not None


def discriminant_sign_survey(degree: int, samples: int, seed: int, coeff_bound: int = 4, rational: bool = False,
                             inject: Sequence[Poly] = (), mapper=map) -> SurveyReport:
    """Draw ``samples`` random members, append ``inject``, tally discriminant signs.

    ``mapper`` lets callers evaluate samples in parallel; it must preserve
    order, and the report does not depend on it.
    """
    if degree < 4 or degree % 2:
        raise ValueError(f"survey degree must be even and >= 4, got {degree}")
    if samples < 0 or coeff_bound < 1:
        raise ValueError("samples must be >= 0 and coeff_bound >= 1")
    rng = random.Random(seed)
    polys = [random_monic_unit(degree, rng, coeff_bound, rational) for _ in range(samples)]
    for p in inject:
        MonicUnitPoly(p)
        if p.degree != degree:
            raise ValueError(f"injected polynomial {p} has degree {p.degree}, not {degree}")
    polys += list(inject)
    counts = {"nrr": 0, 1: 0, -1: 0, 0: 0, "app": 0, "viol": 0}
    for free, sign, member in mapper(survey_sample, polys):
        if not free:
            continue
        counts["nrr"] += 1
        counts[sign] += 1
        counts["app"] += member
        counts["viol"] += (sign == 0) != member
    return SurveyReport(degree, len(polys), counts["nrr"], counts[1], counts[-1], counts[0], counts["app"], seed,
                        counts["viol"])
