"""Random corpora and closed-form versus oracle agreement runs.

Quintic sampling is biased: every case of the eleven-way split except the
generic one has measure zero, so each case gets a recipe that builds a
polynomial with the right remainder-sequence shape.  The shape (and with
it the case label) is invariant under ``t -> lam*t + s``, which is used to
spread a few seeds into many different inputs.
"""
from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .exactpoly import Poly
from .lowdeg import CubicCoeffs
from .quartic import QuarticNormal
from .quintic import QuinticCoeffs, quintic_cascade, quintic_case_label

F = Fraction


def rand_rational(rng: random.Random, lo: int = -50, hi: int = 50, max_den: int = 10) -> Fraction:
    return F(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_nonzero(rng: random.Random, lo: int = -50, hi: int = 50, max_den: int = 10) -> Fraction:
    while True:
        x = rand_rational(rng, lo, hi, max_den)
        if x:
            return x


def rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return F(n, d)
    return None


def linear_root(f: Callable[[Fraction], Fraction]) -> Optional[Fraction]:
    """Root of a function known to be affine in its argument."""
    f0 = f(F(0))
    slope = f(F(1)) - f0
    return None if slope == 0 else -f0 / slope


def quadratic_roots(f: Callable[[Fraction], Fraction]) -> list[Fraction]:
    """Rational roots of a function known to be quadratic in its argument."""
    c = f(F(0))
    p, m = f(F(1)), f(F(-1))
    a, b = (p + m) / 2 - c, (p - m) / 2
    if a == 0:
        return [-c / b] if b else []
    s = rational_sqrt(b * b - 4 * a * c)
    if s is None:
        return []
    return sorted({(-b + s) / (2 * a), (-b - s) / (2 * a)})


def affine_image(g: Poly, lam: Fraction, s: Fraction) -> Poly:
    """Monic ``g(lam*t + s) / lam**deg``."""
    h = g.shift(s)
    n = h.degree
    return Poly(tuple(c * lam ** (n - i) for i, c in enumerate(h.coeffs))).monic()


# ---------------------------------------------------------------- cubics

def cubic_corpus(n: int, seed: int) -> list[CubicCoeffs]:
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        p, q = rand_rational(rng), rand_rational(rng)
        r = F(rng.randint(1, 50), rng.randint(1, 10))
        out.append(CubicCoeffs(p, q, r))
    return out


# ---------------------------------------------------------------- quartics

def quartic_sample(rng: random.Random) -> QuarticNormal:
    """Mix of uniform triples, the two symmetry planes, and factored forms."""
    kind = rng.randrange(5)
    if kind == 0:
        return QuarticNormal(rand_rational(rng, -20, 20, 6), rand_rational(rng, -20, 20, 6), rand_rational(rng, -20, 20, 6))
    if kind == 1:
        # lift beta so that a fair share lands inside the cone
        a, g = rand_rational(rng, -12, 12, 4), rand_rational(rng, -12, 12, 4)
        return QuarticNormal(a, rand_rational(rng, -4, 60, 4), g)
    if kind == 2:
        a = rand_rational(rng, -12, 12, 4)
        return QuarticNormal(a, rand_rational(rng, -4, 40, 4), a if rng.random() < 0.5 else -a)
    if kind == 3:
        # (t^2 + u t + v)(t^2 + w t + 1/v): boundary and zero-discriminant points
        u, w = rand_rational(rng, -8, 8, 3), rand_rational(rng, -8, 8, 3)
        v = rand_nonzero(rng, -6, 6, 3)
        f = Poly.of(1, u, v) * Poly.of(1, w, 1 / v)
        return QuarticNormal(*f.coeffs[1:4])
    u = rand_rational(rng, -6, 6, 4)
    f = Poly.of(1, u, 1) ** 2
    return QuarticNormal(*f.coeffs[1:4])


def quartic_corpus(n: int, seed: int) -> list[QuarticNormal]:
    rng = random.Random(seed)
    return [quartic_sample(rng) for _ in range(n)]


# ---------------------------------------------------------------- quintics

def _depressed(b, c, d, e) -> Poly:
    return Poly.of(1, 0, b, c, d, e)


def _small(rng: random.Random, lo: int = -9, hi: int = 9, max_den: int = 3) -> Fraction:
    return rand_rational(rng, lo, hi, max_den)


def _small_nonzero(rng: random.Random, lo: int = -9, hi: int = 9, max_den: int = 3) -> Fraction:
    return rand_nonzero(rng, lo, hi, max_den)


def _case_of(g: Poly) -> str:
    return quintic_case_label(quintic_cascade(QuinticCoeffs(*g.coeffs[1:])))


def _seed_1(rng):
    return _depressed(0, 0, 0, _small(rng))


def _seed_2(rng):
    return _depressed(0, 0, _small_nonzero(rng), _small(rng))


def _seed_9i(rng):
    x0 = _small_nonzero(rng, -4, 4, 2)
    return _depressed(0, 0, -5 * x0 ** 4, 4 * x0 ** 5)


def _seed_3(rng):
    c, d = _small_nonzero(rng), _small(rng)
    e = linear_root(lambda e: quintic_cascade(QuinticCoeffs(0, 0, c, d, e)).d3bar)
    return None if e is None else _depressed(0, c, d, e)


def _seed_4(rng):
    return _depressed(0, _small_nonzero(rng), _small(rng), _small(rng))


def _seed_9ii(rng):
    r, w = _small_nonzero(rng, -4, 4, 2), _small(rng)
    return Poly.of(1, -r) ** 2 * Poly.of(1, 2 * r, 3 * r * r, w)


def _seed_10i(rng):
    if rng.random() < 0.5:
        u = _small_nonzero(rng, -4, 4, 2)
        return Poly.of(1, u, 3 * u * u / 2) ** 2 * Poly.of(1, -2 * u)
    k = _small_nonzero(rng, -4, 4, 2)
    return Poly.of(1, k) ** 3 * Poly.of(1, -3 * k, 6 * k * k)


def _seed_5(rng):
    b, c = _small_nonzero(rng), _small(rng)
    d = linear_root(lambda d: quintic_cascade(QuinticCoeffs(0, b, c, d, 0)).c3bar)
    if d is None:
        return None
    e = linear_root(lambda e: quintic_cascade(QuinticCoeffs(0, b, c, d, e)).d31bar)
    return None if e is None else _depressed(b, c, d, e)


def _seed_6(rng):
    b, c, e = _small_nonzero(rng), _small(rng), _small(rng)
    d = linear_root(lambda d: quintic_cascade(QuinticCoeffs(0, b, c, d, e)).c3bar)
    return None if d is None else _depressed(b, c, d, e)


def _seed_7(rng):
    # d4bar is quadratic in e once b, c, d are fixed
    b, c, d = (F(rng.randint(-12, 12)) for _ in range(3))
    if b == 0:
        return None
    roots = quadratic_roots(lambda e: quintic_cascade(QuinticCoeffs(0, b, c, d, e)).d4bar)
    return _depressed(b, c, d, rng.choice(roots)) if roots else None


def _seed_9iii(rng):
    # (x - al)**2 (x**3 + 2 al x**2 + q x + r); c3bar is quadratic in r
    al, q = F(rng.randint(-8, 8)), F(rng.randint(-8, 8))
    if al == 0:
        return None

    def build(r):
        return Poly.of(1, -al) ** 2 * Poly.of(1, 2 * al, q, r)

    roots = quadratic_roots(lambda r: quintic_cascade(QuinticCoeffs(*build(r).coeffs[1:])).c3bar)
    return build(rng.choice(roots)) if roots else None


def _seed_10ii(rng):
    if rng.random() < 0.5:
        u, v, w = _small(rng, -6, 6, 2), _small(rng, -6, 6, 2), _small(rng, -6, 6, 2)
        return Poly.of(1, u, v) ** 2 * Poly.of(1, -w)
    k, u, v = _small(rng, -4, 4, 2), _small(rng, -6, 6, 2), _small(rng, -6, 6, 2)
    return Poly.of(1, k) ** 3 * Poly.of(1, u, v)


def _seed_11(rng):
    x, y = _small(rng, -4, 4, 2), _small(rng, -4, 4, 2)
    if rng.random() < 0.5:
        return Poly.of(1, -x) ** 3 * Poly.of(1, -y) ** 2
    return Poly.of(1, -x) ** 4 * Poly.of(1, -y)


def _seed_8(rng):
    return Poly.of(1, *(_small(rng, -20, 20, 4) for _ in range(5)))


def _seed_9iv(rng):
    x = _small_nonzero(rng, -6, 6, 2)
    return Poly.of(1, -x) ** 2 * Poly.of(1, *(_small(rng, -9, 9, 2) for _ in range(3)))


QUINTIC_RECIPES: dict[str, Callable[[random.Random], Optional[Poly]]] = {
    "(1)": _seed_1, "(2)": _seed_2, "(3)": _seed_3, "(4)": _seed_4, "(5)": _seed_5,
    "(6)": _seed_6, "(7)": _seed_7, "(8)": _seed_8, "(9i)": _seed_9i, "(9ii)": _seed_9ii,
    "(9iii)": _seed_9iii, "(9iv)": _seed_9iv, "(10i)": _seed_10i, "(10ii)": _seed_10ii, "(11)": _seed_11,
}

# recipes that search for rational points are seeded once, then spread by affine maps
_SEARCHED = {"(7)", "(9iii)"}


def _seed_for(label: str, rng: random.Random, max_tries: int = 20000) -> Poly:
    make = QUINTIC_RECIPES[label]
    for _ in range(max_tries):
        g = make(rng)
        if g is not None and _case_of(g) == label:
            return g
    raise RuntimeError(f"no seed found for case {label}")


def _positive_affine_image(g: Poly, rng: random.Random) -> Optional[Poly]:
    """Random ``g(lam*t + s)`` scaled to monic with positive constant term."""
    for _ in range(50):
        lam = F(rng.choice((1, 1, 1, 2, 3)), rng.choice((1, 1, 2, 3))) * rng.choice((1, -1))
        s = _small(rng, -12, 12, 4)
        h = affine_image(g, lam, s)
        if h.constant > 0:
            return h
    return None


def quintic_sample(label: str, rng: random.Random, pool: Optional[dict] = None) -> QuinticCoeffs:
    """A quintic with ``e > 0`` whose cascade falls in ``label``."""
    while True:
        if pool is not None and label in _SEARCHED:
            seeds = pool.setdefault(label, [])
            if len(seeds) < 12:
                seeds.append(_seed_for(label, rng))
            g = rng.choice(seeds)
        else:
            g = _seed_for(label, rng)
        h = _positive_affine_image(g, rng)
        if h is not None:
            return QuinticCoeffs(*h.coeffs[1:])


def uniform_quintic(rng: random.Random) -> QuinticCoeffs:
    coeffs = [rand_rational(rng, -20, 20, 4) for _ in range(4)]
    return QuinticCoeffs(*coeffs, F(rng.randint(1, 20), rng.randint(1, 4)))


def quintic_corpus(n: int, seed: int, uniform_share: float = 0.3) -> list[QuinticCoeffs]:
    """Deterministic biased corpus: ``uniform_share`` plain samples, the rest
    cycled over all fifteen case labels."""
    rng = random.Random(seed)
    labels = list(QUINTIC_RECIPES)
    pool: dict = {}
    out = []
    n_uniform = int(n * uniform_share)
    for i in range(n - n_uniform):
        out.append(quintic_sample(labels[i % len(labels)], rng, pool))
    out += [uniform_quintic(rng) for _ in range(n_uniform)]
    rng.shuffle(out)
    return out


# ---------------------------------------------------------------- agreement

@dataclass
class AgreementReport:
    """Outcome of a closed-form versus oracle run."""

    total: int = 0
    mismatches: list = field(default_factory=list)
    cases: Counter = field(default_factory=Counter)
    notes: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def record(self, case: str, agrees: bool, detail=None) -> None:
        self.total += 1
        self.cases[case] += 1
        if not agrees:
            self.mismatches.append((case, detail))


def iter_chunks(items: list, size: int) -> Iterator[list]:
    for i in range(0, len(items), size):
        yield items[i:i + size]
