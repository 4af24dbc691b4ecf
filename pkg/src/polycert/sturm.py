"""Sturm chains, real root counting/isolation, and the classification oracle.

The oracle never consults the closed-form theorems: it isolates the real
roots of the square-free part, reads multiplicities from Yun's
decomposition and samples one point per sign-constant gap.

Hot loops work on primitive integer coefficient tuples.  Scaling a
polynomial by a positive constant never changes a sign, so every chain
entry past ``g'`` is kept primitive to stop coefficient growth.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence, Union

from .exactpoly import (
    ConstantPolynomialError,
    Poly,
    ZeroPolynomialError,
    poly_derivative,
    primitive_ints,
    squarefree_decomposition,
    squarefree_part,
    to_rational,
)
from .types import Classification, Region, ZeroLocation

IntPoly = tuple[int, ...]


class Infinity(enum.Enum):
    MINUS = -1
    PLUS = 1


MINUS_INFINITY = Infinity.MINUS
PLUS_INFINITY = Infinity.PLUS
EvalPoint = Union[Fraction, int, Infinity]


# ---------------------------------------------------------------------------
# integer kernels


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def isign_at(p: IntPoly, x: Fraction) -> int:
    """Sign of ``p(x)`` from the homogenised integer form ``d**deg * p(n/d)``."""
    n, d = x.numerator, x.denominator
    if d == 1:
        acc = 0
        for c in p:
            acc = acc * n + c
        return _sign(acc)
    return _sign(_homogeneous(p, n, d))


def _homogeneous(p: IntPoly, n: int, d: int) -> int:
    k = len(p) - 1
    acc = 0
    dpow = [1] * (k + 1)
    for i in range(1, k + 1):
        dpow[i] = dpow[i - 1] * d
    for i, c in enumerate(p):
        acc = acc * n + c * dpow[i]
    return acc


def isign_at_infinity(p: IntPoly, which: Infinity) -> int:
    if not p:
        return 0
    s = _sign(p[0])
    if which is Infinity.MINUS and (len(p) - 1) % 2:
        s = -s
    return s


def _strip(p: list[int]) -> list[int]:
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return p[i:]


def _primitive(p: Sequence[int]) -> IntPoly:
    g = reduce(math.gcd, p, 0)
    if g <= 1:
        return tuple(p)
    return tuple(c // g for c in p)


def _positive_prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """A positive multiple of ``rem(a, b)`` computed without fractions."""
    r = list(a)
    lb = b[0]
    alb, sb = abs(lb), _sign(lb)
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        lr = r[0]
        shift = len(r) - 1 - db
        r = [alb * c for c in r]
        for j, c in enumerate(b):
            r[j] -= sb * lr * c
        r = _strip(r)
        if shift == 0:
            break
    return tuple(r)


def _int_derivative(p: IntPoly) -> IntPoly:
    k = len(p) - 1
    return tuple(c * (k - i) for i, c in enumerate(p[:-1]))


def int_sturm_chain(p: IntPoly) -> list[IntPoly]:
    chain = [p, _primitive(_int_derivative(p))]
    while True:
        r = _positive_prem(chain[-2], chain[-1])
        if not r:
            return chain
        chain.append(_primitive(tuple(-c for c in r)))


def _variations(signs) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _chain_var(chain: Sequence[IntPoly], x: EvalPoint) -> int:
    if isinstance(x, Infinity):
        return _variations(isign_at_infinity(p, x) for p in chain)
    x = Fraction(x)
    return _variations(isign_at(p, x) for p in chain)


def root_bound(p: IntPoly) -> int:
    """Integer strictly above the modulus of every complex root."""
    lead = abs(p[0])
    top = max((abs(c) for c in p[1:]), default=0)
    return 2 + -(-top // lead)


# ---------------------------------------------------------------------------
# public chain API


@dataclass(frozen=True)
class SturmChain:
    """``g, g', -rem(g, g'), ...`` up to the last nonzero entry."""

    polys: tuple[Poly, ...]
    _ints: tuple[IntPoly, ...] = field(repr=False, compare=False, default=())

    @property
    def terminal(self) -> Poly:
        return self.polys[-1]

    def __len__(self) -> int:
        return len(self.polys)


def sturm_chain(g: Poly) -> SturmChain:
    if g.is_zero():
        raise ZeroPolynomialError("Sturm chain of the zero polynomial")
    if g.degree < 1:
        raise ConstantPolynomialError("Sturm chain needs degree >= 1")
    ints = int_sturm_chain(g.integer_coeffs())
    polys = (g, poly_derivative(g)) + tuple(Poly(tuple(map(Fraction, p))) for p in ints[2:])
    return SturmChain(polys, tuple(ints))


def variations_at(chain: SturmChain, x: EvalPoint) -> int:
    ints = chain._ints or tuple(p.integer_coeffs() for p in chain.polys)
    return _chain_var(ints, x)


def _less(a: EvalPoint, b: EvalPoint) -> bool:
    def key(x):
        if isinstance(x, Infinity):
            return (x.value, Fraction(0))
        return (0, Fraction(x))

    return key(a) < key(b)


class _SquarefreeRoots:
    """Root machinery for one polynomial: square-free part plus its chain."""

    def __init__(self, g: Poly):
        if g.is_zero():
            raise ZeroPolynomialError("root machinery needs a nonzero polynomial")
        self.g = g
        self.gi = g.integer_coeffs()
        if g.degree < 1:
            self.s: Optional[Poly] = None
            self.si: IntPoly = ()
            self.chain: list[IntPoly] = []
            return
        self.s = squarefree_part(g)
        self.si = self.s.integer_coeffs()
        self.chain = int_sturm_chain(self.si) if len(self.si) > 1 else [self.si]

    def var(self, x: EvalPoint) -> int:
        return _chain_var(self.chain, x)

    def count(self, lo: EvalPoint, hi: EvalPoint) -> int:
        if self.s is None:
            return 0
        return self.var(lo) - self.var(hi)

    def sign(self, x: Fraction) -> int:
        return isign_at(self.si, x)

    def isolate(self, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
        """Disjoint ``(lo, hi)`` pairs, one per root of ``s`` in ``(lo, hi]``.

        Exact roots come back as ``(x, x)``.
        """
        if self.s is None:
            return []
        out: list[tuple[Fraction, Fraction]] = []
        stack = [(lo, hi, self.var(lo), self.var(hi))]
        while stack:
            a, b, va, vb = stack.pop()
            n = va - vb
            if n <= 0:
                continue
            if n == 1:
                out.append(self._refine(a, b))
                continue
            m = (a + b) / 2
            vm = self.var(m)
            stack.append((m, b, vm, vb))
            stack.append((a, m, va, vm))
        out.sort()
        return out

    def _refine(self, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
        """Shrink ``(a, b]`` (one simple root) until the root is exact or isolated."""
        sb = self.sign(b)
        if sb == 0:
            return (b, b)
        lead = abs(self.si[0])
        width = Fraction(1, lead)
        while b - a >= width:
            m = (a + b) / 2
            sm = self.sign(m)
            if sm == 0:
                return (m, m)
            if sm == sb:
                b = m
            else:
                a = m
        # a rational root of a primitive integer polynomial is k/lead
        k = math.floor(b * lead)
        x = Fraction(k, lead)
        if a < x <= b and self.sign(x) == 0:
            return (x, x)
        return (a, b)


def count_roots(g: Poly, lo: EvalPoint, hi: EvalPoint) -> int:
    """Number of distinct real roots of ``g`` in ``(lo, hi]``."""
    if not _less(lo, hi):
        raise ValueError("count_roots needs lo < hi")
    return _SquarefreeRoots(g).count(lo, hi)


def _multiplicities(g: Poly, locs: list[tuple[Fraction, Fraction]]) -> list[int]:
    factors = squarefree_decomposition(g)
    if len(factors) == 1:
        return [factors[0][1]] * len(locs)
    out = []
    for lo, hi in locs:
        for f, k in factors:
            if lo == hi:
                hit = f(lo) == 0
            else:
                hit = _SquarefreeRoots(f).count(lo, hi) > 0
            if hit:
                out.append(k)
                break
        else:  # pragma: no cover - every root of s divides some factor
            raise AssertionError("root not found in square-free decomposition")
    return out


def isolate_roots(g: Poly, lo: Fraction, hi: Fraction) -> list[ZeroLocation]:
    """One location per distinct real root in ``(lo, hi]``, ascending."""
    lo, hi = to_rational(lo), to_rational(hi)
    if lo >= hi:
        raise ValueError("isolate_roots needs lo < hi")
    roots = _SquarefreeRoots(g)
    return _locations(roots, roots.isolate(lo, hi))


def _locations(roots: _SquarefreeRoots, locs) -> list[ZeroLocation]:
    if not locs:
        return []
    mults = _multiplicities(roots.g, locs)
    return [ZeroLocation(a, b, k) for (a, b), k in zip(locs, mults)]


# ---------------------------------------------------------------------------
# oracle


def _region_locations(roots: _SquarefreeRoots, region: Region) -> list[tuple[Fraction, Fraction]]:
    if roots.s is None:
        return []
    bound = Fraction(root_bound(roots.si))
    if region is Region.HALF_LINE:
        locs = roots.isolate(Fraction(0), bound)
        if roots.sign(Fraction(0)) == 0:
            locs.insert(0, (Fraction(0), Fraction(0)))
        return locs
    return roots.isolate(-bound, bound)


def _gap_point(roots: _SquarefreeRoots, left: tuple[Fraction, Fraction], right: tuple[Fraction, Fraction]) -> Fraction:
    """A rational strictly between two adjacent distinct roots."""
    L, R = left[1], right[0]
    if L < R:
        return (L + R) / 2
    left_exact = left[0] == left[1]
    right_exact = right[0] == right[1]
    if not left_exact and not right_exact:
        return L
    if left_exact:
        x, hi = L, right[1]
        shi = roots.sign(hi)
        while True:
            m = (x + hi) / 2
            sm = roots.sign(m)
            if sm == 0:
                return (x + m) / 2
            if sm == shi:
                hi = m
            else:
                return m
    y, lo = R, left[0]
    slo = roots.sign(lo)
    while True:
        m = (lo + y) / 2
        sm = roots.sign(m)
        if sm == 0:
            return (m + y) / 2
        if sm == slo:
            lo = m
        else:
            return m


def _sample_points(roots: _SquarefreeRoots, region: Region, locs) -> list[Fraction]:
    pts = [Fraction(0), Fraction(1)]
    bound = Fraction(root_bound(roots.gi)) if roots.s is not None else Fraction(1)
    if region is Region.REAL_LINE:
        pts.append(-bound)
    for left, right in zip(locs, locs[1:]):
        pts.append(_gap_point(roots, left, right))
    pts.append(bound)
    return pts


def _negative_point(roots: _SquarefreeRoots, region: Region, locs) -> Optional[Fraction]:
    for x in _sample_points(roots, region, locs):
        if region is Region.HALF_LINE and x < 0:
            continue
        if isign_at(roots.gi, x) < 0:
            return x
    return None


def real_zeros(g: Poly, region: Region) -> tuple[ZeroLocation, ...]:
    """Distinct real roots of ``g`` in the region, with multiplicities."""
    roots = _SquarefreeRoots(g)
    return tuple(_locations(roots, _region_locations(roots, region)))


def negative_point(g: Poly, region: Region) -> Optional[Fraction]:
    """A rational in the region where ``g`` is negative, or ``None``."""
    roots = _SquarefreeRoots(g)
    return _negative_point(roots, region, _region_locations(roots, region))


def oracle_classify(g: Poly, region: Region) -> Classification:
    if g.is_zero():
        raise ZeroPolynomialError("cannot classify the zero polynomial")
    roots = _SquarefreeRoots(g)
    locs = _region_locations(roots, region)
    w = _negative_point(roots, region, locs)
    if w is not None:
        return Classification.indefinite(w)
    return Classification.with_zeros(_locations(roots, locs))
