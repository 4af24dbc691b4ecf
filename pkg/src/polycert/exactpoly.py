"""Exact rational scalars and dense univariate polynomials.

Coefficients are :class:`fractions.Fraction` throughout and are stored in
descending degree order, so ``Poly.of(1, 0, -2)`` is ``t**2 - 2``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class ZeroPolynomialError(ValueError):
    """Raised when an operation needs a nonzero polynomial."""


class ConstantPolynomialError(ValueError):
    """Raised when an operation needs degree >= 1."""


def to_rational(x: RationalLike) -> Fraction:
    """Coerce ``x`` to a Fraction; strings must look like ``n`` or ``n/d``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Poly:
    """Dense polynomial over Q, highest degree coefficient first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cs = tuple(to_rational(c) for c in self.coeffs)
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        object.__setattr__(self, "coeffs", cs[i:])

    @classmethod
    def of(cls, *coeffs: RationalLike) -> "Poly":
        return cls(tuple(coeffs))

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse ``"1,-1,0,0,-1,1"`` (descending degree, ``n`` or ``n/d``)."""
        parts = text.split(",")
        if not text.strip():
            raise ValueError("empty coefficient list")
        return cls(tuple(parse_rational(p) for p in parts))

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> "Poly":
        return cls((to_rational(coeff),) + (Fraction(0),) * degree)

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike]) -> "Poly":
        out = cls.of(1)
        for r in roots:
            out = out * cls.of(1, -to_rational(r))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[0]

    @property
    def constant(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, t: RationalLike) -> Fraction:
        return poly_eval(self, to_rational(t))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = (Fraction(0),) * (n - len(a)) + a
        b = (Fraction(0),) * (n - len(b)) + b
        return Poly(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: Union["Poly", Fraction, int]) -> "Poly":
        if not isinstance(other, Poly):
            k = to_rational(other)
            return Poly(tuple(c * k for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly.of(1)
        for _ in range(k):
            out = out * self
        return out

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no monic form")
        return self * (1 / self.lc)

    def shift(self, s: RationalLike) -> "Poly":
        """Return ``p(t + s)``."""
        s = to_rational(s)
        out = Poly(())
        step = Poly.of(1, s)
        for c in self.coeffs:
            out = out * step + Poly.of(c)
        return out

    def reflect(self) -> "Poly":
        """Return ``p(-t)``."""
        n = self.degree
        return Poly(tuple(c if (n - i) % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def integer_coeffs(self) -> tuple[int, ...]:
        """Primitive integer multiple of ``self`` by a *positive* factor."""
        return primitive_ints(self.coeffs)

    def __str__(self) -> str:
        return ",".join(format_rational(c) for c in self.coeffs) or "0"

    def __repr__(self) -> str:
        return f"Poly({self})"


def primitive_ints(coeffs: Sequence[Fraction]) -> tuple[int, ...]:
    if not coeffs:
        return ()
    lcm = reduce(lambda x, y: x * y // math.gcd(x, y), (c.denominator for c in coeffs), 1)
    ints = [c.numerator * (lcm // c.denominator) for c in coeffs]
    g = reduce(math.gcd, ints, 0)
    return tuple(i // g for i in ints)


def poly_eval(p: Poly, t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in p.coeffs:
        acc = acc * t + c
    return acc


def poly_derivative(p: Poly) -> Poly:
    n = p.degree
    return Poly(tuple(c * (n - i) for i, c in enumerate(p.coeffs[:-1])))


def poly_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    dn = den.degree
    if num.degree < dn:
        return Poly(()), num
    inv = 1 / den.lc
    quot = []
    for i in range(len(rem) - dn):
        q = rem[i] * inv
        quot.append(q)
        if q:
            for j, c in enumerate(den.coeffs):
                rem[i + j] -= q * c
    return Poly(tuple(quot)), Poly(tuple(rem[len(rem) - dn:]) if dn > 0 else ())


def poly_rem(num: Poly, den: Poly) -> Poly:
    return poly_divmod(num, den)[1]


def exact_quotient(num: Poly, den: Poly) -> Poly:
    """Divide, raising ``ValueError`` if ``den`` does not divide ``num``."""
    q, r = poly_divmod(num, den)
    if not r.is_zero():
        raise ValueError(f"{den} does not divide {num} (remainder {r})")
    return q


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd; ``gcd(p, 0)`` is ``monic(p)``."""
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomialError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, poly_rem(a, b)
        if not b.is_zero():
            b = b.monic()
    return a.monic()


def squarefree_part(p: Poly) -> Poly:
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial has no square-free part")
    if p.degree < 1:
        return Poly.of(1)
    return exact_quotient(p, poly_gcd(p, poly_derivative(p))).monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic ``p`` equals the product of ``f**k`` over the result.

    Factors are monic, square-free, pairwise coprime and nonconstant; the
    leading coefficient of ``p`` is dropped.
    """
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial has no square-free decomposition")
    if p.degree < 1:
        return []
    dp = poly_derivative(p)
    a = poly_gcd(p, dp)
    b = exact_quotient(p, a)
    c = exact_quotient(dp, a)
    d = c - poly_derivative(b)
    out: list[tuple[Poly, int]] = []
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if not d.is_zero() else b.monic()
        if a.degree > 0:
            out.append((a.monic(), k))
        b = exact_quotient(b, a)
        c = exact_quotient(d, a)
        d = c - poly_derivative(b)
        k += 1
    return out


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination on an integer matrix."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(f) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(g) + [0] * (size - n - 1 - i))
    return rows


def resultant(p: Poly, q: Poly) -> Fraction:
    """Exact resultant via the Sylvester determinant (Bareiss elimination)."""
    if p.is_zero() or q.is_zero():
        return Fraction(0)
    if p.degree == 0 and q.degree == 0:
        return Fraction(1)
    lp = _denominator_lcm(p.coeffs)
    lq = _denominator_lcm(q.coeffs)
    fi = [int(c * lp) for c in p.coeffs]
    gi = [int(c * lq) for c in q.coeffs]
    det = _bareiss_det(sylvester_matrix(fi, gi))
    # Res(lp*p, lq*q) = lp**deg(q) * lq**deg(p) * Res(p, q)
    return Fraction(det, lp ** q.degree * lq ** p.degree)


def _denominator_lcm(coeffs: Sequence[Fraction]) -> int:
    return reduce(lambda x, y: x * y // math.gcd(x, y), (c.denominator for c in coeffs), 1)


def discriminant(p: Poly) -> Fraction:
    m = p.degree
    if m < 2:
        raise ValueError("discriminant needs degree >= 2")
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    return sign * resultant(p, poly_derivative(p)) / p.lc
