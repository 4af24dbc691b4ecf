"""Positivity of ``t**5 + a t**4 + b t**3 + c t**2 + d t + e`` on [0, inf).

The Sturm chain of a quintic is tracked symbolically through a cascade of
fifteen coefficients; which of them vanish selects one of eleven cases.
Cases (1)-(8) decide strict positivity from signs alone.  Cases (9)-(11)
mean ``g`` has a multiple root, and ``g`` is reduced to a smaller problem
by exact division against the recovered gcd factor.

Two of the published cascade formulas are not homogeneous in the
coefficients and disagree with the chain they are derived from; the
versions below are the ones that reproduce the chain (see
``tests/test_quintic.py`` for the symbolic check).
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from .exactpoly import Poly, exact_quotient, poly_derivative, poly_gcd, to_rational
from .lowdeg import CubicCoeffs, QuadraticCoeffs, classify_cubic_halfline, classify_quadratic, witness_for
from .sturm import real_zeros
from .types import Certificate, Classification, Region, Verdict, ZeroLocation

HALF = Region.HALF_LINE


@dataclass(frozen=True)
class QuinticCoeffs:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def __post_init__(self) -> None:
        for name in "abcde":
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    @classmethod
    def from_poly(cls, g: Poly) -> "QuinticCoeffs":
        if g.degree != 5:
            raise ValueError(f"expected a quintic, got degree {g.degree}")
        m = g.monic()
        return cls(*m.coeffs[1:])

    def poly(self) -> Poly:
        return Poly.of(1, self.a, self.b, self.c, self.d, self.e)


@dataclass(frozen=True)
class QuinticCascade:
    b2: Fraction
    c2: Fraction
    d2: Fraction
    e2: Fraction
    e3bar: Fraction
    d3bar: Fraction
    e31bar: Fraction
    e4bar: Fraction
    c3bar: Fraction
    d31bar: Fraction
    e32bar: Fraction
    e41bar: Fraction
    d4bar: Fraction
    e42bar: Fraction
    e5bar: Fraction

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class QuinticCase:
    label: str
    branch: Optional[str] = None

    def __str__(self) -> str:
        return self.label + (self.branch or "")


MAIN_LABELS = ("(1)", "(2)", "(3)", "(4)", "(5)", "(6)", "(7)", "(8)", "(9)", "(10)", "(11)")


def main_label(label: str) -> str:
    """``"(9iii)"`` -> ``"(9)"``."""
    return "(" + label.strip("()").rstrip("iv") + ")"


def quintic_cascade(q: QuinticCoeffs) -> QuinticCascade:
    a, b, c, d, e = q.a, q.b, q.c, q.d, q.e
    b2 = (4 * a * a - 10 * b) / 25
    c2 = (3 * a * b - 15 * c) / 25
    d2 = (2 * a * c - 20 * d) / 25
    e2 = (a * d - 25 * e) / 25
    # the published form ends in -d*d2**4, which is not homogeneous
    e3 = -125 * e2 ** 4 + 100 * a * e2 ** 3 * d2 - 30 * a * a * e2 ** 2 * d2 ** 2 + 4 * a ** 3 * e2 * d2 ** 3 - 25 * d * d2 ** 4
    d3 = (-10 * c * c2 ** 4 + 20 * a * e2 * c2 ** 3 - 25 * c2 ** 2 * d2 * e2 + 6 * a * a * c2 ** 3 * d2
          - 5 * (5 * e2 + 4 * a * d2) * c2 ** 2 * d2 + 25 * c2 * d2 ** 3)
    e31 = -5 * c2 ** 4 * d + 6 * a * a * c2 ** 3 * e2 - 5 * (5 * e2 + 4 * a * d2) * c2 ** 2 * e2 + 25 * c2 * d2 ** 2 * e2
    e4 = d2 * d3 * e31 - c2 * e31 ** 2 - e2 * d3 ** 2
    # published as -3b*b2 + (5d2+4a*c2)*b2 - 5*c2*e2; this is the chain's value
    c3 = -3 * b * b2 ** 2 + (5 * d2 + 4 * a * c2) * b2 - 5 * c2 ** 2
    d31 = -2 * c * b2 ** 2 + (5 * e2 + 4 * a * d2) * b2 - 5 * c2 * d2
    e32 = -d * b2 ** 2 + 4 * a * e2 * b2 - 5 * c2 * e2
    e41 = b2 * d31 * e32 ** 3 - c2 * d31 ** 2 * e32 ** 2 + d2 * d31 ** 3 * e32 - e2 * d31 ** 4
    d4 = -c3 ** 2 * d2 + b2 * c3 * e32 + c2 * c3 * d31 - b2 * d31 ** 2
    e42 = -c3 ** 2 * e2 + c2 * c3 * e32 - b2 * d31 * e32
    e5 = -c3 * e42 ** 2 + d31 * e42 * d4 - e32 * d4 ** 2
    return QuinticCascade(b2, c2, d2, e2, e3, d3, e31, e4, c3, d31, e32, e41, d4, e42, e5)


def quintic_case_label(k: QuinticCascade) -> str:
    """Vanishing pattern of the cascade -> case label; a partition of all inputs."""
    if k.b2 == 0:
        if k.c2 == 0:
            if k.d2 == 0:
                return "(1)"
            return "(2)" if k.e3bar != 0 else "(9i)"
        if k.d3bar == 0:
            return "(3)" if k.e31bar != 0 else "(10i)"
        return "(4)" if k.e4bar != 0 else "(9ii)"
    if k.c3bar == 0:
        if k.d31bar == 0:
            return "(5)" if k.e32bar != 0 else "(11)"
        return "(6)" if k.e41bar != 0 else "(9iii)"
    if k.d4bar == 0:
        return "(7)" if k.e42bar != 0 else "(10ii)"
    return "(8)" if k.e5bar != 0 else "(9iv)"


def _three_term(top, lead, d, e2) -> Optional[str]:
    """Shared form of cases (2), (3) and (5): chain ``g, g', g2, const``."""
    if top > 0 and lead >= 0 and d >= 0 and e2 >= 0:
        return "(i)"
    if top < 0 and (d >= 0 or not e2 > 0):
        return "(ii)"
    if top > 0 and lead < 0:
        return "(iii)"
    return None


def _four_term(top, lead, mid, d, e2, e_mid) -> Optional[str]:
    """Shared form of cases (4), (6) and (7).

    ``top`` is the last chain entry, ``lead``/``mid`` the leading
    coefficients of ``g2``/``g3`` and ``e_mid`` the constant term of ``g3``.
    """
    if top > 0 and lead >= 0 and mid >= 0 and d >= 0 and e2 >= 0 and e_mid >= 0:
        return "(i)"
    if (top < 0 and (lead >= 0 or not mid > 0) and (d >= 0 or not max(e2, e_mid) > 0)
            and (e2 >= 0 or not e_mid > 0)):
        return "(ii)"
    if top > 0 and min(lead, mid) < 0 and min(d, e2, e_mid) < 0 and (d >= 0 or not e2 > 0):
        return "(iii)"
    if top < 0 and mid > 0 and lead < 0:
        return "(iv)"
    return None


def _five_term(k: QuinticCascade, d: Fraction) -> Optional[str]:
    b2, c3, d4, e42, e2, e32, e5 = k.b2, k.c3bar, k.d4bar, k.e42bar, k.e2, k.e32bar, k.e5bar
    if e5 > 0 and b2 >= 0 and c3 >= 0 and d4 >= 0 and e42 >= 0 and d >= 0 and e2 >= 0 and e32 >= 0:
        return "(i)"
    if (e5 < 0 and (b2 >= 0 or not max(c3, d4) > 0) and (c3 >= 0 or not d4 > 0)
            and (d >= 0 or not max(e2, e32, e42) > 0) and (e2 >= 0 or not max(e32, e42) > 0)
            and (e32 >= 0 or not e42 > 0)):
        return "(ii)"
    if (e5 > 0 and min(b2, c3, d4) < 0 and (b2 >= 0 or not c3 > 0) and min(d, e2, e32, e42) < 0
            and (d >= 0 or not max(e2, e32) > 0) and (e2 >= 0 or not e32 > 0)):
        return "(iii)"
    if (e5 < 0 and min(b2, c3) < 0 and max(c3, d4) > 0 and min(d, e2, e32) < 0
            and max(e2, e32, e42) > 0 and (d >= 0 or not e2 > 0)):
        return "(iv)"
    if e5 > 0 and d4 < 0 and c3 > 0 and b2 < 0:
        return "(v)"
    return None


def theorem_branch(label: str, k: QuinticCascade, q: QuinticCoeffs) -> Optional[str]:
    """The enumerated sub-branch (i)-(v) of a sign-only case, or ``None``.

    These enumerations are meant to spell out ``V(0) == V(inf)``.  For
    case (8) they miss some patterns with two variations at both ends
    (e.g. ``S(inf) = (+,+,-,-,+,+)``, ``S(0) = (+,+,-,+,+,+)``), so the
    verdict is taken from :func:`sign_vectors` and this label is kept
    for the certificate only.
    """
    d = q.d
    if label == "(1)":
        return ""
    if label == "(2)":
        # d2 > 0 and d2 >= 0 coincide since d2 != 0 here
        return _three_term(k.e3bar, k.d2, d, k.e2)
    if label == "(3)":
        return _three_term(k.e31bar, k.c2, d, k.e2)
    if label == "(4)":
        return _four_term(k.e4bar, k.c2, k.d3bar, d, k.e2, k.e31bar)
    if label == "(5)":
        return _three_term(k.e32bar, k.b2, d, k.e2)
    if label == "(6)":
        return _four_term(k.e41bar, k.b2, k.d31bar, d, k.e2, k.e32bar)
    if label == "(7)":
        return _four_term(k.e42bar, k.b2, k.c3bar, d, k.e2, k.e32bar)
    if label == "(8)":
        return _five_term(k, d)
    raise ValueError(f"{label} is not a sign-only case")


def sign_vectors(label: str, k: QuinticCascade, q: QuinticCoeffs) -> tuple[tuple, tuple]:
    """``(S(inf), S(0))`` of a sign-only case, with barred stand-ins."""
    e, d, e2 = q.e, q.d, k.e2
    one = Fraction(1)
    if label == "(2)":
        return (one, one, k.d2, k.e3bar), (e, d, e2, k.e3bar)
    if label == "(3)":
        return (one, one, k.c2, k.e31bar), (e, d, e2, k.e31bar)
    if label == "(4)":
        return (one, one, k.c2, k.d3bar, k.e4bar), (e, d, e2, k.e31bar, k.e4bar)
    if label == "(5)":
        return (one, one, k.b2, k.e32bar), (e, d, e2, k.e32bar)
    if label == "(6)":
        return (one, one, k.b2, k.d31bar, k.e41bar), (e, d, e2, k.e32bar, k.e41bar)
    if label == "(7)":
        return (one, one, k.b2, k.c3bar, k.e42bar), (e, d, e2, k.e32bar, k.e42bar)
    if label == "(8)":
        return (one, one, k.b2, k.c3bar, k.d4bar, k.e5bar), (e, d, e2, k.e32bar, k.e42bar, k.e5bar)
    raise ValueError(f"{label} is not a sign-only case")


def sign_variations(values) -> int:
    signs = [v for v in values if v != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if (x > 0) != (y > 0))


def _values(q: QuinticCoeffs, k: QuinticCascade) -> dict:
    out = {"a": q.a, "b": q.b, "c": q.c, "d": q.d, "e": q.e}
    out.update(k.as_dict())
    return out


def _with_cofactor(g: Poly, alpha: Fraction, h_cls: Classification) -> Classification:
    """Lift a cofactor verdict through ``g = (t - alpha)**2 * h``."""
    if h_cls.verdict is Verdict.INDEFINITE:
        return Classification.indefinite(witness_for(g, HALF))
    zeros = list(h_cls.zeros)
    if alpha > 0:
        zeros.append(ZeroLocation.at(alpha, 2))
    return Classification.with_zeros(zeros)


def _check_gcd(g: Poly, factor: Poly) -> None:
    if poly_gcd(g, poly_derivative(g)) != factor.monic():
        raise ValueError(f"{factor} is not gcd(g, g') for g = {g}")


def multiple_root_reduce_linear(q: QuinticCoeffs, alpha) -> CubicCoeffs:
    """Cofactor ``h`` of ``g = (t - alpha)**2 * h``, by exact division."""
    alpha = to_rational(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    h = exact_quotient(q.poly(), Poly.of(1, -alpha) ** 2)
    return CubicCoeffs(*h.coeffs[1:])


def _reduce_linear(q: QuinticCoeffs, alpha: Fraction) -> tuple[Classification, Certificate]:
    g = q.poly()
    h = multiple_root_reduce_linear(q, alpha)
    # the closed-form coefficient formulas, kept for comparison only
    p_formula = q.a + 2 * alpha
    values = {"alpha": alpha, "p": h.p, "q": h.q, "r": h.r,
              "p_formula_agrees": p_formula == h.p, "r_formula_agrees": q.e / alpha ** 2 == h.r}
    h_cls, h_cert = classify_cubic_halfline(h)
    return _with_cofactor(g, alpha, h_cls), Certificate("double-root", "alpha>0" if alpha > 0 else "alpha<0", values, (h_cert,))


def multiple_root_reduce_quadratic(q: QuinticCoeffs, u, v) -> tuple[Classification, Certificate]:
    """``gcd(g, g') = t**2 + u t + v``: double pair or triple root."""
    u, v = to_rational(u), to_rational(v)
    g = q.poly()
    phi = Poly.of(1, u, v)
    _check_gcd(g, phi)
    values = {"u": u, "v": v, "u^2-4v": u * u - 4 * v}
    if u * u != 4 * v:
        # g = phi**2 (t - gamma) with gamma < 0: nonnegative, zero where phi is
        phi_cls, phi_cert = classify_quadratic(QuadraticCoeffs(u, v), HALF)
        zeros = [ZeroLocation(z.lo, z.hi, 2) for z in real_zeros(phi, HALF)]
        return Classification.with_zeros(zeros), Certificate("double-pair", "u^2!=4v", values, (phi_cert,))
    if u == 0:
        raise ValueError("u = 0 forces e = 0")
    psi = exact_quotient(g, Poly.of(1, u / 2) ** 3)
    u_hat, v_hat = psi.coeffs[1], psi.coeffs[2]
    values.update({"u_hat": u_hat, "v_hat": v_hat,
                   "u_hat_formula_agrees": u_hat == q.a - 3 * u / 2, "v_hat_formula_agrees": v_hat == 8 * q.e / u ** 3})
    psi_cls, psi_cert = classify_quadratic(QuadraticCoeffs(u_hat, v_hat), HALF)
    if u < 0:
        # -u/2 > 0 is a root of odd multiplicity
        return Classification.indefinite(witness_for(g, HALF)), Certificate("triple-root", "u<0", values, (psi_cert,))
    if psi_cls.verdict is Verdict.INDEFINITE:
        return Classification.indefinite(witness_for(g, HALF)), Certificate("triple-root", "u>0", values, (psi_cert,))
    return Classification.with_zeros(psi_cls.zeros), Certificate("triple-root", "u>0", values, (psi_cert,))


def multiple_root_reduce_cubic(q: QuinticCoeffs, p, qq, r) -> tuple[Classification, Certificate]:
    """``gcd(g, g') = t**3 + p t**2 + qq t + r``: always nonnegative on [0, inf)."""
    p, qq, r = to_rational(p), to_rational(qq), to_rational(r)
    g = q.poly()
    h = Poly.of(1, p, qq, r)
    _check_gcd(g, h)
    values = {"p": p, "q": qq, "r": r}
    if qq == p * p / 3 and r == p ** 3 / 27:
        # g = (t + p/3)**4 (t - gamma)
        if p > 0:
            return Classification.positive(), Certificate("quadruple-root", "(i)", values)
        return Classification.with_zeros([ZeroLocation.at(-p / 3, 4)]), Certificate("quadruple-root", "p<0", values)
    # g = (t - alpha)**3 (t + beta)**2 with alpha < 0 and beta = r / alpha**2
    lin = poly_gcd(h, poly_derivative(h))
    alpha = -lin.constant
    beta = r / alpha ** 2
    values.update({"alpha": alpha, "beta": beta})
    if r > 0:
        return Classification.positive(), Certificate("triple-double", "(ii)", values)
    return Classification.with_zeros([ZeroLocation.at(-beta, 2)]), Certificate("triple-double", "r<0", values)


def classify_quintic_halfline(q: QuinticCoeffs) -> tuple[Classification, Certificate]:
    if q.e <= 0:
        raise ValueError("classify_quintic_halfline needs e > 0")
    k = quintic_cascade(q)
    label = quintic_case_label(k)
    values = _values(q, k)
    g = q.poly()
    main = main_label(label)
    if main in MAIN_LABELS[:8]:
        branch = theorem_branch(label, k, q)
        if label == "(1)":
            strict = True
        else:
            at_inf, at_zero = sign_vectors(label, k, q)
            values["V(inf)"], values["V(0)"] = sign_variations(at_inf), sign_variations(at_zero)
            strict = values["V(inf)"] == values["V(0)"]
        values["branch"] = branch
        values["branch_agrees"] = (branch is not None) == strict
        if strict:
            return Classification.positive(), Certificate("quintic", label, values)
        return Classification.indefinite(witness_for(g, HALF)), Certificate("quintic", label, values)
    if main == "(9)":
        alpha = {
            "(9i)": lambda: -k.e2 / k.d2,
            "(9ii)": lambda: -k.e31bar / k.d3bar,
            "(9iii)": lambda: -k.e32bar / k.d31bar,
            "(9iv)": lambda: -k.e42bar / k.d4bar,
        }[label]()
        values["alpha"] = alpha
        cls, step = _reduce_linear(q, alpha)
    elif label == "(10i)":
        values["u"], values["v"] = k.d2 / k.c2, k.e2 / k.c2
        cls, step = multiple_root_reduce_quadratic(q, values["u"], values["v"])
    elif label == "(10ii)":
        values["u"], values["v"] = k.d31bar / k.c3bar, k.e32bar / k.c3bar
        cls, step = multiple_root_reduce_quadratic(q, values["u"], values["v"])
    else:
        values["p"], values["q"], values["r"] = k.c2 / k.b2, k.d2 / k.b2, k.e2 / k.b2
        cls, step = multiple_root_reduce_cubic(q, values["p"], values["q"], values["r"])
    return cls, Certificate("quintic", label, values, (step,))


def cascade_chain_pairs(k: QuinticCascade) -> list[tuple[int, int, str]]:
    """``(chain index, power of t, cascade field)`` for every chain coefficient
    the cascade predicts; absent chain entries count as zero."""
    pairs = [(2, 3, "b2"), (2, 2, "c2"), (2, 1, "d2"), (2, 0, "e2")]
    if k.b2 == 0:
        if k.c2 == 0:
            if k.d2 != 0:
                pairs.append((3, 0, "e3bar"))
            return pairs
        pairs += [(3, 1, "d3bar"), (3, 0, "e31bar")]
        if k.d3bar != 0:
            pairs.append((4, 0, "e4bar"))
        return pairs
    if k.c3bar == 0:
        pairs += [(3, 1, "d31bar"), (3, 0, "e32bar")]
        if k.d31bar != 0:
            pairs.append((4, 0, "e41bar"))
        return pairs
    pairs += [(3, 2, "c3bar"), (3, 1, "d31bar"), (3, 0, "e32bar"), (4, 1, "d4bar"), (4, 0, "e42bar")]
    if k.d4bar != 0:
        pairs.append((5, 0, "e5bar"))
    return pairs
