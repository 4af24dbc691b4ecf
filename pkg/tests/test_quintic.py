import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import positive_rationals, rationals
from polycert.audit import QUINTIC_RECIPES, quintic_sample
from polycert.dispatch import agrees
from polycert.exactpoly import Poly
from polycert.lowdeg import CubicCoeffs
from polycert.quintic import (
    MAIN_LABELS, QuinticCoeffs, cascade_chain_pairs, classify_quintic_halfline, main_label,
    multiple_root_reduce_cubic, multiple_root_reduce_linear, multiple_root_reduce_quadratic, quintic_cascade,
    quintic_case_label, sign_variations,
)
from polycert.sturm import oracle_classify, sturm_chain
from polycert.types import Region, Verdict, ZeroLocation

HALF = Region.HALF_LINE
ALL_LABELS = {"(1)", "(2)", "(3)", "(4)", "(5)", "(6)", "(7)", "(8)", "(9i)", "(9ii)", "(9iii)", "(9iv)",
              "(10i)", "(10ii)", "(11)"}


def q_of(g: Poly) -> QuinticCoeffs:
    return QuinticCoeffs.from_poly(g)


quintics = st.builds(QuinticCoeffs, rationals(9, 3), rationals(9, 3), rationals(9, 3), rationals(9, 3),
                     positive_rationals(9, 3))


class TestCascade:
    def test_binomial_collapses(self):
        k = quintic_cascade(QuinticCoeffs(5, 10, 10, 5, 1))
        assert k.b2 == k.c2 == k.d2 == k.e2 == 0

    def test_monomial_plus_one(self):
        k = quintic_cascade(QuinticCoeffs(0, 0, 0, 0, 1))
        assert (k.b2, k.c2, k.d2, k.e2) == (0, 0, 0, -1)

    def test_worked_example(self):
        k = quintic_cascade(QuinticCoeffs(-1, 0, 0, -1, 1))
        assert (k.b2, k.c2, k.d2, k.e2) == (F(4, 25), 0, F(4, 5), F(-24, 25))
        assert (k.c3bar, k.d31bar, k.e32bar) == (F(16, 25), F(-32, 25), F(16, 25))
        assert (k.d4bar, k.e42bar, k.e5bar) == (F(-8192, 15625), F(8192, 15625), 0)

    @given(quintics, positive_rationals(4, 3))
    def test_weighted_homogeneous(self, q, lam):
        # g(lam t)/lam^5 scales a..e by lam^-1..lam^-5; every cascade entry must scale by one fixed power
        k1 = quintic_cascade(q)
        k2 = quintic_cascade(QuinticCoeffs(q.a / lam, q.b / lam ** 2, q.c / lam ** 3, q.d / lam ** 4, q.e / lam ** 5))
        weights = {"b2": 2, "c2": 3, "d2": 4, "e2": 5, "e3bar": 20, "d3bar": 15, "e31bar": 16, "e4bar": 35,
                   "c3bar": 6, "d31bar": 7, "e32bar": 8, "e41bar": 33, "d4bar": 16, "e42bar": 17, "e5bar": 40}
        for name, w in weights.items():
            assert getattr(k2, name) == getattr(k1, name) / lam ** w, name

    @given(quintics)
    def test_chain_signs(self, q):
        k = quintic_cascade(q)
        chain = sturm_chain(q.poly()).polys
        for idx, power, name in cascade_chain_pairs(k):
            p = chain[idx] if idx < len(chain) else Poly(())
            c = p.coeffs[p.degree - power] if not p.is_zero() and power <= p.degree else 0
            v = getattr(k, name)
            assert (v > 0) - (v < 0) == (c > 0) - (c < 0), name


class TestSymbolic:
    """The two corrected cascade entries against a symbolic remainder sequence."""

    sp = pytest.importorskip("sympy")

    def _setup(self):
        sp = self.sp
        a, b, c, d, e, t = sp.symbols("a b c d e t")
        g = t ** 5 + a * t ** 4 + b * t ** 3 + c * t ** 2 + d * t + e
        g1 = sp.diff(g, t)
        g2 = -sp.rem(g, g1, t)
        b2, c2, d2, e2 = (4 * a ** 2 - 10 * b) / 25, (3 * a * b - 15 * c) / 25, (2 * a * c - 20 * d) / 25, (a * d - 25 * e) / 25
        return sp, (a, b, c, d, e, t), g1, g2, (b2, c2, d2, e2)

    def test_c3(self):
        sp, (a, b, c, d, e, t), g1, g2, (b2, c2, d2, e2) = self._setup()
        assert sp.simplify(g2 - (b2 * t ** 3 + c2 * t ** 2 + d2 * t + e2)) == 0
        lead = sp.Poly(-sp.rem(g1, g2, t), t).all_coeffs()[0]
        c3 = -3 * b * b2 ** 2 + (5 * d2 + 4 * a * c2) * b2 - 5 * c2 ** 2
        assert sp.simplify(lead - c3 / b2 ** 2) == 0
        published = -3 * b * b2 + (5 * d2 + 4 * a * c2) * b2 - 5 * c2 * e2
        assert sp.simplify(lead - published / b2 ** 2) != 0

    def test_e3(self):
        sp, (a, b, c, d, e, t), g1, g2, (b2, c2, d2, e2) = self._setup()
        s = {b: 2 * a ** 2 / 5, c: 2 * a ** 3 / 25}
        g3 = -sp.rem(g1.subs(s), sp.expand(g2.subs(s)), t)
        D2, E2 = d2.subs(s), e2.subs(s)
        head = -125 * E2 ** 4 + 100 * a * E2 ** 3 * D2 - 30 * a ** 2 * E2 ** 2 * D2 ** 2 + 4 * a ** 3 * E2 * D2 ** 3
        assert sp.simplify(g3 - (head - 25 * d * D2 ** 4) / (25 * D2 ** 4)) == 0
        assert sp.simplify(g3 - (head - d * D2 ** 4) / (25 * D2 ** 4)) != 0


class TestPartition:
    def test_main_label(self):
        assert main_label("(9iii)") == "(9)" and main_label("(10ii)") == "(10)" and main_label("(4)") == "(4)"

    def test_every_label_reachable(self):
        rng = random.Random(3)
        for label in QUINTIC_RECIPES:
            q = quintic_sample(label, rng)
            assert quintic_case_label(quintic_cascade(q)) == label

    @given(quintics)
    def test_total(self, q):
        assert quintic_case_label(quintic_cascade(q)) in ALL_LABELS

    @given(quintics, positive_rationals(4, 3), rationals(3, 2))
    def test_label_is_affine_invariant(self, q, lam, s):
        # the vanishing pattern depends only on the remainder degree sequence
        g = q.poly()
        h = Poly(tuple(c / lam ** 5 for c in _compose(g, lam, s).coeffs))
        k1, k2 = quintic_cascade(q), quintic_cascade(QuinticCoeffs(*h.coeffs[1:]))
        assert quintic_case_label(k1) == quintic_case_label(k2)


def _compose(g: Poly, lam, s) -> Poly:
    """g(lam t + s)."""
    out = Poly(())
    x = Poly.of(lam, s)
    for c in g.coeffs:
        out = out * x + Poly.of(c)
    return out


class TestClassify:
    @pytest.mark.parametrize("coeffs, verdict, case", [
        ((5, 10, 10, 5, 1), Verdict.STRICTLY_POSITIVE, "(1)"),
        ((0, 0, 0, 0, 1), Verdict.STRICTLY_POSITIVE, "(1)"),
        ((-1, 0, 0, -1, 1), Verdict.NONNEGATIVE_WITH_ZEROS, "(9iv)"),
    ])
    def test_examples(self, coeffs, verdict, case):
        cls, cert = classify_quintic_halfline(QuinticCoeffs(*coeffs))
        assert (cls.verdict, cert.case) == (verdict, case)

    def test_worked_example_zero(self):
        cls, cert = classify_quintic_halfline(QuinticCoeffs(-1, 0, 0, -1, 1))
        assert cls.zeros == (ZeroLocation.at(1, 2),) and cert.values["alpha"] == 1
        (step,) = cert.steps
        assert (step.values["p"], step.values["q"], step.values["r"]) == (1, 1, 1)

    def test_two_variation_pattern_missing_from_enumeration(self):
        # V(inf) = V(0) = 2, strictly positive, but no enumerated (8) branch lists this pattern
        q = QuinticCoeffs(F(7, 2), F(17, 2), 1, F(-3, 2), 11)
        cls, cert = classify_quintic_halfline(q)
        assert cert.case == "(8)" and cls.verdict is Verdict.STRICTLY_POSITIVE
        assert cert.values["V(inf)"] == cert.values["V(0)"] == 2
        assert cert.values["branch"] is None and cert.values["branch_agrees"] is False
        assert oracle_classify(q.poly(), HALF).verdict is Verdict.STRICTLY_POSITIVE

    def test_needs_positive_constant(self):
        with pytest.raises(ValueError):
            classify_quintic_halfline(QuinticCoeffs(0, 0, 0, 1, 0))

    @given(quintics)
    def test_matches_oracle(self, q):
        cls, _ = classify_quintic_halfline(q)
        assert agrees(cls, oracle_classify(q.poly(), HALF))

    @given(st.sampled_from(sorted(QUINTIC_RECIPES)), st.integers(0, 2 ** 32))
    def test_matches_oracle_per_case(self, label, seed):
        q = quintic_sample(label, random.Random(seed))
        cls, cert = classify_quintic_halfline(q)
        assert cert.case == label
        assert agrees(cls, oracle_classify(q.poly(), HALF))

    @given(positive_rationals(6, 3), st.builds(CubicCoeffs, rationals(6, 2), rationals(6, 2), positive_rationals(6, 2)))
    def test_constructed_double_root(self, alpha, h):
        g = Poly.from_roots([alpha, alpha]) * h.poly()
        if oracle_classify(h.poly(), HALF).verdict is not Verdict.STRICTLY_POSITIVE:
            return
        cls, _ = classify_quintic_halfline(q_of(g))
        assert cls.verdict is Verdict.NONNEGATIVE_WITH_ZEROS
        assert ZeroLocation.at(alpha, 2) in cls.zeros

    def test_sign_variations(self):
        assert sign_variations([1, 0, -1, -2, 0, 3]) == 2
        assert sign_variations([]) == 0


class TestReductions:
    @pytest.mark.parametrize("g, alpha, pqr", [
        (Poly.of(1, -1) ** 2 * Poly.of(1, 1, 1, 1), 1, (1, 1, 1)),
        (Poly.of(1, -1) ** 2 * Poly.of(1, 1) ** 3, 1, (3, 3, 1)),
        (Poly.of(1, 2) ** 2 * Poly.of(1, 0, 0, 1), -2, (0, 0, 1)),
    ])
    def test_linear(self, g, alpha, pqr):
        assert multiple_root_reduce_linear(q_of(g), alpha) == CubicCoeffs(*pqr)

    def test_linear_requires_factor(self):
        with pytest.raises(ValueError):
            multiple_root_reduce_linear(QuinticCoeffs(0, 0, 0, 0, 1), 1)

    @pytest.mark.parametrize("g, uv, method", [
        (Poly.of(1, 0, 1) ** 2 * Poly.of(1, 1), (0, 1), "double-pair"),
        (Poly.of(1, -2, 2) ** 2 * Poly.of(1, 1), (-2, 2), "double-pair"),
        (Poly.of(1, 1) ** 3 * Poly.of(1, 1, 1), (2, 1), "triple-root"),
    ])
    def test_quadratic(self, g, uv, method):
        cls, cert = multiple_root_reduce_quadratic(q_of(g), *uv)
        assert cls.verdict is Verdict.STRICTLY_POSITIVE and cert.method == method

    def test_quadratic_cross_checks(self):
        _, cert = multiple_root_reduce_quadratic(q_of(Poly.of(1, 1) ** 3 * Poly.of(1, 1, 1)), 2, 1)
        assert (cert.values["u_hat"], cert.values["v_hat"]) == (1, 1)
        assert cert.values["u_hat_formula_agrees"] and cert.values["v_hat_formula_agrees"]

    def test_quadratic_real_double_pair(self):
        # (t-1)^2 (t-2)^2 (t+1): zeros 1 and 2
        g = Poly.from_roots([1, 1, 2, 2, -1])
        cls, _ = multiple_root_reduce_quadratic(q_of(g), -3, 2)
        assert cls.zeros == (ZeroLocation.at(1, 2), ZeroLocation.at(2, 2))

    def test_cubic(self):
        cls, cert = multiple_root_reduce_cubic(q_of(Poly.of(1, 1) ** 4 * Poly.of(1, 2)), 3, 3, 1)
        assert cls.verdict is Verdict.STRICTLY_POSITIVE and cert.case == "(i)"
        cls, _ = multiple_root_reduce_cubic(q_of(Poly.of(1, 1) ** 3 * Poly.of(1, -1) ** 2), 1, -1, -1)
        assert cls.zeros == (ZeroLocation.at(1, 2),)

    def test_cubic_precondition(self):
        with pytest.raises(ValueError):
            multiple_root_reduce_cubic(QuinticCoeffs(0, 0, 0, 0, 1), 1, 1, 1)


def test_main_labels_cover_partition():
    assert {main_label(x) for x in ALL_LABELS} == set(MAIN_LABELS)
