import json
import random

import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from polycert.dispatch import classify
from polycert.evendeg import (
    MonicUnitPoly, SurveyReport, appendix_factor, appendix_membership, appendix_witnesses, discriminant_sign_survey,
    no_real_roots, random_monic_unit,
)
from polycert.exactpoly import Poly, discriminant
from polycert.types import Region, Verdict


class TestMembership:
    def test_examples(self):
        assert appendix_membership(MonicUnitPoly(Poly.of(1, -1, 1) ** 2))
        assert not appendix_membership(MonicUnitPoly(Poly.of(1, 0, -1) ** 2))
        assert appendix_membership(Poly.of(1, 0, 1) ** 2 * Poly.of(1, 0, 2))

    def test_factor_is_the_square_part(self):
        assert appendix_factor(Poly.of(1, -1, 1) ** 2) == Poly.of(1, -1, 1)
        assert appendix_factor(Poly.of(1, 0, 0, 0, 1)) is None

    @pytest.mark.parametrize("p", [Poly.of(1, 0, 1), Poly.of(2, 0, 0, 0, 1), Poly.of(1, 0, 0, 0, 0, 1)])
    def test_type_guard(self, p):
        with pytest.raises(ValueError):
            MonicUnitPoly(p)

    @given(rationals(3, 3).filter(lambda u: u * u < 4), st.integers(0, 1))
    def test_constructed_members(self, u, pad):
        # (t^2 + u t + 1)^2 (t^2 + 1)^pad with u^2 < 4
        p = Poly.of(1, u, 1) ** 2 * Poly.of(1, 0, 1) ** pad
        m = MonicUnitPoly(p)
        assert appendix_membership(m) and discriminant(p) == 0
        assert classify(p, Region.REAL_LINE)[0].verdict is Verdict.STRICTLY_POSITIVE


class TestRealRoots:
    def test_examples(self):
        assert no_real_roots(Poly.of(1, 0, 0, 0, 1))
        assert not no_real_roots(Poly.of(1, 0, 0, 0, -1))
        assert no_real_roots(Poly.of(1, 1, 1) * Poly.of(1, -1, 1) * Poly.of(1, 0, 3))


class TestSurvey:
    def test_degree4(self):
        r = discriminant_sign_survey(4, 300, 42)
        assert r.positive_disc + r.negative_disc + r.zero_disc == r.no_real_root_count
        assert r.negative_disc == 0 and r.zero_disc == r.appendix_hits and r.lock_holds

    def test_injected_fixed_point_detected(self):
        r = discriminant_sign_survey(4, 0, 1, inject=[Poly.of(1, -2, 3, -2, 1)])
        assert (r.samples_tested, r.zero_disc, r.appendix_hits) == (1, 1, 1)

    def test_degree6_single_sign(self):
        r = discriminant_sign_survey(6, 200, 42, inject=appendix_witnesses(6))
        assert len(r.nonzero_signs) == 1 and r.lock_holds and r.appendix_hits >= 3

    def test_deterministic_and_mapper_independent(self):
        a = discriminant_sign_survey(4, 100, 9)
        b = discriminant_sign_survey(4, 100, 9, mapper=lambda f, xs: [f(x) for x in reversed(list(xs))][::-1])
        assert a.no_real_root_count > 0
        assert a == b

    def test_json_fields(self):
        r = discriminant_sign_survey(4, 10, 0)
        keys = set(json.loads(r.to_json()))
        assert {"degree", "samples_tested", "no_real_root_count", "positive_disc", "negative_disc", "zero_disc",
                "appendix_hits", "seed"} <= keys

    @pytest.mark.parametrize("degree", [3, 5, 2])
    def test_bad_degree(self, degree):
        with pytest.raises(ValueError):
            discriminant_sign_survey(degree, 1, 0)

    def test_witness_degrees(self):
        for d in (4, 6, 8):
            for p in appendix_witnesses(d):
                assert appendix_membership(MonicUnitPoly(p))

    def test_rational_sampling(self):
        rng = random.Random(0)
        p = random_monic_unit(6, rng, 4, rational=True)
        assert p.degree == 6 and p.lc == 1 and p.constant == 1

    def test_lock_report_logic(self):
        assert not SurveyReport(4, 1, 1, 0, 0, 1, 0, 0, 1).lock_holds


@pytest.mark.parametrize("degree", [4, 6])
def test_convexity_midpoints(degree):
    rng = random.Random(degree)
    pool = []
    while len(pool) < 40:
        p = random_monic_unit(degree, rng, 3)
        if classify(p, Region.REAL_LINE)[0].verdict.nonnegative:
            pool.append(p)
    for _ in range(100):
        p, q = rng.sample(pool, 2)
        mid = Poly(tuple((x + y) / 2 for x, y in zip(p.coeffs, q.coeffs)))
        assert classify(mid, Region.REAL_LINE)[0].verdict.nonnegative
