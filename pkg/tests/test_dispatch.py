from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import polys
from polycert.dispatch import agrees, check_against_oracle, classify
from polycert.exactpoly import Poly, ZeroPolynomialError
from polycert.types import Classification, Region, Verdict, ZeroLocation

HALF, REAL = Region.HALF_LINE, Region.REAL_LINE


@pytest.mark.parametrize("g, region, method", [
    (Poly.of(1, 1), HALF, "linear"),
    (Poly.of(1, 0, 1), HALF, "quadratic"),
    (Poly.of(1, 0, 0, 1), HALF, "cubic"),
    (Poly.of(1, 0, 0, 0, 1), HALF, "quartic-halfline"),
    (Poly.of(1, 0, 0, 0, 1), REAL, "quartic-realline"),
    (Poly.of(1, 0, 0, 0, 0, 1), HALF, "quintic"),
    (Poly.of(1, 0, 0, 0, 0, 0, 1), HALF, "oracle"),
    (Poly.of(1, 0, 0, 0, 2), HALF, "oracle"),
    (Poly.of(1, 0, 0, 1), REAL, "sign"),
    (Poly.of(-1, 0, 1), HALF, "sign"),
    (Poly.of(1, 3, 0, 0), HALF, "degenerate"),
])
def test_routing(g, region, method):
    assert classify(g, region)[1].method == method


def test_constants_and_zero():
    assert classify(Poly.of(3))[0].verdict is Verdict.STRICTLY_POSITIVE
    assert classify(Poly.of(-3))[0].witness == 0
    with pytest.raises(ZeroPolynomialError):
        classify(Poly.of(0))


def test_non_monic_and_scaled_quartic():
    # 2 (t^2 - 9)^2 scales to (x^2 - 1)^2 with s = 3
    g = Poly.of(2, 0, -36, 0, 162)
    cls, cert = classify(g, REAL)
    assert cert.values["scale"] == 3
    assert cls.zeros == (ZeroLocation.at(-3, 2), ZeroLocation.at(3, 2))


def test_power_of_t():
    cls, cert = classify(Poly.of(1, -1, 0, 0), HALF)  # t^2 (t - 1)
    assert cls.verdict is Verdict.INDEFINITE
    cls, _ = classify(Poly.of(1, 1, 0, 0), HALF)  # t^2 (t + 1)
    assert cls.zeros == (ZeroLocation.at(0, 2),)
    assert classify(Poly.of(1, 0, 1, 0), REAL)[0].verdict is Verdict.INDEFINITE  # t (t^2 + 1)
    cls, _ = classify(Poly.of(1, 0, 1, 0), HALF)
    assert cls.zeros == (ZeroLocation.at(0, 1),)


@given(polys(min_degree=1, max_degree=6, bound=8, max_den=3), st.sampled_from([HALF, REAL]))
def test_agrees_with_oracle(g, region):
    cls, _ = classify(g, region)
    assert check_against_oracle(g, region, cls)
    if cls.verdict is Verdict.INDEFINITE:
        assert g(cls.witness) < 0


def test_agrees_semantics():
    a = Classification.with_zeros([ZeroLocation(F(1), F(2))])
    b = Classification.with_zeros([ZeroLocation(F(3, 2), F(3))])
    c = Classification.with_zeros([ZeroLocation(F(2), F(3))])
    assert agrees(a, b) and not agrees(a, c)
    assert agrees(Classification.indefinite(F(1)), Classification.indefinite(F(5)))
    assert not agrees(Classification.positive(), Classification.indefinite(F(0)))
