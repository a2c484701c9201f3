import pytest
from hypothesis import given, settings, strategies as st

from intpoints.curve import Curve, negate, on_curve, point
from intpoints.points import enumerate_integral_points, isqrt
from intpoints.search import integral_multiples
from intpoints.curve import scalar_mul


@pytest.mark.parametrize("n, root", [(49, 7), (2, None), (0, 0), (-4, None), ((10**100) ** 2, 10**100)])
def test_isqrt(n, root):
    assert isqrt(n) == root


@given(st.integers(0, 10**40))
def test_isqrt_squares(k):
    assert isqrt(k * k) == k
    if k > 0:
        assert isqrt(k * k + 1) is None


def test_enumerate_examples():
    assert enumerate_integral_points(Curve(-1, 0, 0, -3, 0), 0) == [point(0, 0)]
    assert enumerate_integral_points(Curve(0, 0, 0, 0, 1), 0) == [point(0, -1), point(0, 1)]
    pts = enumerate_integral_points(Curve(-17, -30, 960), 40)
    assert point(0, 0) in pts and point(30, -450) in pts


def test_enumerate_rejects_negative_bound():
    with pytest.raises(ValueError):
        enumerate_integral_points(Curve(0, 0, 1), -1)


def brute_points(E, B, ybound):
    a, b, c, d, e = E.coeffs
    return sorted(point(x, y) for x in range(-B, B + 1) for y in range(-ybound, ybound + 1)
                  if y * y + a * x * y + c * y == x ** 3 + b * x * x + d * x + e)


@settings(max_examples=60, deadline=None)
@given(st.tuples(*[st.integers(-6, 6)] * 5))
def test_matches_two_dimensional_brute_force(coeffs):
    E = Curve(*coeffs)
    B = 12
    # |y| is bounded by roughly |x|^1.5 plus the linear terms for these small coefficients
    assert enumerate_integral_points(E, B) == brute_points(E, B, 200)


@settings(max_examples=40, deadline=None)
@given(st.tuples(*[st.integers(-30, 30)] * 5), st.integers(0, 40))
def test_points_on_curve_and_closed_under_negation(coeffs, B):
    E = Curve(*coeffs)
    pts = enumerate_integral_points(E, B)
    assert pts == sorted(pts)
    for P in pts:
        assert on_curve(E, P)
        assert negate(E, P) in pts


@pytest.mark.parametrize("coeffs", [(-17, -30, 960, 0, 0), (7, 70, -210, 0, 0), (253, 5320, 1197000, 0, 0)])
def test_integral_multiples_appear_in_enumeration(coeffs):
    E = Curve(*coeffs)
    B = 20_000
    pts = set(enumerate_integral_points(E, B))
    found, _ = integral_multiples(E, 35)
    for n in found:
        P = scalar_mul(E, n, point(0, 0))
        if abs(P.x) <= B:
            assert P in pts
