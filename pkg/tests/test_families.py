import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from intpoints.curve import O, Curve, add, is_integral, is_nonsingular, on_curve, point, reduce
from intpoints.families import (FamilyRejected, build, family2, family3, family3_point, family4,
                                family5, family8, family8_coeffs, family8_x)

P0 = point(0, 0)


def chained(E, n):
    """n(0,0) by n explicit group additions."""
    Q = O
    for _ in range(n):
        Q = add(E, Q, P0)
    return Q


def test_family2_examples():
    fc = family2((-17, -30, 960))
    assert fc.curve == Curve(-17, -30, 960)
    assert fc.predicted == ((2, point(30, -450)),)
    assert chained(fc.curve, 2) == point(30, -450)
    fc = family2((0, 0, 1))
    assert fc.curve == Curve(0, 0, 1)
    assert chained(fc.curve, 2) == point(0, -1) == fc.predicted[0][1]


def test_family2_rejects_c_zero():
    with pytest.raises(FamilyRejected) as exc:
        family2((1, 2, 0))
    assert exc.value.reason == "c_zero"


def test_family3_examples():
    fc = family3((1, 2, 3))
    assert fc.curve == Curve(1, 2, 6)
    assert fc.predicted[0] == (3, point(6, -24))
    assert chained(fc.curve, 3) == point(6, -24)
    fc = family3((0, 1, 1))
    assert chained(fc.curve, 3) == point(1, -2) == fc.predicted[0][1]


def test_family3_d_zero_degenerates():
    assert family3_point(4, 7, 0) == P0
    assert not is_nonsingular(Curve(4, 7, 0))
    with pytest.raises(FamilyRejected) as exc:
        family3((4, 7, 0))
    assert exc.value.reason == "c_zero"


# frozen from four chained additions on each curve
@pytest.mark.parametrize("params, coeffs, four_p", [
    ((3, 1, 2), (3, 4, 4), (2, -12)),
    ((-2, 3, -1), (-2, 5, 15), (4, 9)),
    ((5, -4, 5), (5, 45, -180), (45, -450)),
])
def test_family4_examples(params, coeffs, four_p):
    fc = family4(params)
    assert fc.curve == Curve(*coeffs)
    assert fc.predicted[0] == (4, point(*four_p))
    assert chained(fc.curve, 4) == point(*four_p)


def test_family5_examples():
    fc = family5((1, 2, 1, 2))
    assert fc.curve == Curve(-1, -4, -4)
    assert fc.predicted[0] == (5, point(4, 0))
    assert chained(fc.curve, 5) == point(4, 0)
    assert not fc.flags

    fc = family5((1, 1, 2, 1))
    assert fc.curve == Curve(3, 1, 2)
    five = chained(fc.curve, 5)
    assert five == point(0, -2) == fc.predicted[0][1]
    assert chained(fc.curve, 6) is O


def test_family5_unreduced_flag():
    fc = family5((1, 2, 4, 1))
    assert "unreduced_gcd" in fc.flags
    assert reduce(fc.curve).g > 1


def test_family5_t_equals_s_rejected():
    with pytest.raises(FamilyRejected) as exc:
        family5((1, 2, 2, 1))
    assert exc.value.reason == "c_zero"


def test_family8_example():
    fc = family8((2, 1, 1))
    assert fc.curve == Curve(15, 84, 252)
    assert family8_x(2, 1, 1) == -14
    assert chained(fc.curve, 8).x == -14


@pytest.mark.parametrize("params, reason", [((3, 0, 1), "b_zero"), ((2, 3, 2), "b_zero")])
def test_family8_rejections(params, reason):
    with pytest.raises(FamilyRejected) as exc:
        family8(params)
    assert exc.value.reason == reason


def test_family8_u_equals_p_zeroes_b_and_c():
    a, b, c = family8_coeffs(4, 3, 4)
    assert b == 0 and c == 0


def test_build_unknown_family():
    with pytest.raises(ValueError):
        build(6, (1, 2, 3))


ints = st.integers(-50, 50)
FAMILY_ARGS = {2: 3, 3: 3, 4: 3, 5: 4, 8: 3}


@pytest.mark.parametrize("family", sorted(FAMILY_ARGS))
@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_prefix_multiples_integral(family, data):
    params = data.draw(st.tuples(*[ints] * FAMILY_ARGS[family]))
    try:
        fc = build(family, params)
    except FamilyRejected:
        return
    E = fc.curve
    assert on_curve(E, P0)
    Q = O
    for n in range(1, family + 1):
        Q = add(E, Q, P0)
        if Q is O:
            break  # torsion of order <= k: remaining multiples cycle through integral points
        assert is_integral(Q), (params, n)


@pytest.mark.parametrize("family", sorted(FAMILY_ARGS))
def test_predicted_matches_group_law_sampled(family):
    rng = random.Random(family)
    checked = 0
    while checked < 200:
        params = tuple(rng.randint(-50, 50) for _ in range(FAMILY_ARGS[family]))
        try:
            fc = build(family, params)
        except FamilyRejected:
            continue
        for n, pred in fc.predicted:
            got = chained(fc.curve, n)
            if isinstance(pred, Fraction):
                assert got is not O and got.x == pred
            else:
                assert got == pred
        checked += 1
