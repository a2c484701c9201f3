import itertools
from math import sqrt

import pytest
from hypothesis import given, strategies as st

from intpoints.selfdesc import (Classification, NotExtendableError, classify, closed_form, contract,
                                digit_sum, extend, is_solution, parse_digits, render,
                                search_solutions, to_particular, weighted_sum, zero_lower_bound)

D = parse_digits


def compositions_oracle(n):
    """Every way to write n as n ordered non-negative parts, filtered by the definition."""
    m = 2 * n - 1
    out = []
    for bars in itertools.combinations(range(m), n - 1):
        parts = [hi - lo - 1 for lo, hi in zip((-1,) + bars, bars + (m,))]
        if all(parts.count(i) == v for i, v in enumerate(parts)):
            out.append(tuple(parts))
    return sorted(out)


def test_parse_and_render():
    assert D("6210001000") == (6, 2, 1, 0, 0, 0, 1, 0, 0, 0)
    assert D("(11, 2, 1, 0)") == (11, 2, 1, 0)
    assert render((11, 2, 1, 0)) == "(11, 2, 1, 0)"
    assert render(D("1210")) == "1210"
    with pytest.raises(ValueError):
        D("12a")


@pytest.mark.parametrize("b, s, w", [("6210001000", 10, 10), ("0000", 0, 0), ("1210", 4, 4), ("1", 1, 0), ("2020", 4, 4)])
def test_sums(b, s, w):
    assert digit_sum(D(b)) == s
    assert weighted_sum(D(b)) == w


@pytest.mark.parametrize("b, expected", [("1210", True), ("2020", True), ("0000", False), ("6210001000", True)])
def test_is_solution(b, expected):
    assert is_solution(D(b)) is expected


def bound_by_scan(n):
    # least z >= 0 with (2n - 2z - 1) <= sqrt(8n + 1), checked in exact integers
    for z in range(n + 1):
        t = 2 * n - 2 * z - 1
        if t <= 0 or t * t <= 8 * n + 1:
            return z


@pytest.mark.parametrize("n, z", [(10, 5), (4, 1), (1, 0)])
def test_zero_lower_bound_examples(n, z):
    assert zero_lower_bound(n) == z


def test_zero_lower_bound_matches_scan():
    for n in range(1, 3000):
        assert zero_lower_bound(n) == bound_by_scan(n), n


def test_zero_lower_bound_float_agrees_off_boundary():
    for n in range(1, 500):
        f = n - 0.5 - sqrt(2 * n + 0.25)
        if abs(f - round(f)) > 1e-9:
            assert zero_lower_bound(n) == max(0, int(-(-f // 1)))


def test_zero_bound_exceeds_half_length_beyond_eleven():
    # the zeros bound strictly exceeds ceil(n/2) exactly from n = 12 on
    half = lambda n: -(-n // 2)
    assert zero_lower_bound(11) == half(11)
    for n in range(12, 5000):
        assert zero_lower_bound(n) > half(n), n


@pytest.mark.parametrize("b, kind", [
    ("3211000", Classification.PARTICULAR),
    ("72100001000", Classification.EXTENDABLE),
    ("2020", Classification.SPORADIC),
    ("1210", Classification.SPORADIC),
    ("21200", Classification.SPORADIC),
    ("0000", Classification.NOT_SOLUTION),
])
def test_classify(b, kind):
    assert classify(D(b)) is kind


def test_extend_examples():
    assert extend(D("72100001000")) == D("821000001000")
    assert extend(D("3211000")) == D("42101000")
    with pytest.raises(NotExtendableError):
        extend(D("2020"))


def test_contract_examples():
    assert contract(D("6210001000")) == D("521001000")
    assert contract(D("521001000")) == D("42101000")
    assert contract(D("42101000")) == D("3211000")
    with pytest.raises(NotExtendableError):
        contract(D("3211000"))
    with pytest.raises(NotExtendableError):
        contract(D("2020"))


@pytest.mark.parametrize("b, root, steps", [
    ("6210001000", "3211000", 3), ("3211000", "3211000", 0), ("821000001000", "3211000", 5),
])
def test_to_particular(b, root, steps):
    assert to_particular(D(b)) == (D(root), steps)


def test_to_particular_rejects_sporadic():
    with pytest.raises(NotExtendableError):
        to_particular(D("1210"))


@pytest.mark.parametrize("n, expected", [
    (1, []), (2, []), (3, []), (4, ["1210", "2020"]), (5, ["21200"]), (6, []),
    (7, ["3211000"]), (10, ["6210001000"]),
])
def test_search_small(n, expected):
    assert search_solutions(n) == [D(b) for b in expected]


def test_closed_form_examples():
    assert closed_form(10) == D("6210001000")
    assert closed_form(7) == D("3211000")
    assert closed_form(15) == (11, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0)
    with pytest.raises(ValueError):
        closed_form(6)


@given(st.integers(7, 400))
def test_closed_form_properties(n):
    b = closed_form(n)
    assert len(b) == n and is_solution(b)
    assert digit_sum(b) == weighted_sum(b) == n
    assert b[0] >= zero_lower_bound(n)
    if n > 7:
        assert classify(b) is Classification.EXTENDABLE
        assert extend(contract(b)) == b
    assert contract(extend(b)) == b
    assert classify(extend(b)) is Classification.EXTENDABLE
    assert extend(b) == closed_form(n + 1)
    if n > 11:
        assert b[0] > -(-n // 2)


def test_solutions_satisfy_sum_identities():
    for n in range(1, 25):
        for b in search_solutions(n):
            assert digit_sum(b) == n and weighted_sum(b) == n
            assert b[0] >= zero_lower_bound(n)


def test_search_beyond_eleven_is_closed_form():
    for n in range(12, 30):
        assert search_solutions(n) == [closed_form(n)]


@pytest.mark.parametrize("n", range(1, 13))
def test_search_matches_composition_oracle(n):
    assert search_solutions(n) == compositions_oracle(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [13, 14])
def test_search_matches_composition_oracle_slow(n):
    assert search_solutions(n) == compositions_oracle(n)
