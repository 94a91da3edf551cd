from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilcert.semigroup import NumericalSemigroup, curve_semigroup, frobenius_number, gaps, genus_delta


def brute_members(gens, limit):
    """All sums of generators up to ``limit`` by direct enumeration."""
    members = {0}
    frontier = {0}
    while frontier:
        new = {m + g for m in frontier for g in gens if m + g <= limit} - members
        members |= new
        frontier = new
    return members


def test_contains_examples():
    S = NumericalSemigroup((3, 7, 8))
    assert S.contains(7)
    assert S.contains(0)
    assert not S.contains(5)
    with pytest.raises(ValueError):
        S.contains(-1)


def test_gaps_examples():
    assert gaps(NumericalSemigroup((3, 7, 8))) == [1, 2, 4, 5]
    assert gaps(NumericalSemigroup((1,))) == []
    assert gaps(NumericalSemigroup((3, 10, 11))) == [1, 2, 4, 5, 7, 8]


def test_frobenius_examples():
    assert frobenius_number(NumericalSemigroup((3, 7, 8))) == 5
    assert frobenius_number(NumericalSemigroup((1,))) == -1
    assert frobenius_number(NumericalSemigroup((2, 3))) == 1
    # Sylvester: ab - a - b for coprime pairs
    assert frobenius_number(NumericalSemigroup((5, 7))) == 23


def test_gcd_condition():
    with pytest.raises(ValueError):
        NumericalSemigroup((4, 6))


def test_genus_delta_examples():
    assert genus_delta(1) == 4
    assert genus_delta(2) == 6
    assert genus_delta(5) == 12


@pytest.mark.parametrize("b0", range(1, 11))
def test_genus_formula_against_enumeration(b0):
    gens = (3, 3 * b0 + 4, 3 * b0 + 5)
    limit = 4 * gens[-1]
    members = brute_members(gens, limit)
    brute_gaps = [n for n in range(1, limit) if n not in members]
    assert list(curve_semigroup(b0).gaps) == brute_gaps
    assert genus_delta(b0) == 2 * b0 + 2


@given(st.lists(st.integers(2, 15), min_size=2, max_size=3).filter(lambda g: gcd(*g) == 1))
@settings(deadline=None)
def test_semigroup_properties(gens):
    S = NumericalSemigroup(tuple(gens))
    F = S.frobenius_number
    members = brute_members(gens, 3 * F + 2)
    assert all(S.contains(n) == (n in members) for n in range(3 * F + 2))
    for n in range(1, 3 * F + 2):
        assert S.contains(n) == (n not in S.gaps)
    assert all(S.contains(n) for n in range(F + 1, F + 40))
    members = [n for n in range(3 * max(F, 1) + 1) if S.contains(n)]
    for a in members:
        for b in members:
            assert S.contains(a + b)
