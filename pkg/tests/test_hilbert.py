import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from binedge.errors import DomainError
from binedge.hilbert import (
    PowerSeries,
    free_series,
    hilbert_numerator,
    hilbert_series,
    minimalize,
    series_inverse,
    series_mul,
)
from binedge.poly import monomial_divides


def count_standard(gens, nvars, N):
    """Independent oracle: enumerate every monomial of each degree."""
    out = []
    for d in range(N + 1):
        total = 0
        for combo in itertools.combinations_with_replacement(range(nvars), d):
            m = [0] * nvars
            for v in combo:
                m[v] += 1
            if not any(monomial_divides(g, tuple(m)) for g in gens):
                total += 1
        out.append(total)
    return out


def test_free_ring():
    assert hilbert_series([], 3, nvars=4).coeffs == (1, 4, 10, 20)


def test_single_generator():
    assert hilbert_series([(1, 0, 0, 1)], 2).coeffs == (1, 4, 9)


def test_initial_ideal_of_vee():
    # x1y3, x2y3, x1x3y2 in variables x1 x2 x3 y1 y2 y3
    gens = [(1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 0, 1), (1, 0, 1, 0, 1, 0)]
    assert hilbert_series(gens, 2).coeffs == (1, 6, 19)


def test_unit_ideal():
    assert hilbert_series([(0, 0)], 3).coeffs == (0, 0, 0, 0)


def test_nvars_required_without_generators():
    with pytest.raises((DomainError, ValueError)):
        hilbert_series([], 3)


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 6).flatmap(
        lambda k: st.lists(st.tuples(*[st.integers(0, 2)] * k), max_size=5).map(lambda g: (k, g))
    ),
    st.integers(0, 6),
)
def test_recursion_matches_enumeration(kg, N):
    k, gens = kg
    assert list(hilbert_series(gens, N, nvars=k).coeffs) == count_standard(gens, k, N)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5).flatmap(lambda k: st.lists(st.tuples(*[st.integers(0, 2)] * k), max_size=5)))
def test_minimalize_keeps_ideal(gens):
    mins = minimalize(gens)
    for g in gens:
        assert any(monomial_divides(m, g) for m in mins)
    for a, b in itertools.permutations(mins, 2):
        assert not monomial_divides(a, b)


def test_numerator_of_principal_ideal():
    # (1 - t^2) for a single quadric
    assert hilbert_numerator([(1, 1)]) == [1, 0, -1]


@pytest.mark.parametrize("k", range(0, 6))
def test_free_series(k):
    assert free_series(k, 5).coeffs == tuple(comb(k - 1 + d, d) if k else int(d == 0) for d in range(6))


def test_series_examples():
    assert series_inverse(PowerSeries([1, -1, 0, 0])).coeffs == (1, 1, 1, 1)
    assert series_mul(PowerSeries([1, 1, 0]), PowerSeries([1, -1, 0])).coeffs == (1, 0, -1)
    s = PowerSeries([1, 2, 3])
    assert series_inverse(series_inverse(s)) == s
    with pytest.raises(DomainError):
        series_inverse(PowerSeries([0, 1]))


def test_truncation_alignment():
    a = PowerSeries([1, 1, 1, 1])
    b = PowerSeries([1, 1])
    assert (a + b).N == 1
    assert a.truncate(2).coeffs == (1, 1, 1)
    with pytest.raises(DomainError):
        b.truncate(3)


coeff_lists = st.lists(st.integers(-5, 5), min_size=1, max_size=7)


@settings(max_examples=100, deadline=None)
@given(coeff_lists.map(lambda c: [1] + c))
def test_inverse_property(cs):
    s = PowerSeries(cs)
    one = series_mul(s, series_inverse(s))
    assert one.coeffs == (1,) + (0,) * s.N


@settings(max_examples=100, deadline=None)
@given(coeff_lists, coeff_lists)
def test_mul_commutes(a, b):
    assert series_mul(PowerSeries(a), PowerSeries(b)) == series_mul(PowerSeries(b), PowerSeries(a))


def test_exact_fractions():
    s = series_inverse(PowerSeries([2, 1]))
    assert s.coeffs == (Fraction(1, 2), Fraction(-1, 4))
