from math import comb

import pytest
from hypothesis import given, strategies as st

from hopfring.f2series import (
    BoundExceeded,
    NonUnitConstantTerm,
    PoincareSeries,
    as_dimensions,
    binom_mod2,
    dim_by_enumeration,
    exterior_series,
    polynomial_series,
    series_inv,
    series_mul,
)
from hopfring.presentations import parse_presentation


@pytest.mark.parametrize("j,k,want", [(1, 2, 1), (1, 1, 0), (5, 3, 0), (0, 0, 1), (2, 4, 1)])
def test_binom_examples(j, k, want):
    assert binom_mod2(j, k) == want


def test_binom_matches_factorials_up_to_64():
    for j in range(65):
        for k in range(65):
            assert binom_mod2(j, k) == comb(j + k, j) % 2


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_binom_symmetric(j, k):
    assert binom_mod2(j, k) == binom_mod2(k, j)


def test_binom_rejects_negative():
    with pytest.raises(ValueError):
        binom_mod2(-1, 2)


def test_mul_examples():
    a = PoincareSeries.binomial(1, 4)
    assert (a * a).coefficients == (1, 2, 1, 0, 0)
    g = PoincareSeries.geometric(1, 6)
    assert (g * g).coefficients == (1, 2, 3, 4, 5, 6, 7)


def test_distinct_parts_of_six():
    assert exterior_series(range(1, 7), 6).coefficient(6) == 4


def test_mul_truncates_to_smaller():
    a = PoincareSeries.geometric(1, 3)
    b = PoincareSeries.geometric(1, 7)
    assert series_mul(a, b).maxdeg == 3


def test_inverse_examples():
    one_minus_t = PoincareSeries.binomial(1, 8, sign=-1)
    assert series_inv(one_minus_t).coefficients == (1,) * 9
    inv = series_inv(PoincareSeries.binomial(1, 5))
    assert inv.coefficients == (1, -1, 1, -1, 1, -1)
    assert inv.signed


def test_inverse_of_odd_product_counts_odd_partitions():
    acc = PoincareSeries.one(6)
    for d in (1, 3, 5):
        acc = acc * PoincareSeries.binomial(d, 6, sign=-1)
    assert series_inv(acc).coefficient(6) == 4


def test_inverse_requires_unit():
    with pytest.raises(NonUnitConstantTerm):
        series_inv(PoincareSeries.from_list([0, 1], 3))


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=12))
def test_inverse_roundtrip(cs):
    cs = [1] + cs
    a = PoincareSeries.from_list(cs, len(cs) - 1, signed=True)
    prod = series_mul(a, series_inv(a))
    assert prod.coefficients == (1,) + (0,) * a.maxdeg


def test_unsigned_rejects_negative_and_overflow():
    with pytest.raises(ValueError):
        PoincareSeries.from_list([1, -1], 1)
    with pytest.raises(OverflowError):
        PoincareSeries.from_list([1, 2**63], 1)


def test_as_dimensions_validates():
    with pytest.raises(ValueError):
        as_dimensions(series_inv(PoincareSeries.binomial(1, 3)))


def test_euler_identity_to_40():
    lhs = exterior_series(range(1, 41), 40)
    rhs = polynomial_series(range(1, 41, 2), 40)
    assert lhs == rhs


def test_str_renders_truncation():
    assert str(PoincareSeries.binomial(2, 3)) == "1 + t^2 + O(t^4)"


@pytest.mark.parametrize("text,d,want", [
    ("1; P(deg=1*i+0, i>=1)", 4, 5),
    ("1; E(deg=1*i+0, i>=1)", 0, 1),
    ("1; E(deg=4*i+3, i>=0)", 10, 1),
])
def test_enumeration_examples(text, d, want):
    assert dim_by_enumeration(parse_presentation(text), d) == want


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        dim_by_enumeration(parse_presentation("1; P(deg=1*i+0, i>=1)"), 41)
