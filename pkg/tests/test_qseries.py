"""Tests for exact Laurent / rational / truncated-series arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iqrank1.qseries import (
    LaurentPoly,
    LaurentSeriesQinv,
    RationalQ,
    bar,
    classical_qint,
    expand,
    one_minus_q_to,
    qfactorial,
    qint,
    series_from_laurent,
)


def L(d):
    return LaurentPoly(d)


# ---------------------------------------------------------------------------
# quantum integers


def test_qint_values():
    assert qint(0) == L({})
    assert qint(2) == L({1: 1, -1: 1})
    assert qint(3) == L({2: 1, 0: 1, -2: 1})


def test_qint_negative_is_negated():
    assert qint(-3) == -qint(3)


def test_qfactorial_values():
    assert qfactorial(0) == L({0: 1})
    assert qfactorial(2) == L({1: 1, -1: 1})
    assert qfactorial(3) == L({3: 1, 1: 2, -1: 2, -3: 1})


def test_qfactorial_rejects_negative():
    with pytest.raises(ValueError):
        qfactorial(-1)


def test_classical_qint():
    assert classical_qint(0) == L({})
    assert classical_qint(4) == L({0: 1, 1: 1, 2: 1, 3: 1})


@given(st.integers(min_value=0, max_value=10))
def test_qfactorial_at_one_is_factorial(n):
    import math

    assert qfactorial(n).evaluate_at_one() == math.factorial(n)


@given(st.integers(min_value=0, max_value=30))
def test_qint_bar_invariant(n):
    assert qint(n).bar() == qint(n)


# ---------------------------------------------------------------------------
# LaurentPoly ring


laurent_st = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=5,
).map(LaurentPoly)


@given(laurent_st, laurent_st, laurent_st)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + LaurentPoly.zero() == a
    assert a * LaurentPoly.one() == a
    assert a - a == LaurentPoly.zero()


@given(laurent_st)
def test_laurent_bar_involution(a):
    assert a.bar().bar() == a


def test_bar_examples():
    assert L({2: 1, 0: 1}).bar() == L({-2: 1, 0: 1})
    b = RationalQ(1, L({0: 1, -2: -1})).bar()
    assert b == RationalQ(L({-2: -1}), L({0: 1, -2: -1}))
    assert b == RationalQ(1, L({0: 1, 2: -1}))


def test_format():
    assert str(L({3: 1, 1: 2, -1: 2, -3: 1})) == "q^3 + 2*q + 2*q^-1 + q^-3"
    assert str(L({})) == "0"
    assert str(L({0: -5, 2: 1})) == "q^2 - 5"


# ---------------------------------------------------------------------------
# RationalQ canonical form and field axioms


def test_canonical_form_examples():
    # q-powers cleared into the numerator, denominator valuation 0
    r = RationalQ(1, L({0: 1, -2: -1}))
    assert r.num == L({2: 1}) and r.den == L({2: 1, 0: -1})
    assert r.den.valuation() == 0
    assert r.den.leading_coeff() > 0
    # plain rational numbers stay reduced but keep integer num/den
    half = RationalQ(1, 2)
    assert half.num == L({0: 1}) and half.den == L({0: 2})
    # cancellation over Q[q]
    s = RationalQ(L({2: 1, 0: -1}), L({1: 1, 0: 1}))  # (q^2-1)/(q+1) = q-1
    assert s.is_polynomial() and s.as_laurent() == L({1: 1, 0: -1})


rational_st = st.builds(
    lambda n, dk: RationalQ(n, one_minus_q_to(-2 * dk).num)
    if dk
    else RationalQ(n),
    laurent_st,
    st.integers(min_value=0, max_value=3),
).filter(lambda r: True)


@given(rational_st, rational_st, rational_st)
@settings(max_examples=200)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RationalQ(0)
    if not b.is_zero():
        assert (a / b) * b == a
    # equality via cross-multiplication agrees with canonical equality
    assert (a.num * b.den == b.num * a.den) == (a == b)


@given(rational_st)
@settings(max_examples=200)
def test_rational_bar_involution(a):
    assert a.bar().bar() == a


# ---------------------------------------------------------------------------
# truncated series


def test_expand_geometric():
    r = RationalQ(1, L({0: 1, -2: -1}))
    s = expand(r, 7)
    assert s.top_exponent == 0
    assert [s.coeff(-i) for i in range(7)] == [1, 0, 1, 0, 1, 0, 1]
    assert str(s) == "1 + q^-2 + q^-4 + q^-6 + O(q^-7)"


def test_expand_polynomial_passthrough():
    s = expand(RationalQ(qint(2)), 4)
    assert s.top_exponent == 1
    assert [s.coeff(1 - i) for i in range(4)] == [1, 0, 1, 0]


def test_expand_with_pole_at_one():
    # (2+q^2)/(1-q^-2)^2 = q^2 + 4 + 7 q^-2 + 10 q^-4 + ...
    num = L({0: 2, 2: 1})
    den = one_minus_q_to(-2) * one_minus_q_to(-2)
    s = expand(RationalQ(num) / den, 5)
    assert s.top_exponent == 2
    assert [s.coeff(2 - i) for i in range(5)] == [1, 0, 4, 0, 7]


def test_series_equality_on_common_window():
    a = LaurentSeriesQinv(2, [1, 0, 4, 0, 7])
    b = LaurentSeriesQinv(2, [1, 0, 4])
    assert a == b
    c = LaurentSeriesQinv(2, [1, 0, 5])
    assert a != c


def test_series_mul_precision_is_min():
    a = expand(RationalQ(1, L({0: 1, -2: -1})), 5)
    b = expand(RationalQ(1, L({0: 1, -1: -1})), 9)
    assert (a * b).precision == 5
    assert (a + b).precision == 5


@given(
    st.lists(st.integers(-5, 5), min_size=1, max_size=4),
    st.lists(st.integers(-5, 5), min_size=1, max_size=4),
    st.integers(min_value=1, max_value=8),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=3),
)
@settings(max_examples=200)
def test_expand_is_ring_homomorphism(na, nb, prec, ka, kb):
    """expand(a)*expand(b) == expand(a*b), poles only at (1-q^-2k) factors."""
    a = RationalQ(L(dict(enumerate(na))))
    b = RationalQ(L(dict(enumerate(nb))))
    for k in range(1, ka + 1):
        a = a / one_minus_q_to(-2 * k)
    for k in range(1, kb + 1):
        b = b / one_minus_q_to(-2 * k)
    if a.is_zero() or b.is_zero():
        return
    pa, pb = expand(a, prec), expand(b, prec)
    assert pa * pb == expand(a * b, prec + 5)
    assert pa + pb == expand(a + b, prec + 5)


def test_series_from_laurent():
    s = series_from_laurent(qfactorial(3), 4)
    assert s.top_exponent == 3
    assert [s.coeff(3 - i) for i in range(4)] == [1, 0, 2, 0]


def test_bar_any_dispatch():
    assert bar(qint(5)) == qint(5)
    r = RationalQ(1, one_minus_q_to(-2).num)
    assert bar(r) == r.bar()
