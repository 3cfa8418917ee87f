"""Tests for graded characters, decomposition data, and hom dimensions."""

import pytest

from iqrank1.characters import (
    Character,
    alpha_tuples,
    ch_irreducible,
    ch_irreducible_alpha_sum,
    ch_proper_standard,
    character_from_rationals,
    decomposition_number,
    gamma_dimension,
    gamma_dimension_partition_count,
    hom_dimension,
    projective_multiplicity,
    standard_flag_multiplicity,
    standard_flag_multiplicity_partition_count,
    zero_series,
)
from iqrank1.iqgroup import CANONICAL, convert, monomial
from iqrank1.qseries import (
    LaurentPoly,
    RationalQ,
    expand,
    one_minus_q_to,
    qfactorial,
    qint,
)


def L(d):
    return LaurentPoly(d)


def R(num, den=None):
    return RationalQ(num, den)


# ---------------------------------------------------------------------------
# proper standard characters


def test_ch_proper_standard_n0():
    ch = ch_proper_standard(0, 0, 6, 8)
    assert ch.coeff(0) == expand(R(1), 8)
    assert ch.coeff(1).is_zero()
    assert ch.coeff(2) == expand(R(1) / one_minus_q_to(-2), 8)
    expected4 = R(L({0: 2, 2: 1})) / one_minus_q_to(-2) ** 2
    assert ch.coeff(4) == expand(expected4, 8)


def test_ch_proper_standard_leading_terms():
    assert ch_proper_standard(1, 0, 4, 6).coeff(1) == expand(R(1), 6)
    assert ch_proper_standard(2, 1, 4, 6).coeff(2) == expand(
        R(qfactorial(2)), 6)


# ---------------------------------------------------------------------------
# irreducible characters


def test_ch_irreducible_base_cases():
    ch0 = ch_irreducible(0, 0, 6, 6)
    assert ch0.coeff(0) == expand(R(1), 6)
    assert all(ch0.coeff(i).is_zero() for i in range(1, 6))
    ch1 = ch_irreducible(0, 1, 7, 6)
    for i in range(7):
        if i % 2 == 0:
            assert ch1.coeff(i) == expand(R(1), 6), i
        else:
            assert ch1.coeff(i).is_zero()


def test_ch_irreducible_n1_t0():
    # xi + [2]^2 xi^3 + [2]^4 xi^5 + ...
    ch = ch_irreducible(1, 0, 6, 10)
    assert ch.coeff(1) == expand(R(1), 10)
    assert ch.coeff(3) == expand(R(qint(2)) ** 2, 10)
    assert ch.coeff(5) == expand(R(qint(2)) ** 4, 10)
    assert ch.coeff(2).is_zero() and ch.coeff(4).is_zero()


def test_alpha_tuples():
    assert alpha_tuples(0, 5, 0) == [()]
    assert alpha_tuples(1, 0, 1) == [(0,)]
    assert alpha_tuples(1, 0, 0) == []
    assert alpha_tuples(2, 3, 0) == [(1, 1), (1, 3), (3, 3)]
    assert alpha_tuples(2, 3, 1) == [(0, 0), (0, 2), (2, 2)]


def test_ch_irreducible_product_equals_alpha_sum():
    for t in (0, 1):
        for n in range(6):
            a = ch_irreducible(n, t, 12, 12)
            b = ch_irreducible_alpha_sum(n, t, 12, 12)
            assert a.agrees_with(b), (t, n)


def test_oops_recursions():
    # (1 - [n+1]^2 xi^2) ch L_n = [n] xi ch L_{n-1} when n != t (mod 2),
    # and ch L_n = [n] xi ch L_{n-1} when n = t (mod 2)
    for t in (0, 1):
        for n in range(1, 6):
            cur = ch_irreducible(n, t, 10, 10)
            prev = ch_irreducible(n - 1, t, 10, 10)
            rhs = prev.mul_xi().scale(R(qint(n)))
            if n % 2 == t % 2:
                assert cur.agrees_with(rhs), (t, n)
            else:
                lhs = cur - cur.mul_xi().mul_xi().scale(R(qint(n + 1)) ** 2)
                assert lhs.agrees_with(rhs), (t, n)


def test_branching_rule():
    # B ch L(n) = [n] ch L(n-1) + delta_{n != t} [n+1] ch L(n+1)
    for t in (0, 1):
        for n in range(6):
            lhs = ch_irreducible(n, t, 12, 10).shift_B()
            if n == 0:
                rhs = Character.make(
                    [zero_series(10)] * 11, 10)
            else:
                rhs = ch_irreducible(n - 1, t, 11, 10).scale(R(qint(n)))
            if n % 2 != t % 2:
                rhs = rhs + ch_irreducible(n + 1, t, 11, 10).scale(
                    R(qint(n + 1)))
            assert lhs.agrees_with(rhs), (t, n)


# ---------------------------------------------------------------------------
# decomposition numbers


def test_decomposition_number_values():
    for t in (0, 1):
        for n in range(4):
            assert decomposition_number(n, 0, t) == R(1)
    assert decomposition_number(0, 1, 0) == \
        R(L({-1: 1})) / one_minus_q_to(-4)
    assert decomposition_number(1, 1, 0) == \
        R(L({-3: 1})) / one_minus_q_to(-4)


def test_decomposition_of_proper_standard_characters():
    # ch Dbar(n) = sum_m [Dbar(n) : L(n+2m)]_q ch L(n+2m)
    xi_prec, q_prec = 10, 12
    for t in (0, 1):
        for n in range(5):
            total = None
            m = 0
            while n + 2 * m < xi_prec:
                term = ch_irreducible(n + 2 * m, t, xi_prec, q_prec).scale(
                    decomposition_number(n, m, t))
                total = term if total is None else total + term
                m += 1
            assert total.agrees_with(
                ch_proper_standard(n, t, xi_prec, q_prec)), (t, n)


# ---------------------------------------------------------------------------
# projective multiplicities


def test_projective_multiplicity_values():
    assert projective_multiplicity(2, 1, 1) == L({0: 1})
    assert projective_multiplicity(2, 1, 0) == L({})
    assert projective_multiplicity(2, 0, 0) == qfactorial(2)
    assert projective_multiplicity(2, 0, 1) == qfactorial(2)
    with pytest.raises(ValueError):
        projective_multiplicity(1, 1, 0)


def test_projective_multiplicities_reconstruct_monomials():
    for t in (0, 1):
        for n in range(9):
            e = convert(monomial(n, t), CANONICAL)
            for m in range(n // 2 + 1):
                assert e.coeff(n - 2 * m) == R(
                    projective_multiplicity(n, m, t)), (t, n, m)
            # and nothing else appears
            for k in range(len(e.coeffs)):
                if (n - k) % 2:
                    assert e.coeff(k).is_zero()


# ---------------------------------------------------------------------------
# graded dimensions


def test_gamma_dimension_values():
    s = gamma_dimension(7)
    assert [s.coeff(-i) for i in range(7)] == [1, 0, 1, 0, 1, 0, 2]
    assert gamma_dimension(1).coeff(0) == 1


def test_gamma_dimension_two_routes():
    for prec in (1, 3, 8, 15, 25):
        assert gamma_dimension(prec) == gamma_dimension_partition_count(prec)


def test_hom_dimension_values():
    prec = 9
    assert hom_dimension(0, 0, 0, prec) == gamma_dimension(prec)
    got = hom_dimension(1, 1, 0, prec)
    expected = gamma_dimension(prec + 2) * expand(
        R(1) / one_minus_q_to(-2), prec)
    assert got == expected
    assert hom_dimension(0, 1, 0, prec).is_zero()


def test_hom_dimension_coefficients_are_counts():
    for t in (0, 1):
        for m in range(4):
            for n in range(4):
                s = hom_dimension(m, n, t, 8)
                for c in s.coeffs:
                    assert c.denominator == 1 and c >= 0


def test_standard_flag_multiplicity_two_routes():
    for n in range(5):
        a = standard_flag_multiplicity(n, 14)
        b = standard_flag_multiplicity_partition_count(n, 14)
        assert a == b, n
