"""The character ring Q(q)[[xi]], truncated in both xi and q.

A character is stored as one truncated q-series per power of xi.  The
generator B of the rank-one theory acts on characters by the left shift

    B (sum_n a_n xi^n)  =  sum_{n >= 1} a_n xi^(n-1),

and the graded characters of the two distinguished families of modules are

    proper standard:  ch Dbar_n = [n]! sum_f T_{f,n}(q^2)/(1-q^-2)^f xi^(n+2f)
    irreducible:      ch L_n    = [n]! xi^n prod 1/(1-[k]^2 xi^2),

the product over 1 <= k <= n+1 with k = t (mod 2).  Expanding the product
gives the equivalent positive sum over weakly increasing tuples alpha with
entries in [0, n] opposite in parity to t (alpha_tuples below); both routes
are implemented so they can be checked against each other.

Graded dimensions follow the convention that a vector in degree d counts
q^(-d), applied once when a grading becomes a series.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .chords import T_recurrence
from .iqgroup import form_i, monomial
from .qseries import (
    Fraction,
    LaurentPoly,
    LaurentSeriesQinv,
    RationalQ,
    expand,
    one_minus_q_to,
    qfactorial,
    qint,
)

_ZERO = RationalQ(0)
_ONE = RationalQ(1)


def zero_series(q_prec: int) -> LaurentSeriesQinv:
    return LaurentSeriesQinv(0, [0] * q_prec)


class Character(NamedTuple):
    xi_precision: int
    q_precision: int
    coeffs: tuple  # LaurentSeriesQinv per power of xi, length = xi_precision

    @staticmethod
    def make(coeffs, q_prec: int) -> "Character":
        cs = tuple(coeffs)
        return Character(len(cs), q_prec, cs)

    def coeff(self, n: int) -> LaurentSeriesQinv:
        if not 0 <= n < self.xi_precision:
            raise ValueError(f"xi^{n} is outside the retained window")
        return self.coeffs[n]

    def shift_B(self) -> "Character":
        """The module action of B: drop the xi^0 coefficient, shift down."""
        return Character.make(self.coeffs[1:], self.q_precision)

    def mul_xi(self) -> "Character":
        """Multiply by xi, keeping the same xi-window."""
        cs = (zero_series(self.q_precision),) + self.coeffs[:-1]
        return Character.make(cs, self.q_precision)

    def scale(self, c) -> "Character":
        s = expand(c if isinstance(c, RationalQ) else RationalQ(c),
                   self.q_precision)
        return Character.make([s * x for x in self.coeffs], self.q_precision)

    def __add__(self, other: "Character") -> "Character":
        n = min(self.xi_precision, other.xi_precision)
        return Character.make(
            [self.coeffs[i] + other.coeffs[i] for i in range(n)],
            min(self.q_precision, other.q_precision))

    def __sub__(self, other: "Character") -> "Character":
        return self + other.scale(RationalQ(-1))

    def agrees_with(self, other: "Character") -> bool:
        """Equality on the shared xi-window (series compare their windows)."""
        n = min(self.xi_precision, other.xi_precision)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n))


def character_from_rationals(coeffs, q_prec: int) -> Character:
    return Character.make([expand(c, q_prec) for c in coeffs], q_prec)


# ---------------------------------------------------------------------------
# proper standard characters


def ch_proper_standard(n: int, t: int, xi_prec: int, q_prec: int) -> Character:
    """Graded character of the proper standard module indexed by n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    nfac = RationalQ(qfactorial(n))
    out = [_ZERO] * xi_prec
    f = 0
    while n + 2 * f < xi_prec:
        tpoly = T_recurrence(f, n).poly.substitute_q_power(2)
        out[n + 2 * f] = nfac * RationalQ(tpoly) / one_minus_q_to(-2) ** f
        f += 1
    return character_from_rationals(out, q_prec)


# ---------------------------------------------------------------------------
# irreducible characters, two independent routes


def _xi_coeffs_irreducible(n: int, t: int, xi_prec: int) -> list:
    """Exact RationalQ xi-coefficients of ch L_n via the product form."""
    out = [_ZERO] * xi_prec
    if n < xi_prec:
        out[n] = RationalQ(qfactorial(n))
    for k in range(1, n + 2):
        if k % 2 != t % 2:
            continue
        # multiply by 1/(1 - [k]^2 xi^2): out_new[i] = out[i] + c out_new[i-2]
        c = RationalQ(qint(k)) ** 2
        for i in range(2, xi_prec):
            out[i] = out[i] + c * out[i - 2]
    return out


def ch_irreducible(n: int, t: int, xi_prec: int, q_prec: int) -> Character:
    """Graded character of the irreducible module indexed by n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = _xi_coeffs_irreducible(n, t, xi_prec)
    ch = character_from_rationals(coeffs, q_prec)
    _assert_grading_series(ch, f"ch L_{n} (t={t})")
    return ch


def alpha_tuples(m: int, n: int, t: int) -> list:
    """Weakly increasing alpha in [0,n]^m with every entry != t (mod 2)."""
    allowed = [a for a in range(n + 1) if a % 2 != t % 2]

    def rec(size, lo):
        if size == 0:
            yield ()
            return
        for a in allowed:
            if a < lo:
                continue
            for rest in rec(size - 1, a):
                yield (a,) + rest

    return list(rec(m, 0))


def ch_irreducible_alpha_sum(n: int, t: int, xi_prec: int,
                             q_prec: int) -> Character:
    """Same character via the positive sum over alpha tuples."""
    nfac = RationalQ(qfactorial(n))
    out = [_ZERO] * xi_prec
    m = 0
    while n + 2 * m < xi_prec:
        total = RationalQ(0)
        for alpha in alpha_tuples(m, n, t):
            term = RationalQ(1)
            for a in alpha:
                term = term * RationalQ(qint(a + 1)) ** 2
            total = total + term
        out[n + 2 * m] = nfac * total
        m += 1
    return character_from_rationals(out, q_prec)


def _assert_grading_series(ch: Character, what: str) -> None:
    """Characters of modules must have nonnegative integer q-coefficients."""
    for i, s in enumerate(ch.coeffs):
        for c in s.coeffs:
            if c.denominator != 1 or c < 0:
                raise AssertionError(
                    f"{what}: xi^{i} coefficient has a non-grading value {c}")


# ---------------------------------------------------------------------------
# decomposition numbers and projective multiplicities


def decomposition_number(n: int, m: int, t: int) -> RationalQ:
    """Graded multiplicity of the irreducible indexed by n+2m in the proper
    standard indexed by n: q^(-m(2m-1)) or q^(-m(2m+1)) over (1-q^-4)...(1-q^-4m),
    the exponent depending on whether n = t (mod 2)."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be >= 0")
    e = -m * (2 * m - 1) if n % 2 == t % 2 else -m * (2 * m + 1)
    r = RationalQ(LaurentPoly.q_power(e))
    for k in range(1, m + 1):
        r = r / one_minus_q_to(-4 * k)
    return r


def projective_multiplicity(n: int, m: int, t: int) -> LaurentPoly:
    """Multiplicity of P_{n-2m} in B^n: [n-2m]! sum over alpha of prod [a_i+1]^2."""
    if not 0 <= 2 * m <= n:
        raise ValueError("need 0 <= 2m <= n")
    total = LaurentPoly.zero()
    for alpha in alpha_tuples(m, n - 2 * m, t):
        term = LaurentPoly.one()
        for a in alpha:
            term = term * qint(a + 1) * qint(a + 1)
        total = total + term
    return qfactorial(n - 2 * m) * total


# ---------------------------------------------------------------------------
# graded dimensions of the base ring and hom spaces


def gamma_dimension(q_prec: int) -> LaurentSeriesQinv:
    """dim_q of the base ring: prod_{j >= 0} 1/(1 - q^-(4j+2)).

    One free generator in each degree 4j+2; the coefficient of q^-d counts
    monomials of degree d.
    """
    if q_prec < 1:
        raise ValueError("precision must be >= 1")
    r = RationalQ(1)
    j = 0
    while 4 * j + 2 <= q_prec - 1:
        r = r / one_minus_q_to(-(4 * j + 2))
        j += 1
    return expand(r, q_prec)


def gamma_dimension_partition_count(q_prec: int) -> LaurentSeriesQinv:
    """Independent route: count partitions with parts in {2, 6, 10, ...}."""
    counts = [0] * q_prec
    counts[0] = 1
    part = 2
    while part <= q_prec - 1:
        for d in range(part, q_prec):
            counts[d] += counts[d - part]
        part += 4
    return LaurentSeriesQinv(0, [Fraction(c) for c in counts])


def hom_dimension(m: int, n: int, t: int, q_prec: int) -> LaurentSeriesQinv:
    """Graded dimension of the hom space from n strands to m strands:
    gamma_dimension times the sesquilinear pairing of B^n with B^m."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be >= 0")
    if (m + n) % 2:
        return zero_series(q_prec)
    pairing = form_i(monomial(n, t), monomial(m, t))
    s = gamma_dimension(q_prec + max(0, _top_of(pairing))) * expand(
        pairing, q_prec)
    for c in s.coeffs:
        if c.denominator != 1 or c < 0:
            raise AssertionError(
                f"hom dimension ({m},{n}) produced a non-grading value {c}")
    return s


def _top_of(r: RationalQ) -> int:
    if r.is_zero():
        return 0
    return r.num.degree() - r.den.degree()


def standard_flag_multiplicity(n: int, q_prec: int) -> LaurentSeriesQinv:
    """Multiplicity series of the proper standard object in the standard one:
    gamma_dimension / ((1-q^-2)(1-q^-4)...(1-q^-2n))."""
    r = RationalQ(1)
    for k in range(1, n + 1):
        r = r / one_minus_q_to(-2 * k)
    return gamma_dimension(q_prec) * expand(r, q_prec)


def standard_flag_multiplicity_partition_count(
        n: int, q_prec: int) -> LaurentSeriesQinv:
    """Independent route: parts 2,6,10,... plus one extra part type for each
    of 2,4,...,2n (sources distinguishable)."""
    types = [p for p in range(2, q_prec, 4)] + \
        [2 * k for k in range(1, n + 1)]
    counts = [0] * q_prec
    counts[0] = 1
    for part in types:
        if part > q_prec - 1:
            continue
        for d in range(part, q_prec):
            counts[d] += counts[d - part]
    return LaurentSeriesQinv(0, [Fraction(c) for c in counts])
