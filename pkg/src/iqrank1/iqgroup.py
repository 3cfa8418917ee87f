"""The split rank-one iquantum group U^i_t over Q(q), for t in {0, 1}.

U^i_t is a polynomial algebra Q(q)[B]; everything interesting lives in the
choice of basis and bilinear form.  Three bases are tracked:

  Monomial    B^n
  PBW         Delta_n, the preimages of divided powers F^(n) under the
              vector-space isomorphism j : U^i_t -> U^- determined by
              j(1) = 1 and j(B u) = F j(u) + R(j(u))
  Canonical   P_n, the distinguished bar-invariant basis ("i-divided powers")

plus the companion model U^- with divided-power basis F^(n), the operator R
adjoint to left multiplication by F, the bilinear forms on both sides, and
the sesquilinear refinement of the form on U^i_t.

Everything is exact: coefficients are RationalQ values.  The parity t is a
field of each element, never global state.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .chords import T_recurrence
from .qseries import (
    LaurentPoly,
    RationalQ,
    one_minus_q_to,
    qfactorial,
    qint,
)

MONOMIAL = "Monomial"
PBW = "PBW"
CANONICAL = "Canonical"
_BASES = (MONOMIAL, PBW, CANONICAL)

_ZERO = RationalQ(0)
_ONE = RationalQ(1)


def _trim(coeffs) -> tuple:
    cs = [c if isinstance(c, RationalQ) else RationalQ(c) for c in coeffs]
    while cs and cs[-1].is_zero():
        cs.pop()
    return tuple(cs)


class IQElement(NamedTuple):
    t: int
    basis: str
    coeffs: tuple  # RationalQ per degree n = 0, 1, 2, ...

    @staticmethod
    def make(t: int, basis: str, coeffs) -> "IQElement":
        if t not in (0, 1):
            raise ValueError("t must be 0 or 1")
        if basis not in _BASES:
            raise ValueError(f"unknown basis {basis!r}")
        return IQElement(t, basis, _trim(coeffs))

    def coeff(self, n: int) -> RationalQ:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IQElement") -> "IQElement":
        if self.t != other.t or self.basis != other.basis:
            raise ValueError("elements live in different presentations")
        n = max(len(self.coeffs), len(other.coeffs))
        return IQElement.make(
            self.t, self.basis,
            [self.coeff(i) + other.coeff(i) for i in range(n)])

    def scale(self, c) -> "IQElement":
        c = c if isinstance(c, RationalQ) else RationalQ(c)
        return IQElement.make(self.t, self.basis,
                              [c * x for x in self.coeffs])

    def __sub__(self, other: "IQElement") -> "IQElement":
        return self + other.scale(RationalQ(-1))


def monomial(n: int, t: int) -> IQElement:
    """B^n."""
    return IQElement.make(t, MONOMIAL, [_ZERO] * n + [_ONE])


def pbw(n: int, t: int) -> IQElement:
    """Delta_n."""
    return IQElement.make(t, PBW, [_ZERO] * n + [_ONE])


def canonical(n: int, t: int) -> IQElement:
    """P_n."""
    return IQElement.make(t, CANONICAL, [_ZERO] * n + [_ONE])


# ---------------------------------------------------------------------------
# transition coefficients B^m = sum_n w_{m,n} Delta_n


@lru_cache(maxsize=None)
def w_coeff(m: int, n: int) -> RationalQ:
    """Coefficient of Delta_n in B^m.

    Computed by the recurrence w_{0,0} = 1,
    w_{m,n} = [n] w_{m-1,n-1} + (q^n / (1 - q^-2)) w_{m-1,n+1},
    which is left multiplication by B transported through the PBW expansion.
    """
    if m < 0 or n < 0:
        raise ValueError("w_coeff needs m, n >= 0")
    if n > m or (m - n) % 2:
        return _ZERO
    if m == 0:
        return _ONE
    lower = w_coeff(m - 1, n - 1) if n >= 1 else _ZERO
    upper = w_coeff(m - 1, n + 1)
    geom = RationalQ(LaurentPoly.q_power(n)) / one_minus_q_to(-2)
    return RationalQ(qint(n)) * lower + geom * upper


def w_coeff_closed_form(m: int, n: int) -> RationalQ:
    """[n]! T_{f,n}(q^2) / (1-q^-2)^f for m = n + 2f; the independent route."""
    if m < 0 or n < 0:
        raise ValueError("w_coeff needs m, n >= 0")
    if n > m or (m - n) % 2:
        return _ZERO
    f = (m - n) // 2
    tpoly = T_recurrence(f, n).poly.substitute_q_power(2)
    return RationalQ(qfactorial(n)) * RationalQ(tpoly) / one_minus_q_to(-2) ** f


# ---------------------------------------------------------------------------
# basis conversion


@lru_cache(maxsize=None)
def _delta_in_monomials(m: int) -> tuple:
    """Coefficients of Delta_m on the monomial basis (triangular inversion)."""
    coeffs = [_ZERO] * (m + 1)
    coeffs[m] = _ONE
    for n in range(m - 2, -1, -2):
        w = w_coeff(m, n)
        sub = _delta_in_monomials(n)
        for i, c in enumerate(sub):
            coeffs[i] = coeffs[i] - w * c
    inv = RationalQ(qfactorial(m)).inverse()
    return tuple(inv * c for c in coeffs)


def _aden(m: int) -> RationalQ:
    """(1-q^-4)(1-q^-8)...(1-q^-4m)."""
    r = _ONE
    for j in range(1, m + 1):
        r = r * one_minus_q_to(-4 * j)
    return r


def _p_in_pbw(n: int, t: int) -> list:
    """Coefficients of P_n on the PBW basis."""
    out = [_ZERO] * (n + 1)
    d = 1 if n % 2 == t % 2 else 0
    for m in range(n // 2 + 1):
        e = -m * (2 * m + 1 - 2 * d)
        out[n - 2 * m] = RationalQ(LaurentPoly.q_power(e)) / _aden(m)
    return out

def _delta_in_p(n: int, t: int) -> list:
    """Coefficients of Delta_n on the canonical basis."""
    out = [_ZERO] * (n + 1)
    d = 1 if n % 2 != t % 2 else 0
    for m in range(n // 2 + 1):
        e = -m * (2 * d + 1)
        sign = -1 if m % 2 else 1
        out[n - 2 * m] = RationalQ(LaurentPoly.q_power(e, sign)) / _aden(m)
    return out


def convert(e: IQElement, target: str) -> IQElement:
    """Rewrite e on the target basis (same element of U^i_t)."""
    if target not in _BASES:
        raise ValueError(f"unknown basis {target!r}")
    if e.basis == target:
        return e
    if e.basis == MONOMIAL and target == PBW:
        out = [_ZERO] * len(e.coeffs)
        for m, c in enumerate(e.coeffs):
            if c.is_zero():
                continue
            for n in range(m % 2, m + 1, 2):
                out[n] = out[n] + c * w_coeff(m, n)
        return IQElement.make(e.t, PBW, out)
    if e.basis == PBW and target == MONOMIAL:
        out = [_ZERO] * len(e.coeffs)
        for m, c in enumerate(e.coeffs):
            if c.is_zero():
                continue
            for i, x in enumerate(_delta_in_monomials(m)):
                out[i] = out[i] + c * x
        return IQElement.make(e.t, MONOMIAL, out)
    if e.basis == CANONICAL and target == PBW:
        out = [_ZERO] * len(e.coeffs)
        for n, c in enumerate(e.coeffs):
            if c.is_zero():
                continue
            for i, x in enumerate(_p_in_pbw(n, e.t)):
                out[i] = out[i] + c * x
        return IQElement.make(e.t, PBW, out)
    if e.basis == PBW and target == CANONICAL:
        out = [_ZERO] * len(e.coeffs)
        for n, c in enumerate(e.coeffs):
            if c.is_zero():
                continue
            for i, x in enumerate(_delta_in_p(n, e.t)):
                out[i] = out[i] + c * x
        return IQElement.make(e.t, CANONICAL, out)
    # remaining pairs route through PBW
    return convert(convert(e, PBW), target)


# ---------------------------------------------------------------------------
# multiplication by B


def mulB(e: IQElement) -> IQElement:
    """Left multiplication by B, expressed on the same basis as e."""
    n_out = len(e.coeffs) + 1
    out = [_ZERO] * (n_out + 1)
    if e.basis == MONOMIAL:
        for n, c in enumerate(e.coeffs):
            out[n + 1] = out[n + 1] + c
    elif e.basis == PBW:
        # B Delta_n = [n+1] Delta_{n+1} + (q^(n-1)/(1-q^-2)) Delta_{n-1}
        for n, c in enumerate(e.coeffs):
            if c.is_zero():
                continue
            out[n + 1] = out[n + 1] + c * RationalQ(qint(n + 1))
            if n >= 1:
                low = RationalQ(LaurentPoly.q_power(n - 1)) / one_minus_q_to(-2)
                out[n - 1] = out[n - 1] + c * low
    elif e.basis == CANONICAL:
        # B P_n = [n+1] P_{n+1} + delta_{n = t mod 2} [n] P_{n-1}
        for n, c in enumerate(e.coeffs):
            if c.is_zero():
                continue
            out[n + 1] = out[n + 1] + c * RationalQ(qint(n + 1))
            if n >= 1 and n % 2 == e.t % 2:
                out[n - 1] = out[n - 1] + c * RationalQ(qint(n))
    else:
        raise ValueError(f"unknown basis {e.basis!r}")
    return IQElement.make(e.t, e.basis, out)


def canonical_closed_form(n: int, t: int) -> IQElement:
    """P_n on the monomial basis via the i-divided-power product formula.

    P_n = B^(sigma) prod_{0 <= k < n, k = t mod 2} (B^2 - [k]^2) / [n]!
    where sigma is 0 for even n, -1 for odd n with t=0 (the k=0 factor
    supplies the B to cancel), and +1 for odd n with t=1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    poly = [_ONE]  # coefficients in B
    for k in range(t % 2, n, 2):
        sq = RationalQ(qint(k)) ** 2
        new = [_ZERO] * (len(poly) + 2)
        for i, c in enumerate(poly):
            new[i + 2] = new[i + 2] + c
            new[i] = new[i] - sq * c
        poly = new
    if n % 2 == 1 and t == 0:
        if not poly[0].is_zero():
            raise AssertionError("product not divisible by B")
        poly = poly[1:]
    elif n % 2 == 1 and t == 1:
        poly = [_ZERO] + poly
    inv = RationalQ(qfactorial(n)).inverse()
    return IQElement.make(t, MONOMIAL, [inv * c for c in poly])


# ---------------------------------------------------------------------------
# forms


@lru_cache(maxsize=None)
def _pbw_norm(n: int) -> RationalQ:
    """(Delta_n, Delta_n)^i = 1 / prod_{k=1}^n (1 - q^-2k)."""
    r = _ONE
    for k in range(1, n + 1):
        r = r * one_minus_q_to(-2 * k)
    return r.inverse()


def form_i(a: IQElement, b: IQElement) -> RationalQ:
    """The bilinear form; the PBW basis is orthogonal for it."""
    if a.t != b.t:
        raise ValueError("form_i needs matching t")
    pa, pb = convert(a, PBW), convert(b, PBW)
    total = _ZERO
    for n in range(min(len(pa.coeffs), len(pb.coeffs))):
        ca, cb = pa.coeff(n), pb.coeff(n)
        if ca.is_zero() or cb.is_zero():
            continue
        total = total + ca * cb * _pbw_norm(n)
    return total


def sesq_form_i(a: IQElement, b: IQElement) -> RationalQ:
    """Sesquilinear refinement: bar the left argument's monomial coefficients.

    The relevant anti-linear involution fixes every power of B, so on the
    monomial basis it is exactly bar applied coefficientwise.
    """
    am = convert(a, MONOMIAL)
    barred = IQElement.make(am.t, MONOMIAL, [c.bar() for c in am.coeffs])
    return form_i(barred, b)


# ---------------------------------------------------------------------------
# the companion U^- with divided powers F^(n)


class UMinusElement(NamedTuple):
    coeffs: tuple  # RationalQ per divided power F^(n)

    @staticmethod
    def make(coeffs) -> "UMinusElement":
        return UMinusElement(_trim(coeffs))

    def coeff(self, n: int) -> RationalQ:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else _ZERO

    def __add__(self, other: "UMinusElement") -> "UMinusElement":
        n = max(len(self.coeffs), len(other.coeffs))
        return UMinusElement.make(
            [self.coeff(i) + other.coeff(i) for i in range(n)])


def divided_power(n: int) -> UMinusElement:
    """F^(n) = F^n / [n]!."""
    return UMinusElement.make([_ZERO] * n + [_ONE])


def mulF(y: UMinusElement) -> UMinusElement:
    """Left multiplication by F: F F^(n) = [n+1] F^(n+1)."""
    out = [_ZERO] * (len(y.coeffs) + 1)
    for n, c in enumerate(y.coeffs):
        out[n + 1] = c * RationalQ(qint(n + 1))
    return UMinusElement.make(out)


def R_op(y: UMinusElement) -> UMinusElement:
    """The adjoint of left multiplication by F with respect to the form:

    R(1) = 0,  R(F^(n)) = (q^(n-1)/(1-q^-2)) F^(n-1).
    """
    out = [_ZERO] * max(0, len(y.coeffs) - 1)
    for n, c in enumerate(y.coeffs):
        if n == 0 or c.is_zero():
            continue
        out[n - 1] = c * RationalQ(LaurentPoly.q_power(n - 1)) / one_minus_q_to(-2)
    return UMinusElement.make(out)


def form_minus(y1: UMinusElement, y2: UMinusElement) -> RationalQ:
    """(F^(m), F^(n))^- = delta_{m,n} / prod_{k=1}^n (1 - q^-2k)."""
    total = _ZERO
    for n in range(min(len(y1.coeffs), len(y2.coeffs))):
        c1, c2 = y1.coeff(n), y2.coeff(n)
        if c1.is_zero() or c2.is_zero():
            continue
        total = total + c1 * c2 * _pbw_norm(n)
    return total


def j_map(e: IQElement) -> UMinusElement:
    """The vector-space isomorphism U^i_t -> U^-, sending Delta_n to F^(n)."""
    p = convert(e, PBW)
    return UMinusElement.make(p.coeffs)
