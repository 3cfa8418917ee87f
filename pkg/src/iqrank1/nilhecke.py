"""The nil-Hecke algebra on n strands, over the integers.

Generators x_1..x_n (dots, degree 2) and tau_1..tau_{n-1} (crossings,
degree -2) subject to: polynomial generators commute, tau_i^2 = 0, far
generators commute, the braid relation, and

    x_i tau_i - tau_i x_{i+1} = 1 = tau_i x_i - x_{i+1} tau_i.

Elements are stored on the basis x^a tau_w (monomial times a reduced word
for a permutation w); products are straightened onto that basis with the
rule tau_i p = s_i(p) tau_i + d_i(p), where d_i is the Demazure operator

    d_i(f) = (f - s_i f) / (x_i - x_{i+1}),

evaluated on monomials by an exact summation formula (no division).  The
algebra acts faithfully on polynomials with x_i as multiplication and tau_i
as d_i; that representation doubles as an independent multiplication oracle.

Also provided: the degree-zero idempotent e_n = x^rho tau_{w_n} with
rho = (n-1, ..., 1, 0) and w_n the longest permutation, and the irreducible
graded module on the coinvariant algebra, with monomial basis x^r ubar for
0 <= r_i <= n-i and graded dimension [n]!.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from .qseries import LaurentPoly, qfactorial

# ---------------------------------------------------------------------------
# permutations: one-line notation, 0-indexed images; generators 1-indexed


def perm_id(n: int) -> tuple:
    return tuple(range(n))

def perm_mul(u: tuple, v: tuple) -> tuple:
    """(u v)(j) = u(v(j)): v acts first."""
    return tuple(u[v[j]] for j in range(len(u)))


def perm_inversions(w: tuple) -> int:
    return sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])


def _swap_values(w: tuple, i: int) -> tuple:
    """Left multiplication by s_i: swap the values i-1 and i (0-indexed)."""
    a, b = i - 1, i
    return tuple(b if x == a else a if x == b else x for x in w)


def _tau_times_perm(i: int, w: tuple):
    """tau_i tau_w on the nil-Coxeter monoid: tau_{s_i w} or None (zero)."""
    if w.index(i - 1) < w.index(i):
        return _swap_values(w, i)
    return None


@lru_cache(maxsize=None)
def lex_min_reduced_word(w: tuple) -> tuple:
    """Lexicographically smallest reduced word, peeling left descents."""
    word = []
    cur = w
    while True:
        for i in range(1, len(cur)):
            if cur.index(i - 1) > cur.index(i):  # s_i shortens from the left
                word.append(i)
                cur = _swap_values(cur, i)
                break
        else:
            break
    return tuple(word)


def longest_element(n: int) -> tuple:
    return tuple(range(n - 1, -1, -1))


# ---------------------------------------------------------------------------
# polynomials: dict {exponent tuple: int coefficient}, no zero entries


def poly_add(p: dict, q: dict) -> dict:
    out = {m: c for m, c in p.items() if c}
    for m, c in q.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        elif m in out:
            del out[m]
    return out


def poly_scale(p: dict, c: int) -> dict:
    return {m: v * c for m, v in p.items()} if c else {}


def poly_mul(p: dict, q: dict) -> dict:
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            s = out.get(m, 0) + c1 * c2
            if s:
                out[m] = s
            elif m in out:
                del out[m]
    return out


def _demazure_mono(mono: tuple, i: int) -> dict:
    """d_i on a monomial: an exact sum, positive when x_i dominates.

    d_i(x_i^a x_{i+1}^b) = sum_{k=b}^{a-1} x_i^k x_{i+1}^{a+b-1-k} for a > b,
    the negated mirror sum for a < b, and 0 for a = b.
    """
    a, b = mono[i - 1], mono[i]
    if a == b:
        return {}
    sign = 1 if a > b else -1
    lo, hi = (b, a - 1) if a > b else (a, b - 1)
    out = {}
    for k in range(lo, hi + 1):
        m = list(mono)
        m[i - 1], m[i] = k, a + b - 1 - k
        out[tuple(m)] = sign
    return out


def demazure(i: int, p: dict, n: int) -> dict:
    """The Demazure operator d_i = (1 - s_i)/(x_i - x_{i+1}) on polynomials."""
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} out of range for n={n}")
    out = {}
    for m, c in p.items():
        out = poly_add(out, poly_scale(_demazure_mono(m, i), c))
    return out


def _swap_mono(mono: tuple, i: int) -> tuple:
    m = list(mono)
    m[i - 1], m[i] = m[i], m[i - 1]
    return tuple(m)


# ---------------------------------------------------------------------------
# algebra elements


class NHElement(NamedTuple):
    n: int
    terms: tuple  # sorted tuple of ((exponents, permutation), coefficient)

    @staticmethod
    def make(n: int, terms: dict) -> "NHElement":
        clean = {k: c for k, c in terms.items() if c}
        return NHElement(n, tuple(sorted(clean.items())))

    def term_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "NHElement") -> "NHElement":
        if self.n != other.n:
            raise ValueError("strand counts differ")
        d = self.term_dict()
        for k, c in other.terms:
            s = d.get(k, 0) + c
            if s:
                d[k] = s
            elif k in d:
                del d[k]
        return NHElement.make(self.n, d)

    def scale(self, c: int) -> "NHElement":
        return NHElement.make(self.n, {k: v * c for k, v in self.terms})

    def __sub__(self, other: "NHElement") -> "NHElement":
        return self + other.scale(-1)

    def degrees(self) -> set:
        """Degrees 2|a| - 2 l(w) present among the terms."""
        return {2 * sum(a) - 2 * perm_inversions(w)
                for (a, w), _ in self.terms}


def nh_zero(n: int) -> NHElement:
    return NHElement.make(n, {})


def nh_one(n: int) -> NHElement:
    return NHElement.make(n, {((0,) * n, perm_id(n)): 1})


def nh_x(i: int, n: int) -> NHElement:
    if not 1 <= i <= n:
        raise ValueError(f"x index {i} out of range for n={n}")
    e = tuple(1 if j == i - 1 else 0 for j in range(n))
    return NHElement.make(n, {(e, perm_id(n)): 1})


def nh_tau(i: int, n: int) -> NHElement:
    if not 1 <= i < n:
        raise ValueError(f"tau index {i} out of range for n={n}")
    return NHElement.make(n, {((0,) * n, _swap_values(perm_id(n), i)): 1})


def nh_monomial(exponents, n: int) -> NHElement:
    e = tuple(exponents)
    if len(e) != n or any(a < 0 for a in e):
        raise ValueError("bad exponent vector")
    return NHElement.make(n, {(e, perm_id(n)): 1})


def nh_from_poly(p: dict, n: int) -> NHElement:
    return NHElement.make(n, {(m, perm_id(n)): c for m, c in p.items()})


def nh_tau_word(word, n: int) -> NHElement:
    out = nh_one(n)
    for i in word:
        out = nh_multiply(out, nh_tau(i, n))
    return out


def _tau_left_terms(i: int, terms: dict, n: int) -> dict:
    """Left multiply a straightened term dict by tau_i."""
    out = {}
    for (a, w), c in terms.items():
        tw = _tau_times_perm(i, w)
        if tw is not None:
            k = (_swap_mono(a, i), tw)
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        for mono, mc in _demazure_mono(a, i).items():
            k = (mono, w)
            s = out.get(k, 0) + c * mc
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def nh_multiply(a: NHElement, b: NHElement) -> NHElement:
    """Product straightened onto the x^a tau_w basis."""
    if a.n != b.n:
        raise ValueError("strand counts differ")
    n = a.n
    result = {}
    bterms = b.term_dict()
    for (mono, w), c in a.terms:
        cur = bterms
        for i in reversed(lex_min_reduced_word(w)):
            cur = _tau_left_terms(i, cur, n)
        for (m2, w2), c2 in cur.items():
            m = tuple(x + y for x, y in zip(mono, m2))
            k = (m, w2)
            s = result.get(k, 0) + c * c2
            if s:
                result[k] = s
            elif k in result:
                del result[k]
    return NHElement.make(n, result)


def e_idempotent(n: int) -> NHElement:
    """The degree-zero idempotent x1^(n-1) x2^(n-2) ... x_{n-1} tau_{w_n}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rho = tuple(n - 1 - j for j in range(n))
    return NHElement.make(n, {(rho, longest_element(n)): 1})


# ---------------------------------------------------------------------------
# polynomial representation (multiplication oracle)


def poly_action(a: NHElement, p: dict) -> dict:
    """Act on a polynomial: x_i multiplies, tau_i applies d_i."""
    n = a.n
    out = {}
    for (mono, w), c in a.terms:
        cur = p
        for i in reversed(lex_min_reduced_word(w)):
            cur = demazure(i, cur, n)
        cur = poly_mul({mono: 1}, cur)
        out = poly_add(out, poly_scale(cur, c))
    return out


# ---------------------------------------------------------------------------
# the irreducible graded module on the coinvariant algebra


@lru_cache(maxsize=None)
def _complete_homogeneous(d: int, k: int, n: int) -> tuple:
    """Monomials of h_d(x_1, ..., x_k) as full n-variable exponent tuples."""
    out = []

    def rec(var, remaining, acc):
        if var == k - 1:
            acc[var] = remaining
            out.append(tuple(acc) + (0,) * (n - k))
            acc[var] = 0
            return
        for e in range(remaining + 1):
            acc[var] = e
            rec(var + 1, remaining - e, acc)
            acc[var] = 0

    rec(0, d, [0] * k)
    return tuple(out)


def _reduce_coinvariant(p: dict, n: int) -> dict:
    """Reduce modulo the positive-degree symmetric polynomials.

    The ideal they generate contains h_{n-k+1}(x_1, ..., x_k) for each k,
    whose extreme monomial x_k^(n-k+1) can be rewritten in terms of
    monomials that are strictly smaller when tuples are compared with the
    last variable most significant; that order proves termination.  The
    surviving monomials satisfy 0 <= r_i <= n-i.
    """
    work = dict(p)
    done = {}
    while work:
        mono = max(work, key=lambda m: m[::-1])
        c = work.pop(mono)
        for k in range(1, n + 1):
            if mono[k - 1] >= n - k + 1:
                d = n - k + 1
                rest = list(mono)
                rest[k - 1] -= d
                rest = tuple(rest)
                for h_mono in _complete_homogeneous(d, k, n):
                    if h_mono[k - 1] == d:
                        continue
                    m = tuple(x + y for x, y in zip(rest, h_mono))
                    s = work.get(m, 0) - c
                    if s:
                        work[m] = s
                    elif m in work:
                        del work[m]
                break
        else:
            s = done.get(mono, 0) + c
            if s:
                done[mono] = s
            elif mono in done:
                del done[mono]
    return done


class LnVector(NamedTuple):
    n: int
    coords: tuple  # sorted ((exponents), coefficient), 0 <= r_i <= n-i

    @staticmethod
    def make(n: int, coords: dict) -> "LnVector":
        clean = {}
        for m, c in coords.items():
            if any(m[i] > n - 1 - i for i in range(n)):
                raise ValueError(f"monomial {m} outside the reduced basis")
            if c:
                clean[m] = c
        return LnVector(n, tuple(sorted(clean.items())))

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: "LnVector") -> "LnVector":
        if self.n != other.n:
            raise ValueError("strand counts differ")
        d = dict(self.coords)
        for m, c in other.coords:
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            elif m in d:
                del d[m]
        return LnVector.make(self.n, d)


def ln_lowest_weight(n: int) -> LnVector:
    """The generating vector ubar."""
    return LnVector.make(n, {(0,) * n: 1})


def ln_action(a: NHElement, v: LnVector) -> LnVector:
    """Action on the irreducible module: act on polynomials, then reduce."""
    if a.n != v.n:
        raise ValueError("strand counts differ")
    p = poly_action(a, dict(v.coords))
    return LnVector.make(v.n, _reduce_coinvariant(p, v.n))


def ln_basis(n: int) -> list:
    """All basis monomials x^r with 0 <= r_i <= n-i."""
    out = [()]
    for i in range(n):
        out = [m + (e,) for m in out for e in range(n - i)]
    return out


def ln_graded_dimension(n: int) -> LaurentPoly:
    """dim_q of the module: q^(-deg) per basis vector, deg x^r ubar =
    2|r| - n(n-1)/2; equals [n]!."""
    shift = n * (n - 1) // 2
    d = {}
    for m in ln_basis(n):
        e = -(2 * sum(m) - shift)
        d[e] = d.get(e, 0) + 1
    return LaurentPoly(d)
