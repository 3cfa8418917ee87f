"""Exact arithmetic over the rings used everywhere else in this package.

Three layers, all built on integer / Fraction coefficients so that every
computation is exact:

  * LaurentPoly      -- Z[q, q^-1], sparse dict {exponent: coefficient}
  * RationalQ        -- quotients of Laurent polynomials, kept in a canonical
                        reduced form so equality is just structural equality
  * LaurentSeriesQinv -- truncated expansions "from the top down" in powers
                        of q^-1, used for numerical-looking but exact checks

Also the standard quantum combinatorics built from these:

  qint(n)            [n] = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ...
  qfactorial(n)      [n]! = [1][2]...[n]
  classical_qint(n)  {n} = 1 + q + ... + q^(n-1)
  bar                the ring involution q -> q^-1
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class LaurentPoly:
    """Integer Laurent polynomial in q, stored as {exponent: nonzero coeff}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in coeffs.items():
                c = int(c)
                if c:
                    d[int(e)] = c
        self.coeffs = d

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def q_power(k: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({k: coeff})

    @staticmethod
    def from_int(n: int) -> "LaurentPoly":
        return LaurentPoly({0: n})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Largest exponent with nonzero coefficient (error on zero)."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def valuation(self) -> int:
        """Smallest exponent with nonzero coefficient (error on zero)."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self.coeffs)

    def coeff(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs.values():
            g = _int_gcd(g, abs(c))
        return g

    def leading_coeff(self) -> int:
        return self.coeffs[self.degree()]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            elif e in d:
                del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = d
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = d.get(e, 0) + c1 * c2
                if s:
                    d[e] = s
                elif e in d:
                    del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = d
        return out

    def scale(self, n: int) -> "LaurentPoly":
        n = int(n)
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: c * n for e, c in self.coeffs.items()} if n else {}
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return out

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial; use RationalQ")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {-e: c for e, c in self.coeffs.items()}
        return out

    def evaluate_at_one(self) -> int:
        return sum(self.coeffs.values())

    def substitute_q_power(self, k: int) -> "LaurentPoly":
        """q -> q^k (k nonzero), e.g. k=2 turns p(q) into p(q^2)."""
        if k == 0:
            raise ValueError("substitution q -> q^0 is not invertible")
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e * k: c for e, c in self.coeffs.items()}
        return out

    # -- comparison / hashing / display -------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"

    def __str__(self) -> str:
        return format_laurent(self.coeffs)


def format_laurent(coeffs: dict) -> str:
    """Deterministic human-readable form, highest exponent first."""
    if not coeffs:
        return "0"
    parts = []
    for e in sorted(coeffs, reverse=True):
        c = coeffs[e]
        if e == 0:
            term = str(abs(c) if parts else c)
        else:
            q = "q" if e == 1 else f"q^{e}"
            a = abs(c) if parts else c
            if a == 1:
                term = q
            elif a == -1:
                term = f"-{q}"
            else:
                term = f"{a}*{q}"
        if parts:
            parts.append(" - " if c < 0 else " + ")
        parts.append(term)
    return "".join(parts)


# ---------------------------------------------------------------------------
# quantum integers


def qint(n: int) -> LaurentPoly:
    """[n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [-n] = -[n], [0] = 0."""
    if n < 0:
        return -qint(-n)
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


def qfactorial(n: int) -> LaurentPoly:
    """[n]! = [1][2]...[n], with [0]! = 1."""
    if n < 0:
        raise ValueError("qfactorial needs n >= 0")
    result = LaurentPoly.one()
    for k in range(2, n + 1):
        result = result * qint(k)
    return result


def bar(p):
    """The involution q -> q^-1, on either a LaurentPoly or a RationalQ."""
    return p.bar()


def classical_qint(n: int) -> LaurentPoly:
    """{n} = 1 + q + ... + q^(n-1) = q^((n-1)/2) [n] after balancing; {0} = 0."""
    if n < 0:
        raise ValueError("classical_qint needs n >= 0")
    return LaurentPoly({i: 1 for i in range(n)})


# ---------------------------------------------------------------------------
# dense helpers on plain lists, used by gcd/division (internal)


def _poly_to_list(p: LaurentPoly) -> tuple[int, list]:
    """Return (valuation, ascending coefficient list) for nonzero p."""
    v = p.valuation()
    d = p.degree()
    return v, [p.coeff(e) for e in range(v, d + 1)]


def _list_to_poly(v: int, xs: list) -> LaurentPoly:
    return LaurentPoly({v + i: c for i, c in enumerate(xs) if c})


def _frac_divmod(a: list, b: list):
    """Polynomial division over Q on ascending Fraction lists; returns (q, r)."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = a[:]
    while len(r) >= len(b) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        shift = len(r) - len(b)
        factor = r[-1] / b[-1]
        q[shift] = factor
        for i, bc in enumerate(b):
            r[shift + i] -= factor * bc
        r.pop()
    return q, r


def _primitive(xs: list) -> list:
    """Scale a rational coefficient list to a primitive integer list, lead > 0."""
    from math import lcm

    denoms = [Fraction(c).denominator for c in xs if c]
    if not denoms:
        return []
    m = 1
    for d in denoms:
        m = lcm(m, d)
    ints = [int(Fraction(c) * m) for c in xs]
    g = 0
    for c in ints:
        g = _int_gcd(g, abs(c))
    ints = [c // g for c in ints]
    lead = next(c for c in reversed(ints) if c)
    if lead < 0:
        ints = [-c for c in ints]
    return ints


def _poly_gcd_primitive(a: list, b: list) -> list:
    """Primitive gcd in Z[q] of two ascending integer lists (either nonzero)."""
    a = [c for c in a]
    b = [c for c in b]
    while any(b):
        _, r = _frac_divmod(a, b)
        a, b = b, r
    return _primitive(a)


def _poly_divexact(a: list, g: list) -> list:
    """Exact division a / g of ascending integer lists; asserts exactness."""
    q, r = _frac_divmod(a, g)
    if any(r):
        raise ArithmeticError("division was not exact")
    out = []
    for c in q:
        f = Fraction(c)
        if f.denominator != 1:
            raise ArithmeticError("division was not exact over Z")
        out.append(int(f))
    while out and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# RationalQ


class RationalQ:
    """Element of Q(q) as num/den of integer Laurent polynomials.

    Canonical form: den has valuation 0 and positive leading coefficient,
    num/den is reduced over Q[q], and gcd(content(num), content(den)) = 1.
    Two canonical values are equal iff they are structurally equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RationalQ) and den is None:
            self.num, self.den = num.num, num.den
            return
        num = _coerce_poly(num)
        den = LaurentPoly.one() if den is None else _coerce_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("RationalQ with zero denominator")
        self.num, self.den = _normalize(num, den)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == LaurentPoly.one()

    def as_laurent(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError(f"not a Laurent polynomial: {self}")
        return self.num

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "RationalQ":
        other = _coerce_rational(other)
        return RationalQ(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalQ":
        out = RationalQ.__new__(RationalQ)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other) -> "RationalQ":
        return self + (-_coerce_rational(other))

    def __rsub__(self, other) -> "RationalQ":
        return _coerce_rational(other) + (-self)

    def __mul__(self, other) -> "RationalQ":
        other = _coerce_rational(other)
        return RationalQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalQ":
        other = _coerce_rational(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        return RationalQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalQ":
        return _coerce_rational(other) / self

    def inverse(self) -> "RationalQ":
        return RationalQ(self.den, self.num)

    def __pow__(self, n: int) -> "RationalQ":
        if n < 0:
            return self.inverse() ** (-n)
        result = RationalQ(LaurentPoly.one())
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def bar(self) -> "RationalQ":
        """q -> q^-1, extended to Q(q)."""
        return RationalQ(self.num.bar(), self.den.bar())

    def substitute_q_power(self, k: int) -> "RationalQ":
        return RationalQ(self.num.substitute_q_power(k),
                         self.den.substitute_q_power(k))

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = _coerce_rational(other)
        if not isinstance(other, RationalQ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalQ({self.num.coeffs!r}, {self.den.coeffs!r})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _coerce_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.from_int(x)
    if isinstance(x, dict):
        return LaurentPoly(x)
    raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")


def _coerce_rational(x) -> RationalQ:
    if isinstance(x, RationalQ):
        return x
    return RationalQ(_coerce_poly(x))


def _normalize(num: LaurentPoly, den: LaurentPoly):
    if num.is_zero():
        return LaurentPoly.zero(), LaurentPoly.one()
    # shift all q-powers into the numerator so the denominator has valuation 0
    vd = den.valuation()
    vn = num.valuation()
    den = den.shift(-vd)
    num = num.shift(-vn)
    qshift = vn - vd
    # cancel the polynomial gcd over Q[q] (both now valuation 0, but the gcd
    # only needs nonnegative supports, which holds)
    _, na = _poly_to_list(num)
    _, da = _poly_to_list(den)
    g = _poly_gcd_primitive(na, da)
    if len(g) > 1 or g[0] != 1:
        na = _poly_divexact(na, g)
        da = _poly_divexact(da, g)
    # cancel shared integer content
    cn = 0
    for c in na:
        cn = _int_gcd(cn, abs(c))
    cd = 0
    for c in da:
        cd = _int_gcd(cd, abs(c))
    c = _int_gcd(cn, cd)
    if c > 1:
        na = [x // c for x in na]
        da = [x // c for x in da]
    # positive leading coefficient downstairs
    if da[-1] < 0:
        na = [-x for x in na]
        da = [-x for x in da]
    num = _list_to_poly(qshift, na)
    # the division may reintroduce valuation in the num factor only via qshift
    den = _list_to_poly(0, da)
    if den.valuation() != 0:
        # gcd cancelled the constant term's q^0? cannot happen: both inputs had
        # valuation 0 and the gcd of valuation-0 polys has valuation 0
        raise AssertionError("canonical denominator lost valuation 0")
    return num, den


# convenient constants

Q = LaurentPoly.q_power(1)
ONE = RationalQ(LaurentPoly.one())
ZERO = RationalQ(LaurentPoly.zero())


def one_minus_q_to(k: int) -> RationalQ:
    """The scalar 1 - q^k as a RationalQ (k may be negative)."""
    return RationalQ(LaurentPoly({0: 1, k: -1}))


# ---------------------------------------------------------------------------
# truncated Laurent series in q^-1


class LaurentSeriesQinv:
    """Truncated series c_0 q^t + c_1 q^(t-1) + ... with exact coefficients.

    The series stands for an element that is *known to vanish* above
    top_exponent and is known exactly on the window
    [top_exponent - precision + 1, top_exponent]; below that it is unknown.
    Coefficients are Fractions, stored from the top exponent downward.
    """

    __slots__ = ("top_exponent", "coeffs")

    def __init__(self, top_exponent: int, coeffs):
        self.top_exponent = int(top_exponent)
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("series needs at least one retained coefficient")

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    @property
    def floor_exponent(self) -> int:
        """Lowest exponent whose coefficient is known."""
        return self.top_exponent - self.precision + 1

    def coeff(self, e: int) -> Fraction:
        """Coefficient of q^e; error if e is below the known window."""
        if e > self.top_exponent:
            return Fraction(0)
        if e < self.floor_exponent:
            raise ValueError(f"q^{e} is below the known window of {self}")
        return self.coeffs[self.top_exponent - e]

    def truncate(self, precision: int) -> "LaurentSeriesQinv":
        if precision < 1:
            raise ValueError("precision must be >= 1")
        if precision >= self.precision:
            return self
        return LaurentSeriesQinv(self.top_exponent, self.coeffs[:precision])

    # -- arithmetic (knowledge windows intersect) ----------------------------

    def __add__(self, other) -> "LaurentSeriesQinv":
        if not isinstance(other, LaurentSeriesQinv):
            raise TypeError("add series to series; wrap scalars explicitly")
        top = max(self.top_exponent, other.top_exponent)
        floor = max(self.floor_exponent, other.floor_exponent)
        if floor > top:
            raise ValueError("sum has an empty knowledge window")
        coeffs = [self._safe(e) + other._safe(e) for e in range(top, floor - 1, -1)]
        return LaurentSeriesQinv(top, coeffs)

    def _safe(self, e: int) -> Fraction:
        return Fraction(0) if e > self.top_exponent else self.coeffs[self.top_exponent - e]

    def __neg__(self) -> "LaurentSeriesQinv":
        return LaurentSeriesQinv(self.top_exponent, [-c for c in self.coeffs])

    def __sub__(self, other) -> "LaurentSeriesQinv":
        return self + (-other)

    def __mul__(self, other) -> "LaurentSeriesQinv":
        if isinstance(other, (int, Fraction)):
            return LaurentSeriesQinv(self.top_exponent,
                                     [c * other for c in self.coeffs])
        top = self.top_exponent + other.top_exponent
        floor = max(self.floor_exponent + other.top_exponent,
                    other.floor_exponent + self.top_exponent)
        out = []
        for e in range(top, floor - 1, -1):
            s = Fraction(0)
            # e = e1 + e2 with e1, e2 inside the known windows
            lo = max(self.floor_exponent, e - other.top_exponent)
            hi = min(self.top_exponent, e - other.floor_exponent)
            for e1 in range(lo, hi + 1):
                s += self._safe(e1) * other._safe(e - e1)
            out.append(s)
        return LaurentSeriesQinv(top, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentSeriesQinv":
        """Multiply by q^k."""
        return LaurentSeriesQinv(self.top_exponent + k, self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeriesQinv):
            return NotImplemented
        # compare on the common knowledge window; both must vanish above it
        top = max(self.top_exponent, other.top_exponent)
        floor = max(self.floor_exponent, other.floor_exponent)
        if floor > top:
            return False
        return all(self._safe(e) == other._safe(e) for e in range(floor, top + 1))

    def __hash__(self):
        raise TypeError("truncated series are not hashable")

    def __repr__(self) -> str:
        return (f"LaurentSeriesQinv(top={self.top_exponent}, "
                f"prec={self.precision}, coeffs={self.coeffs})")

    def __str__(self) -> str:
        d = {self.top_exponent - i: c for i, c in enumerate(self.coeffs) if c}
        body = format_laurent({e: c for e, c in d.items()}) if d else "0"
        return f"{body} + O(q^{self.floor_exponent - 1})"


def series_from_laurent(p: LaurentPoly, precision: int,
                        top_exponent=None) -> LaurentSeriesQinv:
    """View an exact Laurent polynomial as a truncated series."""
    if top_exponent is None:
        top_exponent = p.degree() if not p.is_zero() else 0
    coeffs = [p.coeff(top_exponent - i) for i in range(precision)]
    return LaurentSeriesQinv(top_exponent, coeffs)


def expand(r: RationalQ, precision: int) -> LaurentSeriesQinv:
    """Expand num/den as a series in descending powers of q.

    The denominator is inverted as a power series in q^-1 from its top term,
    so e.g. 1/(1 - q^-2) expands to 1 + q^-2 + q^-4 + ...
    """
    if precision < 1:
        raise ValueError("precision must be >= 1")
    if r.is_zero():
        return LaurentSeriesQinv(0, [Fraction(0)] * precision)
    num, den = r.num, r.den
    tn, td = num.degree(), den.degree()
    top = tn - td
    n = [Fraction(num.coeff(tn - i)) for i in range(precision)]
    d = [Fraction(den.coeff(td - i)) for i in range(precision)]
    out = []
    for k in range(precision):
        s = n[k]
        for j in range(k):
            s -= out[j] * d[k - j]
        out.append(s / d[0])
    return LaurentSeriesQinv(top, out)
