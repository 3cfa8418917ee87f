"""Based chord diagrams with tethered and free chords.

A diagram has 2f + n marked points on a circle, labeled 1..2f+n clockwise
starting just after a fixed basepoint.  n of the points are joined to the
basepoint ("tethered" chords); the remaining 2f points are matched in pairs
("free" chords).  Planar isotopy fixing the basepoint never identifies two
distinct labelings, so a diagram is exactly the pair (tethered set, matching).

The crossing number of a diagram is the number of chord pairs whose endpoints
interleave around the circle, treating a tethered chord as the chord
(basepoint, p) with the basepoint preceding position 1.  The generating
function

    T_{f,n}(q) = sum over diagrams of q^(number of crossings)

is computed here two independent ways: brute-force enumeration, and the
recurrence T_{f,n} = T_{f,n-1} + {n+1} T_{f-1,n+1} obtained from a crossing-
aware partition of the diagram set (see partition_step / partition_inverse).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator, NamedTuple

from .qseries import LaurentPoly, classical_qint

DEFAULT_POINT_BOUND = 18


class ResourceBoundError(RuntimeError):
    """Raised when an enumeration or search exceeds its configured bound."""


class ChordDiagram(NamedTuple):
    total_points: int
    tethered: frozenset  # positions joined to the basepoint
    matching: frozenset  # free chords as pairs (a, b) with a < b

    @staticmethod
    def make(total_points: int, tethered, matching) -> "ChordDiagram":
        tethered = frozenset(tethered)
        matching = frozenset(tuple(sorted(p)) for p in matching)
        d = ChordDiagram(total_points, tethered, matching)
        d.validate()
        return d

    def validate(self) -> None:
        n, f2 = len(self.tethered), 2 * len(self.matching)
        if n + f2 != self.total_points:
            raise ValueError("tethered + matched endpoints must cover all points")
        seen = set(self.tethered)
        for a, b in self.matching:
            if a == b:
                raise ValueError("matching has a fixed point")
            for p in (a, b):
                if p in seen:
                    raise ValueError(f"position {p} used twice")
                seen.add(p)
        if seen != set(range(1, self.total_points + 1)):
            raise ValueError("positions must be exactly 1..total_points")

    @property
    def n_tethered(self) -> int:
        return len(self.tethered)

    @property
    def n_free(self) -> int:
        return len(self.matching)

    def chords(self) -> list:
        """All chords as pairs (a, b), a < b, with the basepoint as 0."""
        return [(0, p) for p in sorted(self.tethered)] + sorted(self.matching)


def crossings(d: ChordDiagram) -> int:
    """Number of chord pairs with cyclically interleaved endpoints.

    With the basepoint encoded as position 0, chords (a,b) and (c,d) with
    a < b, c < d and a <= c interleave iff a < c < b < d.  Two tethered
    chords share the basepoint and never cross.
    """
    cs = d.chords()
    count = 0
    for i in range(len(cs)):
        a, b = cs[i]
        for j in range(i + 1, len(cs)):
            c, e = cs[j]
            if a == c:  # both tethered
                continue
            if (a, b) > (c, e):
                a2, b2, c2, e2 = c, e, a, b
            else:
                a2, b2, c2, e2 = a, b, c, e
            if a2 < c2 < b2 < e2:
                count += 1
    return count


def _matchings(points: tuple) -> Iterator[frozenset]:
    if not points:
        yield frozenset()
        return
    first, rest = points[0], points[1:]
    for k in range(len(rest)):
        pair = (first, rest[k])
        for sub in _matchings(rest[:k] + rest[k + 1:]):
            yield sub | {pair}


def enumerate_diagrams(f: int, n: int,
                       point_bound: int = DEFAULT_POINT_BOUND) -> list:
    """All diagrams with f free and n tethered chords (C(2f+n,n)(2f-1)!! many)."""
    if f < 0 or n < 0:
        raise ValueError("f and n must be nonnegative")
    total = 2 * f + n
    if total > point_bound:
        raise ResourceBoundError(
            f"2f+n = {total} exceeds the point bound {point_bound}")
    from itertools import combinations

    out = []
    for teth in combinations(range(1, total + 1), n):
        free_points = tuple(p for p in range(1, total + 1) if p not in teth)
        for m in _matchings(free_points):
            out.append(ChordDiagram(total, frozenset(teth), m))
    return out


def diagram_count(f: int, n: int) -> int:
    """C(2f+n, n) * (2f-1)!!"""
    dfac = 1
    for k in range(2 * f - 1, 0, -2):
        dfac *= k
    return comb(2 * f + n, n) * dfac


def max_crossings(f: int, n: int) -> int:
    """Largest possible crossing number: nf + f(f-1)/2."""
    return n * f + f * (f - 1) // 2


class TPoly(NamedTuple):
    f: int
    n: int
    poly: LaurentPoly

    def validate(self) -> None:
        p = self.poly
        if any(e < 0 or c < 0 for e, c in p.coeffs.items()):
            raise ValueError("T polynomial must have nonnegative support")
        if p.evaluate_at_one() != diagram_count(self.f, self.n):
            raise ValueError("T polynomial has the wrong diagram count")
        if not p.is_zero() and p.degree() > max_crossings(self.f, self.n):
            raise ValueError("T polynomial exceeds the maximal crossing number")


def T_bruteforce(f: int, n: int,
                 point_bound: int = DEFAULT_POINT_BOUND) -> TPoly:
    """T_{f,n}(q) by enumerating diagrams and counting crossings."""
    d = {}
    for diag in enumerate_diagrams(f, n, point_bound):
        c = crossings(diag)
        d[c] = d.get(c, 0) + 1
    t = TPoly(f, n, LaurentPoly(d))
    t.validate()
    return t


@lru_cache(maxsize=None)
def _T_rec(f: int, n: int) -> LaurentPoly:
    if f < 0 or n < 0:
        return LaurentPoly.zero()
    if f == 0:
        return LaurentPoly.one()  # only the all-tethered diagram, no crossings
    if n == 0:
        return _T_rec(f - 1, 1)
    return _T_rec(f, n - 1) + classical_qint(n + 1) * _T_rec(f - 1, n + 1)


def T_recurrence(f: int, n: int) -> TPoly:
    """T_{f,n}(q) by the partition recurrence; memoized."""
    if f < 0 or n < 0:
        raise ValueError("f and n must be nonnegative")
    return TPoly(f, n, _T_rec(f, n))


# ---------------------------------------------------------------------------
# the crossing-aware partition behind the recurrence
#
# Look at the chord owning position 1 (the point nearest the basepoint
# clockwise).  If it is tethered, delete it: crossings are unchanged and the
# result has one fewer tethered chord.  If it is free with far endpoint b,
# replace it by a tethered chord at b: crossings drop by exactly the number i
# of tethered chords strictly before b, and the result has one fewer free
# chord and one more tethered chord.  Both maps are bijections onto their
# targets, which proves T_{f,n} = T_{f,n-1} + (1 + q + ... + q^n) T_{f-1,n+1}.


def _relabel_down(d: ChordDiagram, removed: int) -> tuple:
    def r(p):
        return p - 1 if p > removed else p

    teth = frozenset(r(p) for p in d.tethered if p != removed)
    match = frozenset((r(a), r(b)) for a, b in d.matching)
    return teth, match


def partition_step(d: ChordDiagram):
    """Classify d and apply the crossing-aware reduction.

    Returns ("tether", theta(d)) when position 1 is tethered, else
    ("free", i, theta_i(d)) where i counts tethered chords before the far
    endpoint of the free chord at position 1.
    """
    if d.total_points == 0:
        raise ValueError("the empty diagram is not partitioned")
    if 1 in d.tethered:
        teth, match = _relabel_down(d, 1)
        return ("tether", ChordDiagram.make(d.total_points - 1, teth, match))
    b = next(pair[1] for pair in d.matching if pair[0] == 1)
    i = sum(1 for p in d.tethered if p < b)
    teth = frozenset(p - 1 for p in d.tethered) | {b - 1}
    match = frozenset((a - 1, c - 1) for a, c in d.matching if a != 1)
    return ("free", i, ChordDiagram.make(d.total_points - 1, teth, match))


def partition_inverse(tag, d: ChordDiagram, i: int = None) -> ChordDiagram:
    """Invert partition_step.

    ("tether", d') inserts a tethered chord at position 1.  ("free", d', i)
    turns the (i+1)-th tethered chord of d' back into a free chord attached
    at position 1 (requires 0 <= i <= number of tethered chords - 1).
    """
    up_t = frozenset(p + 1 for p in d.tethered)
    up_m = frozenset((a + 1, b + 1) for a, b in d.matching)
    if tag == "tether":
        return ChordDiagram.make(d.total_points + 1, up_t | {1}, up_m)
    if tag != "free":
        raise ValueError(f"unknown tag {tag!r}")
    teth_sorted = sorted(up_t)
    y = teth_sorted[i]
    return ChordDiagram.make(d.total_points + 1,
                             frozenset(teth_sorted) - {y},
                             up_m | {(1, y)})
