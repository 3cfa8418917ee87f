"""Tests for chord diagram enumeration and the two routes to T_{f,n}(q)."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iqrank1.chords import (
    ChordDiagram,
    ResourceBoundError,
    T_bruteforce,
    T_recurrence,
    crossings,
    diagram_count,
    enumerate_diagrams,
    max_crossings,
    partition_inverse,
    partition_step,
)
from iqrank1.qseries import LaurentPoly


def L(d):
    return LaurentPoly(d)


# ---------------------------------------------------------------------------
# crossings


def test_crossings_single_chord():
    d = ChordDiagram.make(2, set(), {(1, 2)})
    assert crossings(d) == 0


def test_crossings_interleaved_pair():
    d = ChordDiagram.make(4, set(), {(1, 3), (2, 4)})
    assert crossings(d) == 1


def test_crossings_tethered_never_cross_each_other():
    d = ChordDiagram.make(3, {1, 2, 3}, set())
    assert crossings(d) == 0


def test_crossings_free_vs_tethered():
    # free chord (1,3) straddles the tethered point 2
    d = ChordDiagram.make(3, {2}, {(1, 3)})
    assert crossings(d) == 1


def test_crossings_worked_example_large():
    # 3 tethered, 4 free, 11 crossings (decoded from the worked figure)
    d = ChordDiagram.make(11, {4, 7, 9}, {(1, 8), (2, 11), (3, 6), (5, 10)})
    assert crossings(d) == 11


def test_crossings_worked_example_small():
    # 4 tethered, 3 free, 5 crossings (decoded from the worked figure)
    d = ChordDiagram.make(10, {1, 5, 6, 7}, {(2, 4), (3, 9), (8, 10)})
    assert crossings(d) == 5


def test_validate_rejects_bad_diagrams():
    with pytest.raises(ValueError):
        ChordDiagram.make(3, {1}, {(2, 2)})
    with pytest.raises(ValueError):
        ChordDiagram.make(4, {1, 2}, {(2, 3)})
    with pytest.raises(ValueError):
        ChordDiagram.make(4, {1}, {(2, 3)})


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_counts():
    assert len(enumerate_diagrams(0, 3)) == 1
    assert len(enumerate_diagrams(2, 0)) == 3
    assert len(enumerate_diagrams(1, 2)) == 6


def test_enumerate_distinct():
    ds = enumerate_diagrams(2, 1)
    assert len(set(ds)) == len(ds) == diagram_count(2, 1)


def test_enumerate_bound():
    with pytest.raises(ResourceBoundError):
        enumerate_diagrams(12, 0)


# ---------------------------------------------------------------------------
# T polynomials, both routes


def test_T_fixed_values():
    assert T_bruteforce(0, 5).poly == L({0: 1})
    assert T_bruteforce(2, 0).poly == L({0: 2, 1: 1})
    assert T_bruteforce(3, 0).poly == L({0: 5, 1: 6, 2: 3, 3: 1})
    # row of one-free-chord values: T_{1,n} = {1} + {2} + ... + {n+1}
    assert T_bruteforce(1, 1).poly == L({0: 2, 1: 1})
    assert T_bruteforce(1, 2).poly == L({0: 3, 1: 2, 2: 1})


def test_T_recurrence_matches_bruteforce_exhaustive():
    for f in range(0, 7):
        for n in range(0, 7 - f):
            assert T_recurrence(f, n).poly == T_bruteforce(f, n).poly, (f, n)


def test_T_at_one_is_diagram_count():
    for f in range(0, 7):
        for n in range(0, 7 - f):
            assert T_recurrence(f, n).poly.evaluate_at_one() == diagram_count(f, n)


def test_T_degree_and_leading_coefficient():
    for f in range(0, 5):
        for n in range(0, 5):
            p = T_recurrence(f, n).poly
            if f == 0:
                assert p == L({0: 1})
                continue
            assert p.degree() == max_crossings(f, n)
            assert p.coeff(p.degree()) == 1  # unique maximally crossed diagram


# ---------------------------------------------------------------------------
# the partition proving the recurrence


def _partition_check(f, n):
    """partition_step is a crossing-aware bijection onto its stated targets."""
    diagrams = enumerate_diagrams(f, n)
    tether_images = []
    free_images = {i: [] for i in range(n + 1)}
    for d in diagrams:
        res = partition_step(d)
        if res[0] == "tether":
            img = res[1]
            assert crossings(img) == crossings(d)
            assert img.n_tethered == n - 1 and img.n_free == f
            assert partition_inverse("tether", img) == d
            tether_images.append(img)
        else:
            _, i, img = res
            assert 0 <= i <= n
            assert crossings(img) == crossings(d) - i
            assert img.n_tethered == n + 1 and img.n_free == f - 1
            assert partition_inverse("free", img, i) == d
            free_images[i].append(img)
    if n > 0:
        assert len(set(tether_images)) == len(tether_images)
        assert set(tether_images) == set(enumerate_diagrams(f, n - 1))
    else:
        assert tether_images == []
    if f > 0:
        target = set(enumerate_diagrams(f - 1, n + 1))
        for i in range(n + 1):
            assert len(set(free_images[i])) == len(free_images[i])
            assert set(free_images[i]) == target
    else:
        assert all(not v for v in free_images.values())


def test_partition_bijections():
    for f in range(0, 6):
        for n in range(0, 6 - f):
            if f == n == 0:
                continue
            _partition_check(f, n)


@given(st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=20, deadline=None)
def test_partition_roundtrip_random(f, n):
    for d in enumerate_diagrams(f, n):
        res = partition_step(d) if d.total_points else None
        if res is None:
            continue
        if res[0] == "tether":
            assert partition_inverse("tether", res[1]) == d
        else:
            assert partition_inverse("free", res[2], res[1]) == d
