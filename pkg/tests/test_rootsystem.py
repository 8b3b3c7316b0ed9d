"""Root system construction against independently computed data."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coxcomb.exact import RatVec, inner, vec
from coxcomb.rootsystem import (
    build_root_system,
    coweight_coords,
    expand_in_simple_roots,
    positive_roots,
)

DESK = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4)]


def _solve_expansion(simple, target):
    # Gaussian elimination written out here so the test does not lean on
    # the package's own linear algebra.
    rows = [[Fraction(a.coords[t]) for a in simple] for t in range(target.dim)]
    rhs = [Fraction(c) for c in target.coords]
    n = len(simple)
    pivot_rows = []
    col = 0
    for col in range(n):
        pivot = next(
            (r for r in range(len(rows)) if r not in pivot_rows and rows[r][col] != 0),
            None,
        )
        assert pivot is not None
        pivot_rows.append(pivot)
        scale = rows[pivot][col]
        rows[pivot] = [x / scale for x in rows[pivot]]
        rhs[pivot] /= scale
        for r in range(len(rows)):
            if r != pivot and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * p for x, p in zip(rows[r], rows[pivot])]
                rhs[r] -= factor * rhs[pivot]
    coeffs = [rhs[pivot_rows[c]] for c in range(n)]
    # consistency of the leftover rows
    for r in range(len(rows)):
        if r not in pivot_rows:
            assert rhs[r] == sum(rows[r][c] * coeffs[c] for c in range(n))
    return coeffs


@pytest.mark.parametrize(
    "kind,rank,count",
    [
        ("A", 1, 2),
        ("A", 2, 6),
        ("A", 5, 30),
        ("B", 2, 8),
        ("B", 4, 32),
        ("C", 3, 18),
        ("C", 5, 50),
        ("D", 4, 24),
        ("D", 6, 60),
    ],
)
def test_root_counts(kind, rank, count):
    rs = build_root_system(kind, rank)
    assert len(rs.roots) == count
    assert len(positive_roots(rs)) == count // 2


@pytest.mark.parametrize("kind,rank", DESK)
def test_simple_roots_are_roots_and_span(kind, rank):
    rs = build_root_system(kind, rank)
    assert len(rs.simple_roots) == rank
    for a in rs.simple_roots:
        assert a in rs.roots
    for a in rs.roots:
        coeffs = expand_in_simple_roots(rs, a)
        signs = {c > 0 for c in coeffs if c != 0}
        assert len(signs) == 1  # every root is positive or negative, never mixed
        assert all(c.denominator == 1 for c in coeffs)


@pytest.mark.parametrize("kind,rank", DESK)
def test_duality(kind, rank):
    rs = build_root_system(kind, rank)
    for i, w in enumerate(rs.coweights):
        for j, a in enumerate(rs.simple_roots):
            assert inner(w, a) == (1 if i == j else 0)


@pytest.mark.parametrize(
    "kind,rank,marks",
    [
        ("A", 3, (1, 1, 1)),
        ("B", 2, (1, 2)),
        ("B", 4, (1, 2, 2, 2)),
        ("C", 3, (2, 2, 1)),
        ("C", 4, (2, 2, 2, 1)),
        ("D", 4, (1, 2, 1, 1)),
        ("D", 5, (1, 2, 2, 1, 1)),
    ],
)
def test_marks_against_elimination(kind, rank, marks):
    """Marks are recomputed here by expanding the highest root directly."""
    rs = build_root_system(kind, rank)
    assert rs.marks == marks
    coeffs = _solve_expansion(rs.simple_roots, rs.highest_root)
    assert tuple(int(c) for c in coeffs) == marks


def test_highest_root_values():
    assert build_root_system("A", 3).highest_root == vec(1, 0, 0, -1)
    assert build_root_system("B", 3).highest_root == vec(1, 1, 0)
    assert build_root_system("C", 3).highest_root == vec(2, 0, 0)
    assert build_root_system("D", 4).highest_root == vec(1, 1, 0, 0)


def test_coweight_closed_forms():
    half = Fraction(1, 2)
    rs = build_root_system("B", 3)
    assert rs.coweights == (vec(1, 0, 0), vec(1, 1, 0), vec(1, 1, 1))
    rs = build_root_system("C", 3)
    assert rs.coweights == (vec(1, 0, 0), vec(1, 1, 0), vec(half, half, half))
    rs = build_root_system("D", 4)
    assert rs.coweights == (
        vec(1, 0, 0, 0),
        vec(1, 1, 0, 0),
        vec(half, half, half, -half),
        vec(half, half, half, half),
    )
    rs = build_root_system("A", 2)
    third = Fraction(1, 3)
    assert rs.coweights == (
        vec(2 * third, -third, -third),
        vec(third, third, -2 * third),
    )


def test_a_coweights_sum_to_zero():
    for rank in (1, 2, 3, 4):
        rs = build_root_system("A", rank)
        for w in rs.coweights:
            assert sum(w.coords) == 0


@pytest.mark.parametrize("kind,rank", DESK)
def test_highest_root_reconstruction(kind, rank):
    rs = build_root_system(kind, rank)
    acc = RatVec(tuple(Fraction(0) for _ in range(rs.ambient_dim)))
    for c, a in zip(rs.marks, rs.simple_roots):
        acc = acc + c * a
    assert acc == rs.highest_root


def test_expansion_rejects_outside_span():
    rs = build_root_system("A", 2)
    with pytest.raises(ValueError):
        expand_in_simple_roots(rs, vec(1, 0, 0))  # does not sum to zero


def test_coweight_coords_roundtrip():
    rs = build_root_system("B", 3)
    v = 2 * rs.coweights[0] + 5 * rs.coweights[2]
    assert coweight_coords(rs, v) == (Fraction(2), Fraction(0), Fraction(5))


def test_invalid_parameters():
    with pytest.raises(ValueError):
        build_root_system("D", 3)
    with pytest.raises(ValueError):
        build_root_system("E", 6)
    with pytest.raises(ValueError):
        build_root_system("B", 1)
    build_root_system("A", 1)  # rank 1 only exists for kind A


@settings(max_examples=40, deadline=None)
@given(
    index=st.integers(min_value=0, max_value=len(DESK) - 1),
    data=st.data(),
)
def test_lattice_points_pair_integrally_with_roots(index, data):
    """Integer coweight combinations land on walls of integer level."""
    kind, rank = DESK[index]
    rs = build_root_system(kind, rank)
    coeffs = data.draw(
        st.lists(st.integers(min_value=-5, max_value=5), min_size=rank, max_size=rank)
    )
    v = RatVec(tuple(Fraction(0) for _ in range(rs.ambient_dim)))
    for c, w in zip(coeffs, rs.coweights):
        v = v + c * w
    for a in rs.roots:
        assert inner(v, a).denominator == 1
