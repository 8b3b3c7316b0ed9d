"""Exact rational vectors and small dense linear algebra.

Everything geometric in this package is computed over arbitrary-precision
rationals.  Floating point appears only at the very edge, when figures are
rendered.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


class CapExceeded(RuntimeError):
    """A configured search or enumeration cap was hit before completion."""


@dataclass(frozen=True)
class RatVec:
    """Immutable vector with exact rational coordinates."""

    coords: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __add__(self, other: "RatVec") -> "RatVec":
        if len(self.coords) != len(other.coords):
            raise ValueError("dimension mismatch")
        return RatVec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RatVec") -> "RatVec":
        if len(self.coords) != len(other.coords):
            raise ValueError("dimension mismatch")
        return RatVec(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RatVec":
        return RatVec(tuple(-a for a in self.coords))

    def scaled(self, c: Fraction | int) -> "RatVec":
        return RatVec(tuple(a * c for a in self.coords))

    def __rmul__(self, c: Fraction | int) -> "RatVec":
        return self.scaled(c)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.coords) + ")"


def vec(*coords: Fraction | int | str) -> RatVec:
    """Build a RatVec, coercing every coordinate to Fraction."""
    return RatVec(tuple(Fraction(c) for c in coords))


def inner(u: RatVec, v: RatVec) -> Fraction:
    """Standard Euclidean scalar product, exact."""
    if u.dim != v.dim:
        raise ValueError(f"dimension mismatch: {u.dim} vs {v.dim}")
    return sum((a * b for a, b in zip(u.coords, v.coords)), Fraction(0))


def norm_sq(v: RatVec) -> Fraction:
    return inner(v, v)


def identity_matrix(d: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(d)) for i in range(d))


def mat_apply(m: Matrix, v: RatVec) -> RatVec:
    if len(m[0]) != v.dim:
        raise ValueError("dimension mismatch")
    return RatVec(tuple(sum((a * b for a, b in zip(row, v.coords)), Fraction(0)) for row in m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a
    )


def is_orthogonal(m: Matrix) -> bool:
    d = len(m)
    return mat_mul(m, tuple(zip(*m))) == identity_matrix(d)


def solve_exact(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Solve a linear system exactly by Gaussian elimination.

    Requires a unique solution: raises ValueError("inconsistent") when no
    solution exists and ValueError("underdetermined") when the solution is
    not unique.  The system may be rectangular.
    """
    m = len(rows)
    if m != len(rhs):
        raise ValueError("dimension mismatch")
    k = len(rows[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(k):
        pivot = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][k] != 0:
            raise ValueError("inconsistent")
    if len(pivot_cols) < k:
        raise ValueError("underdetermined")
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivot_cols):
        sol[c] = aug[i][k]
    return tuple(sol)
