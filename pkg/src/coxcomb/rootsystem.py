"""Classical root systems in explicit coordinates.

Kinds and coordinates:

  A_n (n >= 1): ambient R^{n+1} with basis e_0..e_n; roots e_i - e_j for
      i != j; simple roots a_i = e_{i-1} - e_i; highest root e_0 - e_n.
  B_n (n >= 2): ambient R^n; roots +-e_i and +-e_i +- e_j (i < j); simple
      roots e_i - e_{i+1} and a_n = e_n; highest root e_1 + e_2.
  C_n (n >= 2): ambient R^n; roots +-2e_i and +-e_i +- e_j (i < j); simple
      roots e_i - e_{i+1} and a_n = 2e_n; highest root 2e_1.
  D_n (n >= 4): ambient R^n; roots +-e_i +- e_j (i < j); simple roots
      e_i - e_{i+1} and a_n = e_{n-1} + e_n; highest root e_1 + e_2.

Fundamental coweights are not tabulated: they are computed as the exact
dual basis of the simple roots (for A_n, within the zero-coordinate-sum
hyperplane), and the marks come from expanding the highest root over the
simple roots.  Construction cross-checks both against the defining
identities before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import RatVec, inner, norm_sq, solve_exact, vec

KINDS = ("A", "B", "C", "D")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


@dataclass(frozen=True)
class RootSystem:
    """A reduced irreducible crystallographic root system, fully exact."""

    kind: str
    rank: int
    ambient_dim: int
    roots: frozenset[RatVec]
    simple_roots: tuple[RatVec, ...]
    highest_root: RatVec
    marks: tuple[int, ...]
    coweights: tuple[RatVec, ...]

    def __str__(self) -> str:
        return f"{self.kind}{self.rank}"


def _unit(dim: int, i: int) -> RatVec:
    return RatVec(tuple(Fraction(1 if j == i else 0) for j in range(dim)))


def _roots_a(n: int):
    dim = n + 1
    e = [_unit(dim, i) for i in range(dim)]
    roots = {e[i] - e[j] for i in range(dim) for j in range(dim) if i != j}
    simple = tuple(e[i - 1] - e[i] for i in range(1, n + 1))
    return dim, roots, simple, e[0] - e[n]


def _roots_b(n: int):
    e = [_unit(n, i) for i in range(n)]
    roots = {s * e[i] for i in range(n) for s in (1, -1)}
    roots |= {s * e[i] + t * e[j] for i in range(n) for j in range(i + 1, n) for s in (1, -1) for t in (1, -1)}
    simple = tuple(e[i] - e[i + 1] for i in range(n - 1)) + (e[n - 1],)
    return n, roots, simple, e[0] + e[1]


def _roots_c(n: int):
    e = [_unit(n, i) for i in range(n)]
    roots = {(2 * s) * e[i] for i in range(n) for s in (1, -1)}
    roots |= {s * e[i] + t * e[j] for i in range(n) for j in range(i + 1, n) for s in (1, -1) for t in (1, -1)}
    simple = tuple(e[i] - e[i + 1] for i in range(n - 1)) + (2 * e[n - 1],)
    return n, roots, simple, 2 * e[0]


def _roots_d(n: int):
    e = [_unit(n, i) for i in range(n)]
    roots = {s * e[i] + t * e[j] for i in range(n) for j in range(i + 1, n) for s in (1, -1) for t in (1, -1)}
    simple = tuple(e[i] - e[i + 1] for i in range(n - 1)) + (e[n - 2] + e[n - 1],)
    return n, roots, simple, e[0] + e[1]


_BUILDERS = {"A": _roots_a, "B": _roots_b, "C": _roots_c, "D": _roots_d}
_ROOT_COUNT = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
}


def _dual_basis(kind: str, dim: int, simple: tuple[RatVec, ...]) -> tuple[RatVec, ...]:
    # Coweight i solves <x, a_j> = delta_ij; for A an extra zero-sum row
    # pins the solution inside the span of the roots.
    n = len(simple)
    rows = [list(a.coords) for a in simple]
    if kind == "A":
        rows.append([Fraction(1)] * dim)
    out = []
    for i in range(n):
        rhs = [Fraction(1 if j == i else 0) for j in range(n)]
        if kind == "A":
            rhs.append(Fraction(0))
        out.append(RatVec(solve_exact(rows, rhs)))
    return tuple(out)


@lru_cache(maxsize=None)
def build_root_system(kind: str, rank: int) -> RootSystem:
    """Construct and validate the root system of the given kind and rank."""
    if kind not in _BUILDERS:
        raise ValueError(f"unknown kind {kind!r}; expected one of A, B, C, D")
    if rank < _MIN_RANK[kind]:
        raise ValueError(f"kind {kind} requires rank >= {_MIN_RANK[kind]}")
    dim, roots, simple, highest = _BUILDERS[kind](rank)
    if len(roots) != _ROOT_COUNT[kind](rank):
        raise AssertionError(f"root count mismatch for {kind}{rank}")
    coweights = _dual_basis(kind, dim, simple)
    for i, w in enumerate(coweights):
        for j, a in enumerate(simple):
            if inner(w, a) != (1 if i == j else 0):
                raise AssertionError(f"duality failure at coweight {i + 1}, simple root {j + 1}")
    marks_fr = tuple(inner(highest, w) for w in coweights)
    if any(c.denominator != 1 or c <= 0 for c in marks_fr):
        raise AssertionError(f"marks of {kind}{rank} are not positive integers: {marks_fr}")
    marks = tuple(int(c) for c in marks_fr)
    recon = RatVec(tuple(Fraction(0) for _ in range(dim)))
    for c, a in zip(marks, simple):
        recon = recon + c * a
    if recon != highest:
        raise AssertionError("highest root does not match its expansion over simple roots")
    return RootSystem(
        kind=kind,
        rank=rank,
        ambient_dim=dim,
        roots=frozenset(roots),
        simple_roots=simple,
        highest_root=highest,
        marks=marks,
        coweights=coweights,
    )


def expand_in_simple_roots(rs: RootSystem, v: RatVec) -> tuple[Fraction, ...]:
    """Coefficients of v over the simple roots, exact.

    Raises ValueError when v is outside the span of the simple roots
    (for A_n that means a nonzero coordinate sum).
    """
    if v.dim != rs.ambient_dim:
        raise ValueError("dimension mismatch")
    coeffs = tuple(inner(v, w) for w in rs.coweights)
    recon = RatVec(tuple(Fraction(0) for _ in range(rs.ambient_dim)))
    for c, a in zip(coeffs, rs.simple_roots):
        recon = recon + c * a
    if recon != v:
        raise ValueError("vector is outside the span of the simple roots")
    return coeffs


def coweight_coords(rs: RootSystem, v: RatVec) -> tuple[Fraction, ...]:
    """Coefficients of v over the fundamental coweights, exact.

    The i-th coordinate equals <v, a_i>.  Raises ValueError when v is not
    in the span of the coweights.
    """
    if v.dim != rs.ambient_dim:
        raise ValueError("dimension mismatch")
    coeffs = tuple(inner(v, a) for a in rs.simple_roots)
    recon = RatVec(tuple(Fraction(0) for _ in range(rs.ambient_dim)))
    for c, w in zip(coeffs, rs.coweights):
        recon = recon + c * w
    if recon != v:
        raise ValueError("vector is outside the span of the fundamental coweights")
    return coeffs


def positive_roots(rs: RootSystem) -> tuple[RatVec, ...]:
    """Roots whose expansion over the simple roots is nonnegative, sorted."""
    pos = [a for a in rs.roots if all(c >= 0 for c in expand_in_simple_roots(rs, a))]
    pos.sort(key=lambda a: a.coords)
    return tuple(pos)


def coroot(alpha: RatVec) -> RatVec:
    """The coroot 2a / <a, a>."""
    n = norm_sq(alpha)
    if n == 0:
        raise ValueError("zero vector has no coroot")
    return alpha.scaled(Fraction(2) / n)
