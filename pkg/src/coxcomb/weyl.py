"""Weyl groups as exact orthogonal matrices.

Elements are generated from the simple reflections; every element keeps a
witness word over the generator indices.  Equality and hashing look only at
the matrix, so witness words are never canonicalized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .exact import CapExceeded, Matrix, RatVec, identity_matrix, mat_apply, mat_mul
from .rootsystem import RootSystem, coroot, inner


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    word: tuple[int, ...] = field(compare=False, default=())

    def apply(self, v: RatVec) -> RatVec:
        return mat_apply(self.matrix, v)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (a * b).apply(v) == a.apply(b.apply(v))
        return WeylElement(mat_mul(self.matrix, other.matrix), self.word + other.word)

    def is_identity(self) -> bool:
        return self.matrix == identity_matrix(len(self.matrix))


def identity_element(rs: RootSystem) -> WeylElement:
    return WeylElement(identity_matrix(rs.ambient_dim), ())


def _reflection_matrix(rs: RootSystem, alpha: RatVec) -> Matrix:
    cr = coroot(alpha)
    cols = []
    for j in range(rs.ambient_dim):
        e = RatVec(tuple(1 if t == j else 0 for t in range(rs.ambient_dim)))
        img = e - inner(e, alpha) * cr
        cols.append(img.coords)
    return tuple(zip(*cols))


@lru_cache(maxsize=None)
def _generators(rs: RootSystem) -> tuple[WeylElement, ...]:
    return tuple(
        WeylElement(_reflection_matrix(rs, a), (i + 1,)) for i, a in enumerate(rs.simple_roots)
    )


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """The reflection in the i-th simple root, 1-based."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple root index {i} out of range 1..{rs.rank}")
    return _generators(rs)[i - 1]


def reflection(rs: RootSystem, alpha: RatVec) -> WeylElement:
    """The reflection in an arbitrary root."""
    if alpha not in rs.roots:
        raise ValueError("not a root")
    return WeylElement(_reflection_matrix(rs, alpha), ())


@lru_cache(maxsize=None)
def enumerate_weyl_group(rs: RootSystem, cap: int = 10**6) -> frozenset[WeylElement]:
    """All group elements, by breadth-first closure over the generators."""
    gens = _generators(rs)
    ident = identity_element(rs)
    seen: dict[Matrix, WeylElement] = {ident.matrix: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                m = mat_mul(w.matrix, g.matrix)
                if m not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"group enumeration cap {cap} hit; at least {len(seen) + 1} elements")
                    el = WeylElement(m, w.word + g.word)
                    seen[m] = el
                    nxt.append(el)
        frontier = nxt
    return frozenset(seen.values())


def dominant_representative(rs: RootSystem, v: RatVec) -> tuple[RatVec, WeylElement]:
    """The dominant vector in the orbit of v, with a witness.

    Returns (v_dom, w) such that w.apply(v_dom) == v and <v_dom, a_i> >= 0
    for every simple root.  Greedy descent: while some pairing is negative,
    reflect in the first such simple root.  Each step strictly decreases
    the number of positive roots pairing negatively, so it terminates.
    """
    if v.dim != rs.ambient_dim:
        raise ValueError("dimension mismatch")
    gens = _generators(rs)
    w = identity_element(rs)
    cur = v
    while True:
        i = next((i for i, a in enumerate(rs.simple_roots) if inner(cur, a) < 0), None)
        if i is None:
            return cur, w
        cur = gens[i].apply(cur)
        w = w * gens[i]


def orbit(rs: RootSystem, v: RatVec, cap: int = 10**6) -> frozenset[RatVec]:
    """The Weyl orbit of v, by breadth-first closure."""
    gens = _generators(rs)
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                img = g.apply(u)
                if img not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"orbit cap {cap} hit")
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return frozenset(seen)


def elements_fixing(rs: RootSystem, fixed: tuple[RatVec, ...], cap: int = 10**6) -> tuple[WeylElement, ...]:
    """All group elements fixing every vector in `fixed`, sorted by matrix."""
    group = enumerate_weyl_group(rs, cap)
    out = [w for w in group if all(w.apply(u) == u for u in fixed)]
    out.sort(key=lambda w: w.matrix)
    return tuple(out)


def weyl_order_formula(kind: str, rank: int) -> int:
    """Closed-form group order; cross-checked against enumeration in tests."""
    import math

    n = rank
    if kind == "A":
        return math.factorial(n + 1)
    if kind in ("B", "C"):
        return 2**n * math.factorial(n)
    if kind == "D":
        return 2 ** (n - 1) * math.factorial(n)
    raise ValueError(f"unknown kind {kind!r}")
