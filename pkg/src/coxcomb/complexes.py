"""The Euclidean Coxeter complex of a root system, desk scale.

Two graphs live here.  The special graph has the coweight-lattice points as
vertices and one edge per Weyl image of a fundamental coweight; all path
generation and verification work happens in it, keyed by exact integer
coordinates over the coweight basis.  The fine graph is the full 1-skeleton
of the alcove triangulation, built inside a bounded region by reflecting
the standard alcove across its facets; it only backs metric comparisons
and figures.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import CapExceeded, RatVec, inner, norm_sq, solve_exact
from .rootsystem import RootSystem, coroot, coweight_coords, positive_roots
from .weyl import dominant_representative, orbit


@dataclass(frozen=True)
class SpecialVertex:
    """A coweight-lattice point: integer coordinates plus exact position."""

    coords: tuple[int, ...]
    position: RatVec


@dataclass(frozen=True)
class SpecialStep:
    """One edge germ of the special graph: a Weyl image of a coweight."""

    direction: RatVec
    coords: tuple[int, ...]
    etype: int


@dataclass(frozen=True)
class SpecialEdge:
    origin: SpecialVertex
    step: RatVec
    etype: int


@dataclass(frozen=True)
class HullBox:
    """The parallelepiped spanned between two special vertices.

    Frame direction i is w applied to (coweight_i / mark_i); the extent
    along it is mark_i times the i-th dominant coordinate.  Extent 0 keeps
    its direction so the frame is always a basis.
    """

    base: SpecialVertex
    directions: tuple[RatVec, ...]
    extents: tuple[Fraction, ...]


def position_of(rs: RootSystem, coords: tuple[int, ...]) -> RatVec:
    if len(coords) != rs.rank:
        raise ValueError(f"expected {rs.rank} coordinates")
    pos = RatVec(tuple(Fraction(0) for _ in range(rs.ambient_dim)))
    for k, w in zip(coords, rs.coweights):
        if k:
            pos = pos + k * w
    return pos


def special_vertex(rs: RootSystem, coords: tuple[int, ...]) -> SpecialVertex:
    coords = tuple(int(c) for c in coords)
    return SpecialVertex(coords, position_of(rs, coords))


def origin(rs: RootSystem) -> SpecialVertex:
    return special_vertex(rs, (0,) * rs.rank)


def vertex_at(rs: RootSystem, position: RatVec) -> SpecialVertex:
    """The special vertex at a position; raises if it is not one."""
    coords = coweight_coords(rs, position)
    if any(c.denominator != 1 for c in coords):
        raise ValueError("not a special vertex: non-integer coweight coordinates")
    return SpecialVertex(tuple(int(c) for c in coords), position)


def is_special(rs: RootSystem, v: RatVec) -> bool:
    """Wall-integrality test: <v, a> is an integer for every root a.

    Requires v to lie in the span of the roots; for A_n that means the
    coordinates sum to zero.
    """
    if v.dim != rs.ambient_dim:
        raise ValueError("dimension mismatch")
    if rs.kind == "A" and sum(v.coords) != 0:
        raise ValueError("position is outside the span of the roots")
    return all(inner(v, a).denominator == 1 for a in rs.roots)


def is_special_by_coords(rs: RootSystem, v: RatVec) -> bool:
    """Independent specialness oracle: integer coweight coordinates."""
    return all(c.denominator == 1 for c in coweight_coords(rs, v))


@lru_cache(maxsize=None)
def step_catalog(rs: RootSystem) -> tuple[SpecialStep, ...]:
    """Every edge germ at a vertex: the Weyl orbits of the coweights.

    Orbits of distinct fundamental coweights never meet (each orbit has a
    unique dominant point), so the type of a step is well defined; this is
    asserted during construction.
    """
    steps: list[SpecialStep] = []
    seen: dict[RatVec, int] = {}
    for i, w in enumerate(rs.coweights, start=1):
        for d in orbit(rs, w):
            if d in seen:
                raise AssertionError(f"direction {d} lies in orbits of types {seen[d]} and {i}")
            seen[d] = i
            coords = tuple(int(c) for c in coweight_coords(rs, d))
            steps.append(SpecialStep(d, coords, i))
    steps.sort(key=lambda s: (s.etype, s.coords))
    return tuple(steps)


@lru_cache(maxsize=None)
def _catalog_by_direction(rs: RootSystem) -> dict[RatVec, SpecialStep]:
    return {s.direction: s for s in step_catalog(rs)}


def edge_type(rs: RootSystem, step: RatVec) -> int:
    """Type of a special step, or of a fine edge direction (step/mark)."""
    hit = _catalog_by_direction(rs).get(step)
    if hit is not None:
        return hit.etype
    for i, c in enumerate(rs.marks, start=1):
        if c * step in _catalog_by_direction(rs) and _catalog_by_direction(rs)[c * step].etype == i:
            return i
    raise ValueError(f"{step} is not a step of the special graph or of its fine subdivision")


def degree(rs: RootSystem) -> int:
    return len(step_catalog(rs))


def neighbors(rs: RootSystem, x: SpecialVertex) -> tuple[SpecialEdge, ...]:
    return tuple(SpecialEdge(x, s.direction, s.etype) for s in step_catalog(rs))


def neighbor_vertex(rs: RootSystem, x: SpecialVertex, s: SpecialStep) -> SpecialVertex:
    return SpecialVertex(
        tuple(a + b for a, b in zip(x.coords, s.coords)), x.position + s.direction
    )


def ball(rs: RootSystem, radius: int, cap: int = 10**6) -> dict[tuple[int, ...], int]:
    """Breadth-first distances from the origin, out to the given radius."""
    steps = [s.coords for s in step_catalog(rs)]
    start = (0,) * rs.rank
    dist = {start: 0}
    frontier = [start]
    d = 0
    while frontier and d < radius:
        d += 1
        nxt = []
        for c in frontier:
            for s in steps:
                t = tuple(a + b for a, b in zip(c, s))
                if t not in dist:
                    if len(dist) >= cap:
                        raise CapExceeded(f"ball cap {cap} hit at radius {d}")
                    dist[t] = d
                    nxt.append(t)
        frontier = nxt
    return dist


def graph_distance(rs: RootSystem, x: SpecialVertex, y: SpecialVertex, cap: int = 64) -> int:
    """Edge distance in the special graph; raises CapExceeded beyond cap."""
    delta = tuple(b - a for a, b in zip(x.coords, y.coords))
    if all(c == 0 for c in delta):
        return 0
    steps = [s.coords for s in step_catalog(rs)]
    dist = {(0,) * rs.rank: 0}
    frontier = [(0,) * rs.rank]
    d = 0
    while frontier:
        d += 1
        if d > cap:
            raise CapExceeded(f"graph distance exceeds cap {cap}")
        nxt = []
        for c in frontier:
            for s in steps:
                t = tuple(a + b for a, b in zip(c, s))
                if t == delta:
                    return d
                if t not in dist:
                    dist[t] = d
                    nxt.append(t)
        frontier = nxt
    raise CapExceeded("search space exhausted")  # disconnected lattice cannot happen


def standard_alcove(rs: RootSystem) -> tuple[RatVec, ...]:
    """Vertices of the fundamental alcove: 0 and coweight_i / mark_i."""
    zero = RatVec(tuple(Fraction(0) for _ in range(rs.ambient_dim)))
    return (zero,) + tuple(w.scaled(Fraction(1, c)) for w, c in zip(rs.coweights, rs.marks))


def hull_box(rs: RootSystem, x: SpecialVertex, y: SpecialVertex) -> HullBox:
    """The combing hull of the ordered pair (x, y)."""
    v_dom, w = dominant_representative(rs, y.position - x.position)
    k = coweight_coords(rs, v_dom)
    directions = tuple(
        w.apply(cw.scaled(Fraction(1, c))) for cw, c in zip(rs.coweights, rs.marks)
    )
    extents = tuple(Fraction(c) * kk for c, kk in zip(rs.marks, k))
    return HullBox(x, directions, extents)


def hull_contains(rs: RootSystem, box: HullBox, p: RatVec) -> bool:
    """Exact membership of a point in the hull parallelepiped."""
    rows = [[d.coords[t] for d in box.directions] for t in range(rs.ambient_dim)]
    rhs = list((p - box.base.position).coords)
    try:
        z = solve_exact(rows, rhs)
    except ValueError:
        return False
    return all(0 <= zi <= mi for zi, mi in zip(z, box.extents))


class FineGraph:
    """The 1-skeleton of the alcove triangulation inside a bounded region."""

    def __init__(self, vertices: set[RatVec], adjacency: dict[RatVec, set[RatVec]], alcove_count: int):
        self.vertices = vertices
        self.adjacency = adjacency
        self.alcove_count = alcove_count


def fine_graph(rs: RootSystem, radius_sq: Fraction, cap: int = 200_000) -> FineGraph:
    """Build the fine 1-skeleton by reflecting alcoves across their facets.

    Keeps every alcove all of whose vertices v satisfy |v|^2 <= radius_sq.
    Every pair of vertices of a kept alcove is an edge of the skeleton.
    """
    pos = positive_roots(rs)
    coroots = {a: coroot(a) for a in pos}
    start = frozenset(standard_alcove(rs))
    if not all(norm_sq(v) <= radius_sq for v in start):
        raise ValueError("region too small to hold the standard alcove")
    seen = {start}
    queue = deque([start])
    adjacency: dict[RatVec, set[RatVec]] = {}
    count = 0
    while queue:
        alcove = queue.popleft()
        count += 1
        verts = sorted(alcove, key=lambda v: v.coords)
        for v in verts:
            adjacency.setdefault(v, set()).update(u for u in verts if u != v)
        for apex in verts:
            facet = [u for u in verts if u != apex]
            alpha, level = _facet_wall(pos, facet)
            mirrored = apex - (inner(apex, alpha) - level) * coroots[alpha]
            nxt = frozenset(facet + [mirrored])
            if nxt in seen or norm_sq(mirrored) > radius_sq:
                continue
            if len(seen) >= cap:
                raise CapExceeded(f"alcove cap {cap} hit")
            seen.add(nxt)
            queue.append(nxt)
    return FineGraph(set(adjacency), adjacency, count)


def _facet_wall(pos: tuple[RatVec, ...], facet: list[RatVec]) -> tuple[RatVec, int]:
    for alpha in pos:
        vals = {inner(p, alpha) for p in facet}
        if len(vals) == 1:
            (level,) = vals
            if level.denominator == 1:
                return alpha, int(level)
    raise AssertionError("alcove facet lies on no wall")


def fine_distances_from(graph: FineGraph, start: RatVec) -> dict[RatVec, int]:
    if start not in graph.adjacency:
        raise ValueError("start vertex is not in the region")
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in graph.adjacency[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist
