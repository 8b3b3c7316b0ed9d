"""Brute-force verification suites over bounded regions.

Each suite runs an exhaustive search at a requested radius and returns a
Report: a JSON-ready envelope with the suite name, the root system, the
search parameters, a result dictionary whose "passed" entry drives exit
codes, and a list of witnesses (counterexamples or extremal cases).

All values in reports are JSON-native; exact rationals are rendered with
str(Fraction), so "3/2" and "2" are both possible.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .combing import (
    build_fsa,
    combing_word,
    enumerate_local_paths,
    path_endpoint_coords,
    word_vertices,
)
from .complexes import (
    ball,
    fine_distances_from,
    fine_graph,
    hull_box,
    hull_contains,
    position_of,
    special_vertex,
    step_catalog,
)
from .exact import CapExceeded, RatVec, inner, norm_sq
from .rootsystem import RootSystem, build_root_system, coweight_coords
from .weyl import dominant_representative, elements_fixing, enumerate_weyl_group, orbit


@dataclass
class Report:
    suite: str
    kind: str
    rank: int
    params: dict
    result: dict
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.result.get("passed"))

    def envelope(self) -> dict:
        return {
            "suite": self.suite,
            "kind": self.kind,
            "rank": self.rank,
            "params": self.params,
            "result": self.result,
            "witnesses": self.witnesses,
        }


def _coords_list(coords: tuple[int, ...]) -> list[int]:
    return [int(c) for c in coords]


@lru_cache(maxsize=None)
def _combing_letters(rs: RootSystem, delta: tuple[int, ...]) -> tuple[RatVec, ...]:
    word = combing_word(rs, special_vertex(rs, (0,) * rs.rank), special_vertex(rs, delta))
    return word.letters


@lru_cache(maxsize=None)
def _combing_coord_path(rs: RootSystem, delta: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Coordinate trace of the combing word for a difference vector."""
    by_dir = {s.direction: s.coords for s in step_catalog(rs)}
    out = [(0,) * rs.rank]
    for d in _combing_letters(rs, delta):
        out.append(tuple(a + b for a, b in zip(out[-1], by_dir[d])))
    return tuple(out)


@lru_cache(maxsize=None)
def _coweight_gram(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(
        tuple(inner(u, v) for v in rs.coweights) for u in rs.coweights
    )


def euclid_sq_of_coords(rs: RootSystem, coords: tuple[int, ...]) -> Fraction:
    g = _coweight_gram(rs)
    total = Fraction(0)
    for i, a in enumerate(coords):
        if a:
            for j, b in enumerate(coords):
                if b:
                    total += a * b * g[i][j]
    return total


class _LazyBall:
    """Graph distances from the origin, expanded one radius at a time."""

    def __init__(self, rs: RootSystem, cap: int = 10**6):
        self.steps = [s.coords for s in step_catalog(rs)]
        self.cap = cap
        start = (0,) * rs.rank
        self.dist: dict[tuple[int, ...], int] = {start: 0}
        self.frontier = [start]
        self.radius = 0

    def _expand(self) -> None:
        nxt = []
        self.radius += 1
        for c in self.frontier:
            for s in self.steps:
                t = tuple(a + b for a, b in zip(c, s))
                if t not in self.dist:
                    if len(self.dist) >= self.cap:
                        raise CapExceeded(f"distance table cap {self.cap} hit at radius {self.radius}")
                    self.dist[t] = self.radius
                    nxt.append(t)
        self.frontier = nxt

    def distance(self, delta: tuple[int, ...]) -> int:
        while delta not in self.dist:
            if not self.frontier:
                raise CapExceeded("distance search exhausted the component")
            self._expand()
        return self.dist[delta]


def check_lemma_62(rs: RootSystem, cap: int = 10**6) -> Report:
    """Reachability of pairing-compatible orbit points by pointwise fixers.

    For each j < k, every omega in the orbit of coweight k whose pairing
    with coweight j equals <coweight_j, coweight_k> should be the image of
    coweight k under some element fixing coweights 1..j.  This holds for
    kinds A, B, C and fails for kind D, so the report passes when the
    observed behaviour matches the kind.
    """
    n = rs.rank
    counterexamples = []
    for j in range(1, n):
        fixers = elements_fixing(rs, tuple(rs.coweights[:j]), cap=cap)
        for k in range(j + 1, n + 1):
            target = inner(rs.coweights[j - 1], rs.coweights[k - 1])
            reachable = {w.apply(rs.coweights[k - 1]) for w in fixers}
            for omega in sorted(orbit(rs, rs.coweights[k - 1], cap=cap), key=lambda v: v.coords):
                if inner(rs.coweights[j - 1], omega) == target and omega not in reachable:
                    counterexamples.append({"j": j, "k": k, "omega": str(omega)})
    holds = not counterexamples
    expected = rs.kind != "D"
    return Report(
        suite="lemma62",
        kind=rs.kind,
        rank=rs.rank,
        params={"cap": cap},
        result={
            "passed": holds == expected,
            "holds": holds,
            "expected_to_hold": expected,
            "counterexamples": len(counterexamples),
        },
        witnesses=counterexamples,
    )


def check_local_global(rs: RootSystem, radius: int, margin: int = 2, cap: int = 10**7) -> Report:
    """Exactly-one-local-path test over a ball.

    Enumerates every word obeying the two-step local rule up to length
    L + margin, where L is the longest combing word to a vertex of the
    ball, and checks that each ball vertex is the endpoint of exactly one
    such word, namely its combing word.  Kind D is expected to diverge;
    the report passes when behaviour matches the kind.
    """
    dist = ball(rs, radius, cap=cap)
    max_len = 0
    for coords in dist:
        max_len = max(max_len, len(_combing_letters(rs, coords)))
    length_bound = max_len + margin
    found: dict[tuple[int, ...], list[tuple[RatVec, ...]]] = {c: [] for c in dist}
    count = 0
    for letters in enumerate_local_paths(rs, length_bound, cap=cap):
        count += 1
        end = path_endpoint_coords(rs, letters)
        if end in found:
            found[end].append(letters)
    divergent = []
    for coords in sorted(found):
        expected_letters = _combing_letters(rs, coords)
        words = found[coords]
        if len(words) != 1 or words[0] != expected_letters:
            sample = next((w for w in words if w != expected_letters), None)
            divergent.append(
                {
                    "endpoint": _coords_list(coords),
                    "local_words": len(words),
                    "combing_length": len(expected_letters),
                    "other_word": [str(d) for d in sample] if sample is not None else None,
                }
            )
    holds = not divergent
    expected = rs.kind != "D"
    return Report(
        suite="local-global",
        kind=rs.kind,
        rank=rs.rank,
        params={"radius": radius, "margin": margin, "cap": cap},
        result={
            "passed": holds == expected,
            "holds": holds,
            "expected_to_hold": expected,
            "vertices": len(dist),
            "words_enumerated": count,
            "length_bound": length_bound,
            "divergent": len(divergent),
        },
        witnesses=divergent[:10],
    )


def _ftp_quad_records(
    kind: str, rank: int, radius: int, y1_chunk: list[tuple[int, ...]], cap: int
) -> list[tuple]:
    """Per-quadruple separation maxima for a chunk of first endpoints.

    Returns tuples (quad_radius, k_spec, euclid_sq, deltas, quad) where
    deltas is the tuple of coordinate differences met while tracking the
    two combing paths at unit speed.
    """
    rs = build_root_system(kind, rank)
    lazy = _LazyBall(rs, cap=cap)
    zero = (0,) * rank
    starts = [zero] + [s.coords for s in step_catalog(rs)]
    dist = ball(rs, radius, cap=cap)
    records = []
    for y1 in y1_chunk:
        path1 = _combing_coord_path(rs, y1)
        for x2 in starts:
            for s in starts:
                y2 = tuple(a + b for a, b in zip(y1, s))
                if y2 not in dist:
                    continue
                delta2 = tuple(a - b for a, b in zip(y2, x2))
                path2 = _combing_coord_path(rs, delta2)
                horizon = max(len(path1), len(path2))
                k_spec = 0
                euclid = Fraction(0)
                deltas = []
                for t in range(horizon):
                    c1 = path1[min(t, len(path1) - 1)]
                    c2 = tuple(
                        a + b for a, b in zip(x2, path2[min(t, len(path2) - 1)])
                    )
                    delta = tuple(b - a for a, b in zip(c1, c2))
                    deltas.append(delta)
                    k_spec = max(k_spec, lazy.distance(delta))
                    euclid = max(euclid, euclid_sq_of_coords(rs, delta))
                quad_radius = max(dist[y1], dist[y2])
                records.append((quad_radius, k_spec, euclid, tuple(deltas), (x2, y1, y2)))
    return records


def check_ftp(
    rs: RootSystem,
    radius: int,
    jobs: int = 1,
    include_fine: bool = False,
    cap: int = 10**6,
) -> Report:
    """Fellow-traveller separations of synchronized combing paths.

    Takes every quadruple with x1 = 0, x2 a neighbour of x1 or x1 itself,
    y1 in the ball of the given radius and y2 a neighbour of y1 (or y1)
    inside the same ball, walks both combing words at unit speed, and
    records the largest separation seen at any time, in the edge metric
    of the special graph and in exact squared Euclidean distance.  The
    table lists the maxima over all quadruples fitting inside each radius.
    """
    if include_fine and rs.rank != 2:
        raise ValueError("fine-metric separations are only computed at rank 2")
    dist = ball(rs, radius, cap=cap)
    y1_all = sorted(dist)
    if jobs > 1 and len(y1_all) >= 64:
        chunks = [y1_all[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(
                pool.map(
                    _ftp_quad_records,
                    [rs.kind] * jobs,
                    [rs.rank] * jobs,
                    [radius] * jobs,
                    chunks,
                    [cap] * jobs,
                )
            )
        records = [rec for part in parts for rec in part]
    else:
        records = _ftp_quad_records(rs.kind, rs.rank, radius, y1_all, cap)
    records.sort(key=lambda rec: (rec[0], rec[4]))

    fine_dist: dict[tuple[int, ...], int] = {}
    if include_fine:
        all_deltas = {d for rec in records for d in rec[3]}
        bound = max((norm_sq(position_of(rs, d)) for d in all_deltas), default=Fraction(1))
        graph = fine_graph(rs, 4 * bound + 4, cap=cap)
        table = fine_distances_from(graph, position_of(rs, (0,) * rs.rank))
        for d in all_deltas:
            fine_dist[d] = table[position_of(rs, d)]

    k_table = []
    witness = None
    for r in range(1, radius + 1):
        k_spec = 0
        euclid = Fraction(0)
        k_fine = 0
        for quad_radius, k_q, e_q, deltas, quad in records:
            if quad_radius > r:
                continue
            if include_fine:
                k_fine = max(k_fine, max(fine_dist[d] for d in deltas))
            if k_q > k_spec:
                k_spec = k_q
                if r == radius:
                    witness = quad
            euclid = max(euclid, e_q)
        row = {"radius": r, "k_spec": k_spec, "max_separation": str(euclid)}
        if include_fine:
            row["k_fine"] = k_fine
        k_table.append(row)
    final = k_table[-1] if k_table else {"k_spec": 0, "max_separation": "0"}
    witnesses = []
    if witness is not None:
        x2, y1, y2 = witness
        witnesses.append(
            {"x1": [0] * rs.rank, "x2": _coords_list(x2), "y1": _coords_list(y1), "y2": _coords_list(y2)}
        )
    result = {
        "passed": True,
        "radius": radius,
        "quads": len(records),
        "k_spec": final["k_spec"],
        "max_separation": final["max_separation"],
        "k_table": k_table,
    }
    if include_fine:
        result["k_fine"] = final.get("k_fine", 0)
    return Report(
        suite="ftp",
        kind=rs.kind,
        rank=rs.rank,
        params={"radius": radius, "jobs": jobs, "fine": include_fine, "cap": cap},
        result=result,
        witnesses=witnesses,
    )


def ftp_csv(report: Report) -> str:
    """The k(r) table of an ftp report in CSV form."""
    if report.suite != "ftp":
        raise ValueError("CSV rendering is only defined for ftp reports")
    rows = report.result["k_table"]
    fine = any("k_fine" in row for row in rows)
    header = "radius,k_spec,max_separation" + (",k_fine" if fine else "")
    lines = [header]
    for row in rows:
        line = f"{row['radius']},{row['k_spec']},{row['max_separation']}"
        if fine:
            line += f",{row['k_fine']}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def check_quasi_constants(rs: RootSystem, radius: int, cap: int = 10**6) -> Report:
    """Metric comparison ratios over a ball.

    For every nonzero vertex of the ball: combing length over graph
    distance (must be at least 1), squared Euclidean distance over squared
    graph distance, and, at rank 2, fine 1-skeleton distance over graph
    distance.  Extremes are reported as exact rationals.
    """
    dist = ball(rs, radius, cap=cap)
    include_fine = rs.rank == 2
    fine_table: dict[RatVec, int] = {}
    if include_fine:
        bound = max(norm_sq(position_of(rs, c)) for c in dist)
        graph = fine_graph(rs, 4 * bound + 4, cap=cap)
        fine_table = fine_distances_from(graph, position_of(rs, (0,) * rs.rank))
    ratios_len: list[tuple[Fraction, tuple[int, ...]]] = []
    ratios_euclid: list[tuple[Fraction, tuple[int, ...]]] = []
    ratios_fine: list[tuple[Fraction, tuple[int, ...]]] = []
    violations = []
    for coords in sorted(dist):
        d = dist[coords]
        if d == 0:
            continue
        length = len(_combing_letters(rs, coords))
        r_len = Fraction(length, d)
        ratios_len.append((r_len, coords))
        if r_len < 1:
            violations.append({"endpoint": _coords_list(coords), "ratio": str(r_len)})
        ratios_euclid.append((euclid_sq_of_coords(rs, coords) / d**2, coords))
        if include_fine:
            ratios_fine.append((Fraction(fine_table[position_of(rs, coords)], d), coords))

    def extremes(pairs: list[tuple[Fraction, tuple[int, ...]]]) -> dict:
        if not pairs:
            return {}
        lo = min(pairs)
        hi = max(pairs)
        return {
            "min": str(lo[0]),
            "min_at": _coords_list(lo[1]),
            "max": str(hi[0]),
            "max_at": _coords_list(hi[1]),
        }

    result = {
        "passed": not violations,
        "radius": radius,
        "vertices": len(dist) - 1,
        "combing_over_distance": extremes(ratios_len),
        "euclid_sq_over_distance_sq": extremes(ratios_euclid),
    }
    if include_fine:
        result["fine_over_distance"] = extremes(ratios_fine)
    return Report(
        suite="quasi",
        kind=rs.kind,
        rank=rs.rank,
        params={"radius": radius, "cap": cap},
        result=result,
        witnesses=violations,
    )


def check_uniqueness_and_hull(rs: RootSystem, radius: int, cap: int = 10**6) -> Report:
    """Witness independence and hull membership of combing words.

    For every ball vertex y: every Weyl element carrying the dominant
    representative of y to y produces the same letter sequence, and every
    vertex the word visits lies in the hull box spanned between 0 and y.
    """
    dist = ball(rs, radius, cap=cap)
    group = enumerate_weyl_group(rs, cap=cap)
    fsa = build_fsa(rs)
    failures = []
    zero = special_vertex(rs, (0,) * rs.rank)
    # Witness independence is a property of the dominant representative
    # alone: two witnesses w and w' differ by a stabilizer element s, and
    # the letter sequences they produce agree exactly when s fixes every
    # coweight that occurs with positive multiplicity.  Check once per
    # dominant class instead of once per vertex.
    stable_class: dict[RatVec, bool] = {}
    for coords in sorted(dist):
        y = special_vertex(rs, coords)
        word = combing_word(rs, zero, y)
        verts = word_vertices(rs, word)
        if verts[-1].coords != coords:
            failures.append({"endpoint": _coords_list(coords), "problem": "endpoint mismatch"})
            continue
        if not fsa.accepts(word.letters):
            failures.append({"endpoint": _coords_list(coords), "problem": "rejected by automaton"})
        box = hull_box(rs, zero, y)
        if not all(hull_contains(rs, box, v.position) for v in verts):
            failures.append({"endpoint": _coords_list(coords), "problem": "left the hull"})
        v_dom, _ = dominant_representative(rs, y.position)
        if v_dom not in stable_class:
            k = coweight_coords(rs, v_dom)
            used = [cw for ki, cw in zip(k, rs.coweights) if ki > 0]
            stabilizer = [w for w in group if w.apply(v_dom) == v_dom]
            stable_class[v_dom] = all(
                w.apply(cw) == cw for w in stabilizer for cw in used
            )
        if not stable_class[v_dom]:
            failures.append({"endpoint": _coords_list(coords), "problem": "witness-dependent word"})
    return Report(
        suite="uniqueness",
        kind=rs.kind,
        rank=rs.rank,
        params={"radius": radius, "cap": cap},
        result={
            "passed": not failures,
            "vertices": len(dist),
            "failures": len(failures),
        },
        witnesses=failures[:10],
    )


def render_text(report: Report) -> str:
    """Human-readable one-screen rendering of any report."""
    head = f"{report.suite} {report.kind}{report.rank}: " + ("PASS" if report.passed else "FAIL")
    if report.suite == "lemma62" and report.passed and not report.result["holds"]:
        head += " (fails as expected for kind D)"
    if report.suite == "local-global" and report.passed and not report.result["holds"]:
        head += " (diverges as expected for kind D)"
    lines = [head]
    for key, value in report.result.items():
        if key in ("passed", "k_table"):
            continue
        lines.append(f"  {key} = {value}")
    if report.suite == "ftp":
        lines.append("  radius  k_spec  max_separation" + ("  k_fine" if "k_fine" in report.result else ""))
        for row in report.result["k_table"]:
            line = f"  {row['radius']:>6}  {row['k_spec']:>6}  {row['max_separation']:>14}"
            if "k_fine" in row:
                line += f"  {row['k_fine']:>6}"
            lines.append(line)
    for w in report.witnesses[:5]:
        lines.append(f"  witness: {w}")
    if len(report.witnesses) > 5:
        lines.append(f"  ({len(report.witnesses) - 5} more witnesses elided)")
    return "\n".join(lines) + "\n"
