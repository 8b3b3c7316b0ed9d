"""Acceptance gate: one test per claimed behaviour, one printed line each.

Each test prints `criterion N: PASS/FAIL ...` before asserting, so a run
with -s (or any failure report) shows the full scoreboard.  All searches
run at the radii fixed here; the suites themselves take the radius as a
parameter and scale further when asked.
"""

from fractions import Fraction

import pytest

from coxcomb.combing import (
    accepted_words,
    build_fsa,
    combing_word,
    enumerate_local_paths,
)
from coxcomb.complexes import (
    ball,
    fine_graph,
    is_special,
    is_special_by_coords,
    origin,
    position_of,
    special_vertex,
)
from coxcomb.exact import RatVec, inner, vec
from coxcomb.rootsystem import build_root_system, coweight_coords
from coxcomb.verify import (
    check_ftp,
    check_lemma_62,
    check_local_global,
    check_quasi_constants,
    check_uniqueness_and_hull,
)
from coxcomb.weyl import dominant_representative, enumerate_weyl_group, weyl_order_formula

ALL_SYSTEMS_RANK6 = (
    [("A", n) for n in range(1, 7)]
    + [("B", n) for n in range(2, 7)]
    + [("C", n) for n in range(2, 7)]
    + [("D", n) for n in range(4, 7)]
)

ROOT_COUNT = {"A": lambda n: n * (n + 1), "B": lambda n: 2 * n * n,
              "C": lambda n: 2 * n * n, "D": lambda n: 2 * n * (n - 1)}


def _expected_marks(kind: str, rank: int) -> tuple[int, ...]:
    if kind == "A":
        return (1,) * rank
    if kind == "B":
        return (1,) + (2,) * (rank - 1)
    if kind == "C":
        return (2,) * (rank - 1) + (1,)
    return (1,) + (2,) * (rank - 3) + (1, 1)


def _expected_coweights(kind: str, rank: int, dim: int) -> tuple[RatVec, ...]:
    half = Fraction(1, 2)

    def unit_sum(upto: int, signs=None) -> RatVec:
        coords = [Fraction(0)] * dim
        for t in range(upto):
            coords[t] = Fraction(1)
        if signs:
            for t, s in signs.items():
                coords[t] = s
        return RatVec(tuple(coords))

    if kind == "A":
        out = []
        for i in range(1, rank + 1):
            coords = [Fraction(1) if t < i else Fraction(0) for t in range(dim)]
            shift = Fraction(i, rank + 1)
            out.append(RatVec(tuple(c - shift for c in coords)))
        return tuple(out)
    if kind == "B":
        return tuple(unit_sum(i) for i in range(1, rank + 1))
    if kind == "C":
        return tuple(unit_sum(i) for i in range(1, rank)) + (
            RatVec(tuple(half for _ in range(dim))),
        )
    body = tuple(unit_sum(i) for i in range(1, rank - 1))
    minus_last = RatVec(tuple([half] * (dim - 1) + [-half]))
    plus_all = RatVec(tuple(half for _ in range(dim)))
    return body + (minus_last, plus_all)


def test_criterion_1_root_data():
    for kind, rank in ALL_SYSTEMS_RANK6:
        rs = build_root_system(kind, rank)
        assert len(rs.roots) == ROOT_COUNT[kind](rank), (kind, rank)
        for i, w in enumerate(rs.coweights):
            for j, a in enumerate(rs.simple_roots):
                assert inner(w, a) == (1 if i == j else 0), (kind, rank, i, j)
        assert rs.marks == _expected_marks(kind, rank), (kind, rank)
        assert rs.coweights == _expected_coweights(kind, rank, rs.ambient_dim), (kind, rank)
        acc = RatVec(tuple(Fraction(0) for _ in range(rs.ambient_dim)))
        for c, a in zip(rs.marks, rs.simple_roots):
            acc = acc + c * a
        assert acc == rs.highest_root, (kind, rank)
    print(f"criterion 1: PASS - root data checks out for {len(ALL_SYSTEMS_RANK6)} systems up to rank 6")


def test_criterion_2_weyl_orders():
    expected = {
        ("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("A", 4): 120,
        ("B", 2): 8, ("B", 3): 48, ("B", 4): 384,
        ("C", 2): 8, ("C", 3): 48, ("C", 4): 384,
        ("D", 4): 192,
    }
    for (kind, rank), order in expected.items():
        rs = build_root_system(kind, rank)
        assert weyl_order_formula(kind, rank) == order, (kind, rank)
        assert len(enumerate_weyl_group(rs)) == order, (kind, rank)
    print(f"criterion 2: PASS - enumerated group orders match closed forms for {len(expected)} systems")


def test_criterion_3_specialness_oracles():
    from itertools import product

    checked = 0
    for kind, rank in [
        ("A", 2), ("A", 3), ("A", 4),
        ("B", 2), ("B", 3), ("B", 4),
        ("C", 2), ("C", 3), ("C", 4),
        ("D", 4),
    ]:
        rs = build_root_system(kind, rank)
        # integer coweight box of radius 4: special by both oracles
        for coeffs in product(range(-4, 5), repeat=rank):
            p = position_of(rs, coeffs)
            assert is_special(rs, p), (kind, rank, coeffs)
            assert is_special_by_coords(rs, p), (kind, rank, coeffs)
            checked += 1
        # half-integer probes of radius 2: the oracles must still agree
        for numerators in product(range(-4, 5), repeat=rank):
            if all(c % 2 == 0 for c in numerators):
                continue
            p = RatVec(tuple(Fraction(0) for _ in range(rs.ambient_dim)))
            for c, w in zip(numerators, rs.coweights):
                p = p + Fraction(c, 2) * w
            assert is_special(rs, p) == is_special_by_coords(rs, p), (kind, rank, numerators)
            checked += 1
    # subdividing a kind-A complex creates no new vertices
    for rank, region in [(2, Fraction(8)), (3, Fraction(4))]:
        rs = build_root_system("A", rank)
        for v in fine_graph(rs, region).vertices:
            assert is_special(rs, v)
            assert is_special_by_coords(rs, v)
    # the midpoint of a long edge is a fine vertex but not special
    rs = build_root_system("B", 2)
    midpoint = Fraction(1, 2) * rs.coweights[1]
    assert not is_special(rs, midpoint)
    assert not is_special_by_coords(rs, midpoint)
    print(f"criterion 3: PASS - specialness oracles agree on {checked} probes plus fine-vertex checks")


def test_criterion_4_combing_well_formed():
    reports = []
    for kind, rank, radius in [
        ("A", 2, 5), ("B", 2, 5), ("C", 2, 5),
        ("A", 3, 5), ("B", 3, 5), ("C", 3, 5),
    ]:
        rs = build_root_system(kind, rank)
        report = check_uniqueness_and_hull(rs, radius)
        assert report.passed, (kind, rank, report.witnesses)
        reports.append((kind, rank, report.result["vertices"]))
        if rank == 2:
            fsa = build_fsa(rs)
            for coords in ball(rs, radius):
                word = combing_word(rs, origin(rs), special_vertex(rs, coords))
                v_dom, _ = dominant_representative(rs, position_of(rs, coords))
                k = coweight_coords(rs, v_dom)
                assert len(word.letters) == sum(k), coords
                for cut in range(len(word.letters) + 1):
                    assert fsa.accepts(word.letters[:cut]), (kind, coords, cut)
    total = sum(n for _, _, n in reports)
    print(f"criterion 4: PASS - combing endpoint, length, recognition, hull, witness checks over {total} vertices")


def test_criterion_5_local_global_abc():
    for kind, rank, radius in [
        ("A", 2, 5), ("B", 2, 5), ("C", 2, 5),
        ("A", 3, 3), ("B", 3, 3), ("C", 3, 3),
    ]:
        report = check_local_global(build_root_system(kind, rank), radius)
        assert report.passed and report.result["holds"], (kind, rank, report.witnesses)
    print("criterion 5: PASS - exactly one local word per vertex for kinds A, B, C")


def test_criterion_6a_fixer_reachability_matches_kind():
    for kind, rank in [("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
                       ("C", 2), ("C", 3), ("C", 4)]:
        report = check_lemma_62(build_root_system(kind, rank))
        assert report.passed and report.result["holds"], (kind, rank, report.witnesses)
    report = check_lemma_62(build_root_system("D", 4))
    assert report.passed
    assert not report.result["holds"]
    assert report.result["counterexamples"] == 2
    print("criterion 6a: PASS - reachability holds for A, B, C up to rank 4 and fails for D4")


def test_criterion_6b_pinned_counterexample_point():
    """The counterexample list for D4 is required to contain the point
    (1/2, 1/2, -1/2, -1/2) at j=3, k=4.  It does not: that point is the
    image of coweight 4 under the reflection in the last simple root,
    which fixes coweights 1..3, so the point is reachable and the suite
    correctly leaves it out.  The two genuine counterexamples it reports
    instead are asserted in test_verify.  Kept as stated; expected to fail.
    """
    report = check_lemma_62(build_root_system("D", 4))
    omegas = {(w["j"], w["k"], w["omega"]) for w in report.witnesses}
    target = (3, 4, "(1/2, 1/2, -1/2, -1/2)")
    ok = target in omegas
    print(f"criterion 6b: {'PASS' if ok else 'FAIL'} - pinned point {'found' if ok else 'absent: it is reachable, hence not a counterexample'}")
    assert target in omegas, (
        "the pinned point is reachable by a fixer of coweights 1..3, "
        "so the suite does not report it; see the reported pair in test_verify"
    )


def test_criterion_7_ftp_separation_stabilizes():
    values = {}
    for kind in ("A", "B", "C"):
        rs = build_root_system(kind, 2)
        table = check_ftp(rs, 6).result["k_table"]
        ks = {row["radius"]: row["k_spec"] for row in table}
        assert ks[4] == ks[5] == ks[6], (kind, ks)
        values[f"{kind}2"] = ks[6]
    rs = build_root_system("A", 3)
    table = check_ftp(rs, 4).result["k_table"]
    ks = {row["radius"]: row["k_spec"] for row in table}
    assert ks[3] == ks[4], ks
    values["A3"] = ks[4]
    print(f"criterion 7: PASS - separation constants stable: {values}")


def test_criterion_8_automaton_equals_local_words():
    for kind in ("A", "B", "C"):
        rs = build_root_system(kind, 2)
        fsa = build_fsa(rs)
        accepted = set(accepted_words(fsa, 6))
        enumerated = set(enumerate_local_paths(rs, 6))
        assert accepted == enumerated, kind
    print("criterion 8: PASS - automaton language equals locally valid words up to length 6")


def test_criterion_9_quasi_constants_bounded():
    stats = {}
    for kind in ("A", "B", "C"):
        rs = build_root_system(kind, 2)
        report = check_quasi_constants(rs, 5)
        assert report.passed, (kind, report.witnesses)
        assert Fraction(report.result["combing_over_distance"]["min"]) >= 1
        stats[f"{kind}2"] = {
            "combing/d": report.result["combing_over_distance"]["max"],
            "fine/d": report.result["fine_over_distance"]["max"],
        }
    for kind in ("A", "B", "C"):
        rs = build_root_system(kind, 3)
        report = check_quasi_constants(rs, 3)
        assert report.passed, (kind, report.witnesses)
        assert Fraction(report.result["combing_over_distance"]["min"]) >= 1
    print(f"criterion 9: PASS - metric ratios bounded, rank-2 extremes {stats}")
