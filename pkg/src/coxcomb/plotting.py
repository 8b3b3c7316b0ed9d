"""Figure rendering for rank-2 complexes and verification reports.

Figures are built directly on matplotlib Figure objects, never through
pyplot, so rendering works headless.  SVG output is made reproducible by
pinning the hash salt and dropping the date from the metadata; two runs
of the same command produce byte-identical files.
"""

from __future__ import annotations

import math
from fractions import Fraction

import matplotlib
from matplotlib.collections import LineCollection
from matplotlib.figure import Figure

from .combing import CombingWord, combing_word, edge_class, word_vertices
from .complexes import (
    ball,
    fine_graph,
    hull_box,
    position_of,
    special_vertex,
)
from .exact import RatVec, norm_sq
from .rootsystem import RootSystem
from .verify import Report

_TYPE_COLORS = {1: "#1f77b4", 2: "#d62728", 3: "#2ca02c", 4: "#9467bd"}

# Orthonormal basis of the sum-zero plane, for drawing kind A.
_A2_BASIS = (
    (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0),
    (1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6)),
)


def planar(rs: RootSystem, v: RatVec) -> tuple[float, float]:
    """Project an exact vector to drawing coordinates."""
    if rs.rank != 2:
        raise ValueError("drawing is only supported at rank 2")
    if rs.kind == "A":
        x = sum(float(c) * b for c, b in zip(v.coords, _A2_BASIS[0]))
        y = sum(float(c) * b for c, b in zip(v.coords, _A2_BASIS[1]))
        return (x, y)
    return (float(v.coords[0]), float(v.coords[1]))


def _base_figure(title: str) -> tuple[Figure, object]:
    fig = Figure(figsize=(6.4, 6.4))
    ax = fig.add_subplot(111)
    ax.set_aspect("equal")
    ax.set_title(title)
    ax.tick_params(labelsize=8)
    return fig, ax


def _draw_skeleton(ax, rs: RootSystem, radius: int) -> dict[tuple[int, ...], int]:
    dist = ball(rs, radius)
    bound = max(norm_sq(position_of(rs, c)) for c in dist) if len(dist) > 1 else Fraction(4)
    graph = fine_graph(rs, bound + 2)
    segments = []
    drawn = set()
    for u, nbrs in graph.adjacency.items():
        for v in nbrs:
            key = tuple(sorted((u.coords, v.coords)))
            if key in drawn:
                continue
            drawn.add(key)
            segments.append([planar(rs, u), planar(rs, v)])
    ax.add_collection(LineCollection(segments, colors="#cccccc", linewidths=0.5, zorder=1))
    xs, ys = [], []
    for coords in dist:
        px, py = planar(rs, position_of(rs, coords))
        xs.append(px)
        ys.append(py)
    ax.scatter(xs, ys, s=14, c="#222222", zorder=3)
    ax.scatter(*planar(rs, position_of(rs, (0,) * rs.rank)), s=40, c="#d62728", zorder=4)
    ax.autoscale_view()
    return dist


def _draw_word(ax, rs: RootSystem, word: CombingWord) -> None:
    verts = word_vertices(rs, word)
    for a, b, d in zip(verts, verts[1:], word.letters):
        color = _TYPE_COLORS.get(edge_class(rs, d).etype, "#000000")
        (x0, y0), (x1, y1) = planar(rs, a.position), planar(rs, b.position)
        ax.annotate(
            "",
            xy=(x1, y1),
            xytext=(x0, y0),
            arrowprops={"arrowstyle": "-|>", "color": color, "lw": 1.8},
            zorder=5,
        )


def _draw_hull(ax, rs: RootSystem, x, y) -> None:
    box = hull_box(rs, x, y)
    d0 = box.extents[0] * box.directions[0]
    d1 = box.extents[1] * box.directions[1]
    base = box.base.position
    corners = [base, base + d0, base + d0 + d1, base + d1, base]
    pts = [planar(rs, c) for c in corners]
    ax.plot(
        [p[0] for p in pts],
        [p[1] for p in pts],
        linestyle="--",
        color="#888888",
        linewidth=1.0,
        zorder=2,
    )


def figure_combing(rs: RootSystem, target: tuple[int, ...], radius: int) -> Figure:
    """The rank-2 complex with the combing word and hull of one target."""
    fig, ax = _base_figure(f"{rs} combing to {list(target)}")
    _draw_skeleton(ax, rs, radius)
    zero = special_vertex(rs, (0,) * rs.rank)
    y = special_vertex(rs, target)
    _draw_hull(ax, rs, zero, y)
    _draw_word(ax, rs, combing_word(rs, zero, y))
    return fig


def figure_ftp(report: Report) -> Figure:
    fig = Figure(figsize=(6.4, 4.0))
    ax = fig.add_subplot(111)
    rows = report.result["k_table"]
    radii = [row["radius"] for row in rows]
    ax.step(radii, [row["k_spec"] for row in rows], where="mid", label="k (edge metric)")
    if any("k_fine" in row for row in rows):
        ax.step(radii, [row["k_fine"] for row in rows], where="mid", label="k (fine metric)")
    ax.set_xlabel("radius")
    ax.set_ylabel("max separation")
    ax.set_title(f"fellow-traveller separation, {report.kind}{report.rank}")
    ax.set_xticks(radii)
    ax.legend(fontsize=8)
    return fig


def figure_for_report(rs: RootSystem, report: Report) -> Figure | None:
    """Companion figure for a verification report, when one makes sense.

    Returns None for reports with no figure: anything above rank 2, and
    the fixer-reachability suite, whose content is not geometric.
    """
    if report.suite == "lemma62" or rs.rank != 2:
        return None
    if report.suite == "ftp":
        return figure_ftp(report)
    fig, ax = _base_figure(f"{report.suite} {report.kind}{report.rank}")
    radius = int(report.params.get("radius", 3))
    _draw_skeleton(ax, rs, radius)
    marked = []
    for w in report.witnesses:
        if isinstance(w, dict) and "endpoint" in w:
            marked.append(tuple(w["endpoint"]))
    if report.suite == "quasi":
        stats = report.result.get("combing_over_distance", {})
        if "max_at" in stats:
            marked.append(tuple(stats["max_at"]))
    for coords in marked:
        px, py = planar(rs, position_of(rs, coords))
        ax.scatter([px], [py], marker="x", s=90, c="#d62728", zorder=6)
    return fig


def save_svg(fig: Figure, path: str) -> None:
    """Write a figure as reproducible SVG."""
    matplotlib.rcParams["svg.hashsalt"] = "coxcomb"
    fig.savefig(path, format="svg", metadata={"Date": None})
