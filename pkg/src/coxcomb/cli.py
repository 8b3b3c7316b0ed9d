"""Command line interface.

Subcommands:
  info    facts about a root system and its special graph
  comb    the distinguished word between two special vertices
  fsa     the recognizing automaton, as counts, listing, or DOT
  verify  run a verification suite and report the outcome
  plot    draw a rank-2 complex with one combing word and its hull

Exit codes: 0 success (including expected failures for kind D), 1 a
verification suite found unexpected behaviour, 2 usage error, 3 a search
cap was exceeded before the answer was known.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .combing import build_fsa, combing_word, fsa_to_dot, word_as_dict
from .complexes import degree, special_vertex
from .exact import CapExceeded
from .rootsystem import KINDS, build_root_system
from .verify import (
    Report,
    check_ftp,
    check_lemma_62,
    check_local_global,
    check_quasi_constants,
    check_uniqueness_and_hull,
    ftp_csv,
    render_text,
)
from .weyl import enumerate_weyl_group, weyl_order_formula


class UsageError(Exception):
    pass


_SUITES = ("ftp", "local-global", "lemma62", "quasi", "uniqueness")
_DEFAULT_RADIUS = {"ftp": 4, "local-global": 3, "quasi": 4, "uniqueness": 3}
_ENUMERATION_LIMIT = 20000


def _root_system(args):
    kind = args.kind.upper()
    if kind not in KINDS:
        raise UsageError(f"unknown kind {args.kind!r}; choose from {', '.join(KINDS)}")
    try:
        return build_root_system(kind, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_coords(text: str, rank: int) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != rank:
        raise UsageError(f"expected {rank} comma-separated coordinates, got {len(parts)}")
    try:
        values = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad coordinate in {text!r}") from exc
    if any(v.denominator != 1 for v in values):
        raise UsageError(f"{text!r} is not a special vertex: coordinates must be integers")
    return tuple(int(v) for v in values)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)
        print(f"wrote {out}", file=sys.stderr)


def _report_output(report: Report, fmt: str, out: str | None) -> None:
    if fmt == "json":
        _emit(json.dumps(report.envelope(), indent=2, sort_keys=True) + "\n", out)
    elif fmt == "csv":
        if report.suite != "ftp":
            raise UsageError("csv output is only defined for the ftp suite")
        _emit(ftp_csv(report), out)
    else:
        _emit(render_text(report), out)


def cmd_info(args) -> int:
    rs = _root_system(args)
    order = weyl_order_formula(rs.kind, rs.rank)
    enumerated = None
    if order <= _ENUMERATION_LIMIT:
        enumerated = len(enumerate_weyl_group(rs))
        if enumerated != order:
            raise AssertionError(f"group enumeration gave {enumerated}, formula gives {order}")
    payload = {
        "kind": rs.kind,
        "rank": rs.rank,
        "ambient_dim": rs.ambient_dim,
        "roots": len(rs.roots),
        "simple_roots": [str(a) for a in rs.simple_roots],
        "highest_root": str(rs.highest_root),
        "marks": list(rs.marks),
        "coweights": [str(w) for w in rs.coweights],
        "special_degree": degree(rs),
        "weyl_order": order,
        "weyl_order_enumerated": enumerated,
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
        return 0
    lines = [f"{rs.kind}{rs.rank} in dimension {rs.ambient_dim}"]
    lines.append(f"  roots: {len(rs.roots)}")
    lines.append(f"  simple roots: {', '.join(str(a) for a in rs.simple_roots)}")
    lines.append(f"  highest root: {rs.highest_root}")
    lines.append(f"  marks: {list(rs.marks)}")
    lines.append(f"  coweights: {', '.join(str(w) for w in rs.coweights)}")
    lines.append(f"  special graph degree: {degree(rs)}")
    note = "" if enumerated is None else " (confirmed by enumeration)"
    lines.append(f"  weyl group order: {order}{note}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_comb(args) -> int:
    rs = _root_system(args)
    start = special_vertex(rs, _parse_coords(args.start, rs.rank))
    target = special_vertex(rs, _parse_coords(args.target, rs.rank))
    word = combing_word(rs, start, target)
    if args.format == "json":
        _emit(json.dumps(word_as_dict(rs, word), indent=2, sort_keys=True) + "\n", args.out)
        return 0
    lines = [f"{rs} combing {list(start.coords)} -> {list(target.coords)}"]
    for item in word_as_dict(rs, word)["letters"]:
        lines.append(f"  type {item['type']}: {item['direction']}")
    lines.append(f"length {len(word.letters)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_fsa(args) -> int:
    rs = _root_system(args)
    fsa = build_fsa(rs)
    if args.format == "dot":
        _emit(fsa_to_dot(rs, fsa), args.out)
        return 0
    payload = {
        "kind": rs.kind,
        "rank": rs.rank,
        "states": len(fsa.states),
        "transitions": len(fsa.transitions),
        "state_list": [
            {"type": s.etype, "direction": str(s.direction)} for s in fsa.states
        ],
        "transition_list": [
            {"from": str(a.direction), "to": str(b.direction)}
            for a, b in sorted(
                fsa.transitions,
                key=lambda t: ((t[0].etype, t[0].direction.coords), (t[1].etype, t[1].direction.coords)),
            )
        ],
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
        return 0
    lines = [f"{rs} automaton: {payload['states']} states, {payload['transitions']} transitions"]
    for s in payload["state_list"]:
        lines.append(f"  state type {s['type']}: {s['direction']}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    rs = _root_system(args)
    radius = args.radius if args.radius is not None else _DEFAULT_RADIUS.get(args.suite, 3)
    if args.suite == "ftp":
        report = check_ftp(rs, radius, jobs=args.jobs, include_fine=args.fine, cap=args.cap)
    elif args.suite == "local-global":
        report = check_local_global(rs, radius, cap=args.cap)
    elif args.suite == "lemma62":
        report = check_lemma_62(rs, cap=args.cap)
    elif args.suite == "quasi":
        report = check_quasi_constants(rs, radius, cap=args.cap)
    else:
        report = check_uniqueness_and_hull(rs, radius, cap=args.cap)
    _report_output(report, args.format, args.out)
    if args.out is not None and not args.no_figure and rs.rank == 2 and report.suite != "lemma62":
        from .plotting import figure_for_report, save_svg

        fig = figure_for_report(rs, report)
        if fig is not None:
            svg_path = os.path.splitext(args.out)[0] + ".svg"
            save_svg(fig, svg_path)
            print(f"wrote {svg_path}", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_plot(args) -> int:
    rs = _root_system(args)
    if rs.rank != 2:
        raise UsageError("plot only draws rank-2 complexes")
    from .plotting import figure_combing, save_svg

    target = _parse_coords(args.target, rs.rank)
    fig = figure_combing(rs, target, args.radius)
    save_svg(fig, args.out)
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxcomb",
        description="Exact Coxeter complexes: combings, automata, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("text", "json")):
        p.add_argument("kind", help="root system kind: A, B, C, or D")
        p.add_argument("rank", type=int, help="rank of the root system")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", default=None, help="write output to a file instead of stdout")

    p_info = sub.add_parser("info", help="facts about a root system")
    add_common(p_info)
    p_info.set_defaults(func=cmd_info)

    p_comb = sub.add_parser("comb", help="combing word between special vertices")
    add_common(p_comb)
    p_comb.add_argument("--start", default=None, help="start coordinates, e.g. 0,0")
    p_comb.add_argument("--target", required=True, help="target coordinates, e.g. 2,1")
    p_comb.set_defaults(func=cmd_comb)

    p_fsa = sub.add_parser("fsa", help="the recognizing automaton")
    add_common(p_fsa, formats=("text", "json", "dot"))
    p_fsa.set_defaults(func=cmd_fsa)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=_SUITES)
    add_common(p_verify, formats=("text", "json", "csv"))
    p_verify.add_argument("--radius", type=int, default=None)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--fine", action="store_true", help="also measure fine 1-skeleton distances (rank 2)")
    p_verify.add_argument("--cap", type=int, default=10**6, help="abort when a search exceeds this size")
    p_verify.add_argument("--no-figure", action="store_true", help="skip the companion figure next to --out")
    p_verify.set_defaults(func=cmd_verify)

    p_plot = sub.add_parser("plot", help="draw a rank-2 complex")
    p_plot.add_argument("kind")
    p_plot.add_argument("rank", type=int)
    p_plot.add_argument("--target", default="1,1", help="combing target coordinates")
    p_plot.add_argument("--radius", type=int, default=3)
    p_plot.add_argument("--out", required=True, help="SVG output path")
    p_plot.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "start", "sentinel") is None:
        args.start = ",".join(["0"] * args.rank)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
