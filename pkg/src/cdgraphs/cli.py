"""Command-line interface.

Exit status: 0 on success (or when the checked condition holds), 1 when a
checked condition fails, 2 on usage, parse or configuration errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from .curvature import CurvatureParams, cd_at, curvature_map
from .enumeration import EnumerationConfig, resolve_star_question, verify_classification
from .errors import GraphError
from .families import from_shorthand
from .graph import INF, LaplacianMode, girth, girth_at, with_mode
from .graphio import read_graph


def _parse_real(text: str):
    text = text.strip()
    if text.lower() in ("inf", "infinity", "+inf"):
        return INF
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def fmt(value, exact: bool) -> str:
    """Exact fractions in exact mode, 12 significant digits otherwise."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if exact and isinstance(value, Fraction):
        return str(value)
    out = f"{float(value):.12g}"
    return "0" if out == "-0" else out


def load_input(source: str, mode: str, exact: bool):
    """Resolve ``--input``: a ``family:`` shorthand or a graph file path."""
    mode = LaplacianMode.parse(mode)
    if source.startswith("family:"):
        if mode is LaplacianMode.CUSTOM:
            raise GraphError("custom mode needs vertex measures; family shorthands have none")
        g = from_shorthand(source, mode)
        return g if exact else with_mode(g, mode, exact=False)
    try:
        return read_graph(source, mode, exact=exact)
    except OSError as exc:
        raise GraphError(f"cannot read {source}: {exc.strerror}") from exc


def _emit(rows, header, fmt_kind, out):
    if fmt_kind == "tsv":
        print("\t".join(header), file=out)
        for row in rows:
            print("\t".join(row), file=out)
        return
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(), file=out)
    for row in rows:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip(), file=out)


def cmd_check(args, out) -> int:
    g = load_input(args.input, args.mode, args.exact)
    p = CurvatureParams(args.K, args.n)
    verdicts = [cd_at(g, x, p) for x in g.vertices]
    rows = [
        [str(x), str(len(g.adj[x])), fmt(girth_at(g, x), args.exact), "pass" if ok else "fail"]
        for x, ok in zip(g.vertices, verdicts)
    ]
    holds = all(verdicts)
    label = f"CD({fmt(p.K, True)},{fmt(p.n, True)})"
    _emit(rows, ["vertex", "degree", "girth", "cd"], args.format, out)
    if args.format == "tsv":
        print(f"#graph\t{label}\t{'pass' if holds else 'fail'}", file=out)
    else:
        print(f"{label} {'holds' if holds else 'fails'} on {args.input} ({g.mode.value})", file=out)
    return 0 if holds else 1


def cmd_curvature_map(args, out) -> int:
    g = load_input(args.input, args.mode, args.exact)
    reports = curvature_map(g, args.n)
    rows = [
        [
            str(r.vertex),
            str(r.degree),
            fmt(r.girth_at, args.exact),
            str(r.q),
            fmt(r.cd_zero_infinity, args.exact),
            fmt(r.curvature_value, False),
        ]
        for r in reports
    ]
    _emit(rows, ["vertex", "degree", "girth", "q", "cd0inf", "K"], args.format, out)
    return 0


def cmd_girth(args, out) -> int:
    g = load_input(args.input, args.mode, True)
    rows = [[str(x), str(len(g.adj[x])), fmt(girth_at(g, x), True)] for x in g.vertices]
    _emit(rows, ["vertex", "degree", "girth"], args.format, out)
    if args.format == "tsv":
        print(f"#graph\tgirth\t{fmt(girth(g), True)}", file=out)
    else:
        print(f"graph girth: {fmt(girth(g), True)}", file=out)
    return 0


def cmd_enumerate(args, out) -> int:
    cfg = EnumerationConfig(
        max_vertices=args.max_vertices,
        mode=args.mode,
        min_degree=args.min_degree,
        girth_floor=args.girth_floor,
    )
    outcome = verify_classification(cfg)
    rows = []
    for g, desc in outcome.survivors:
        edges = " ".join(f"{u}-{v}" for u, v in g.edges)
        status = "ok" if (g, desc) not in outcome.anomalies else "ANOMALY"
        rows.append([str(g.n), str(len(g.edges)), str(desc) if desc else "Unclassified", status, edges])
    _emit(rows, ["n", "m", "family", "status", "edges"], args.format, out)
    tallies = ", ".join(f"{k}={v}" for k, v in outcome.counts.items())
    missing = ", ".join(str(d) for d in outcome.missing) or "none"
    if args.format == "tsv":
        print(f"#examined\t{outcome.examined}", file=out)
        print(f"#survivors\t{len(outcome.survivors)}", file=out)
        print(f"#counts\t{tallies}", file=out)
        print(f"#anomalies\t{len(outcome.anomalies)}", file=out)
        print(f"#missing\t{missing}", file=out)
    else:
        print(
            f"examined {outcome.examined} classes; {len(outcome.survivors)} satisfy CD(0,inf) ({tallies})",
            file=out,
        )
        print(f"expected families not found: {missing}", file=out)
        if outcome.anomalies:
            print(f"!!! {len(outcome.anomalies)} ANOMALIES: survivors outside the expected families", file=out)
        else:
            print("no anomalies", file=out)
    return 0 if outcome.confirmed else 1


def cmd_resolve_star(args, out) -> int:
    verdicts = resolve_star_question(args.max_n)
    rows = [
        [str(v.n), fmt(v.center_holds, True), fmt(v.leaf_holds, True), "pass" if v.holds else "fail"]
        for v in verdicts
    ]
    _emit(rows, ["n", "center", "leaf", "cd0inf"], args.format, out)
    passing = [v.n for v in verdicts if v.holds]
    if args.format != "tsv":
        print(f"physical Star_n satisfying CD(0,inf): n in {passing}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdgraphs", description="Bakry-Emery curvature-dimension checks on graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "tsv"], default="text")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--input", required=True, help="graph file or family:<name>:<params>")
    graph_in.add_argument("--mode", choices=["normalized", "physical", "custom"], default="normalized")
    graph_in.add_argument("--exact", action="store_true", help="use rational arithmetic")

    p = sub.add_parser("check", parents=[common, graph_in], help="decide CD(K,n) at every vertex")
    p.add_argument("--K", type=_parse_real, default=Fraction(0))
    p.add_argument("--n", type=_parse_real, default=INF)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("curvature-map", parents=[common, graph_in], help="tabulate curvature per vertex")
    p.add_argument("--n", type=_parse_real, default=INF)
    p.set_defaults(func=cmd_curvature_map)

    p = sub.add_parser("girth", parents=[common, graph_in], help="girth per vertex")
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("enumerate", parents=[common], help="classify small CD(0,inf) graphs")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--mode", choices=["normalized", "physical"], default="normalized")
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--girth-floor", type=int, default=5)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("resolve-star", parents=[common], help="CD(0,inf) of physical stars")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_resolve_star)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
