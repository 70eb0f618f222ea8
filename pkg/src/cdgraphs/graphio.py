"""Line-oriented graph text format.

::

    # comment
    vertex <id> [m=<decimal>]
    edge <u> <v> [mu=<decimal>]

Values are read as exact fractions so that a parse/serialize round trip
reproduces decimal inputs bit for bit.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import GraphError, ParseError
from .graph import LaplacianMode, WeightedGraph, build_graph

_DECIMAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")
_INT = re.compile(r"^\d+$")


def _parse_decimal(text: str, lineno: int) -> Fraction:
    if not _DECIMAL.match(text):
        raise ParseError(f"not a decimal number: {text!r}", lineno)
    return Fraction(text)


def _parse_id(text: str, lineno: int) -> int:
    if not _INT.match(text):
        raise ParseError(f"vertex id must be a non-negative integer, got {text!r}", lineno)
    return int(text)


def _parse_option(token: str, key: str, lineno: int) -> Fraction:
    name, sep, value = token.partition("=")
    if not sep or name != key:
        raise ParseError(f"expected {key}=<decimal>, got {token!r}", lineno)
    return _parse_decimal(value, lineno)


def parse_records(text: str):
    """Parse to ``(edges, measures)`` without building a graph."""
    edges = []
    measures: dict[int, Fraction] = {}
    declared: set[int] = set()
    seen_edges: set[tuple[int, int]] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "vertex":
            if len(tokens) not in (2, 3):
                raise ParseError("expected: vertex <id> [m=<decimal>]", lineno)
            x = _parse_id(tokens[1], lineno)
            if x in declared:
                raise ParseError(f"vertex {x} declared twice", lineno)
            declared.add(x)
            if len(tokens) == 3:
                measures[x] = _parse_option(tokens[2], "m", lineno)
        elif kind == "edge":
            if len(tokens) not in (3, 4):
                raise ParseError("expected: edge <u> <v> [mu=<decimal>]", lineno)
            u = _parse_id(tokens[1], lineno)
            v = _parse_id(tokens[2], lineno)
            mu = _parse_option(tokens[3], "mu", lineno) if len(tokens) == 4 else Fraction(1)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            if mu <= 0:
                raise ParseError(f"edge weight must be positive, got {tokens[3]!r}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            seen_edges.add(key)
            edges.append((u, v, mu))
        else:
            raise ParseError(f"unknown record {kind!r}", lineno)
    for x, value in measures.items():
        if value <= 0:
            raise ParseError(f"vertex {x} has non-positive measure")
    return edges, measures, declared


def parse_graph(text: str, mode=None, *, exact: bool = True) -> WeightedGraph:
    """Parse graph text.

    If ``mode`` is omitted, the graph is custom when any vertex carries an
    ``m=`` value and normalized otherwise.
    """
    edges, measures, declared = parse_records(text)
    if mode is None:
        mode = LaplacianMode.CUSTOM if measures else LaplacianMode.NORMALIZED
    mode = LaplacianMode.parse(mode)
    ids = declared | {u for u, _, _ in edges} | {v for _, v, _ in edges}
    if not ids:
        raise ParseError("no vertices")
    n = max(ids) + 1
    gaps = sorted(set(range(n)) - ids)
    if gaps:
        raise ParseError(f"vertex ids must be dense 0..{n - 1}; missing {gaps}")
    if mode is LaplacianMode.CUSTOM:
        absent = sorted(set(range(n)) - set(measures))
        if absent:
            raise ParseError(f"custom mode needs 'vertex <id> m=<decimal>' for vertices {absent}")
    try:
        return build_graph(edges, measures, mode, n=n, exact=exact)
    except GraphError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def read_graph(path, mode=None, *, exact: bool = True) -> WeightedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), mode, exact=exact)


def format_decimal(value) -> str:
    """Exact decimal rendering of a terminating fraction; ``repr`` for floats."""
    if isinstance(value, float):
        return repr(value)
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise GraphError(f"{value} has no finite decimal expansion")
    digits = max(twos, fives)
    scaled = value * 10**digits
    sign = "-" if scaled < 0 else ""
    s = str(abs(scaled.numerator)).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def serialize_graph(g: WeightedGraph, *, measures: bool | None = None) -> str:
    """Render ``g`` in the text format.

    Vertex measures are written for custom-mode graphs (or when ``measures``
    is true); other modes re-derive them on parse.
    """
    if measures is None:
        measures = g.mode is LaplacianMode.CUSTOM
    lines = []
    if measures:
        lines += [f"vertex {x} m={format_decimal(g.m[x])}" for x in g.vertices]
    for u, v in g.edges:
        w = g.mu[(u, v)]
        lines.append(f"edge {u} {v}" if w == 1 else f"edge {u} {v} mu={format_decimal(w)}")
    return "\n".join(lines) + "\n"
