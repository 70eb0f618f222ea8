from fractions import Fraction

import pytest

from cdgraphs import LaplacianMode, ParseError, build_graph, parse_graph, serialize_graph
from cdgraphs.graphio import format_decimal

SAMPLE = """\
# weighted triangle with a tail
vertex 0 m=1.5
vertex 1 m=0.25
vertex 2 m=3
vertex 3 m=1e-3
edge 0 1 mu=2.75
edge 1 2
edge 0 2 mu=0.1
edge 2 3 mu=12.5  # tail
"""


def test_parse_custom():
    g = parse_graph(SAMPLE)
    assert g.mode is LaplacianMode.CUSTOM
    assert g.m == (Fraction(3, 2), Fraction(1, 4), Fraction(3), Fraction(1, 1000))
    assert g.mu[(0, 2)] == Fraction(1, 10)
    assert g.exact


def test_round_trip_is_bit_exact():
    g = parse_graph(SAMPLE)
    text = serialize_graph(g)
    assert parse_graph(text) == g
    assert serialize_graph(parse_graph(text)) == text


def test_float_parse():
    g = parse_graph(SAMPLE, exact=False)
    assert g.mu[(0, 2)] == 0.1 and not g.exact


def test_mode_override_derives_measures():
    g = parse_graph(SAMPLE, mode="physical")
    assert g.m == (1, 1, 1, 1)


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("edge 0 1\nedge 1 2 weight=3\n", 2),
        ("edge 0 1\n\nedge 1 q\n", 3),
        ("edge 0 0\n", 1),
        ("edge 0 1\nedge 1 0\n", 2),
        ("edge 0 1 mu=-1\n", 1),
        ("edge 0 1 mu=abc\n", 1),
        ("node 0\n", 1),
        ("vertex 0 m=1\nvertex 0 m=2\n", 2),
    ],
)
def test_line_numbered_errors(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_custom_needs_measures():
    with pytest.raises(ParseError, match="custom mode"):
        parse_graph("edge 0 1\n", mode="custom")


def test_disconnected_reported():
    with pytest.raises(ParseError, match="disconnected"):
        parse_graph("edge 0 1\nedge 2 3\n")


@pytest.mark.parametrize(
    "value, text",
    [(Fraction(1, 8), "0.125"), (Fraction(5, 2), "2.5"), (Fraction(7), "7"), (Fraction(-3, 40), "-0.075")],
)
def test_format_decimal(value, text):
    assert format_decimal(value) == text
    assert Fraction(text) == value


def test_serialize_unit_weights_compact():
    g = build_graph([(0, 1), (1, 2)])
    assert serialize_graph(g) == "edge 0 1\nedge 1 2\n"
