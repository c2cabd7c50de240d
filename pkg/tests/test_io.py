import io

import pytest

from conftest import random_graph
from qspectral.fixtures import claw
from qspectral.graph import ClusteredGraph, build_graph, complete
from qspectral.io import (
    FormatError,
    format_edgelist,
    from_graph6,
    ingest_graph6,
    parse_edgelist,
    read_graph6_file,
    to_dot,
    to_graph6,
)


def test_edgelist_round_trip():
    text = "# the claw\nq=2\n0 2\n1 2  # comment\n\n2 3\n"
    g = parse_edgelist(text)
    assert g == claw()
    assert format_edgelist(g) == "q=2\n0 2\n1 2\n2 3\n"
    assert parse_edgelist(format_edgelist(g)) == g


@pytest.mark.parametrize(
    "text, line",
    [
        ("0 1\n", 1),
        ("q=2\n0 1\nx y\n", 3),
        ("q=2\n0 1 2\n", 2),
        ("q=two\n", 1),
    ],
)
def test_edgelist_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as exc:
        parse_edgelist(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_edgelist_semantic_errors():
    with pytest.raises(FormatError):
        parse_edgelist("")
    with pytest.raises(FormatError):
        parse_edgelist("q=2\n0 9\n")


def test_graph6_known_strings():
    assert to_graph6(complete(2)) == "C~"
    assert from_graph6("C~") == complete(2)
    assert from_graph6(">>graph6<<C~") == complete(2)
    assert to_graph6(build_graph(1, [])) == "@"
    assert isinstance(from_graph6("C~"), ClusteredGraph)
    assert not isinstance(from_graph6("Bw"), ClusteredGraph)


def test_graph6_round_trip(rng):
    for _ in range(50):
        g = random_graph(rng, rng.randint(0, 13))
        h = from_graph6(to_graph6(g))
        assert (h.n, h.edges) == (g.n, g.edges)


def test_graph6_long_header():
    g = build_graph(70, [(0, 69), (3, 4)])
    s = to_graph6(g)
    assert s[0] == "~"
    h = from_graph6(s)
    assert (h.n, h.edges) == (g.n, g.edges)


def test_graph6_errors():
    with pytest.raises(FormatError):
        from_graph6("")
    with pytest.raises(FormatError):
        from_graph6("C~~")
    with pytest.raises(FormatError) as exc:
        list(ingest_graph6(["C~", "", "C !"]))
    assert exc.value.line == 3


def test_graph6_file():
    fh = io.StringIO("C~\n\nA_\n")
    gs = read_graph6_file(fh)
    assert [g.n for g in gs] == [4, 2]


def test_dot_output():
    dot = to_dot(claw(), "K")
    assert dot.startswith("graph K {")
    assert "v1_1 -- v2_1;" in dot
    assert "v2_1 -- v2_2;" in dot
    assert dot.count("--") == 3
