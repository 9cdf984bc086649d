from __future__ import annotations

import pytest

from decmin.errors import ParseError
from decmin.io import parse_bounds, parse_digraph, parse_graph, parse_int_list, parse_mixed, read_text
from decmin.setfn import NEG_INF, POS_INF


def test_graph_with_mult_and_costs():
    G = parse_graph("3 3\n0 1 0 0\n1 2 4 1 1\n# comment\n2 0 2 1 5\n")
    assert G.edges == [(0, 1), (1, 2), (2, 0)]
    assert G.mult == [1, 4, 2]
    assert G.cost == [(0, 0), (1, 1), (1, 5)]
    assert parse_graph("2 1\n0 1 3\n").cost is None


def test_graph_costs_only():
    G = parse_graph("2 1\n0 1 3 7\n")
    assert G.mult is None and G.cost == [(3, 7)]


def test_graph_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 3: expected an integer, got 'x'"):
        parse_graph("2 2\n0 1\n0 x\n")
    with pytest.raises(ParseError, match="line 2: loop"):
        parse_graph("2 1\n1 1\n")
    with pytest.raises(ParseError, match="line 2: node 5 outside"):
        parse_graph("2 1\n0 5\n")
    with pytest.raises(ParseError, match="header"):
        parse_graph("")
    with pytest.raises(ParseError, match="announces 2"):
        parse_graph("2 2\n0 1\n")
    with pytest.raises(ParseError, match="every edge or no edge"):
        parse_graph("2 2\n0 1 1 2\n0 1\n")


def test_digraph_defaults_and_bounds():
    D, b, cost = parse_digraph("3 2\n0 1\n1 2 -inf 4 7\n")
    assert D.arcs == [(0, 1), (1, 2)]
    assert b.lower == [0, NEG_INF] and b.upper == [POS_INF, 4]
    assert cost == [0, 7]
    with pytest.raises(ParseError, match="line 2: arc 0->1: lower bound above"):
        parse_digraph("2 1\n0 1 3 1\n")
    with pytest.raises(ParseError, match="line 2: bad arc line"):
        parse_digraph("2 1\n0 1 3\n")


def test_mixed():
    M = parse_mixed("3 3\n0 1 U\n1 2 D 2\n2 0 u\n")
    assert M.edges == [(0, 1), (2, 0)] and M.arcs == [(1, 2), (1, 2)]
    with pytest.raises(ParseError, match="line 2: third column"):
        parse_mixed("2 1\n0 1 X\n")


def test_bounds():
    b = parse_bounds("0 1 +inf\n2 -inf 3\n", 3)
    assert b.lower == [1, NEG_INF, NEG_INF] and b.upper == [POS_INF, POS_INF, 3]
    b = parse_bounds("", 2, 0, 1)
    assert b.lower == [0, 0] and b.upper == [1, 1]
    with pytest.raises(ParseError, match="line 2: node 1: lower bound above"):
        parse_bounds("0 0 1\n1 3 2\n", 2)
    with pytest.raises(ParseError, match="line 1: bad bounds line"):
        parse_bounds("0 1\n", 2)


def test_int_list_and_missing_file(tmp_path):
    assert parse_int_list("1, 2 3") == [1, 2, 3]
    with pytest.raises(ParseError):
        parse_int_list("1 a")
    with pytest.raises(ParseError, match="cannot read"):
        read_text(str(tmp_path / "nope.txt"))
