import json

import pytest
from hypothesis import given, strategies as st

from clawdom.driver import solve
from clawdom.graph import cycle_graph, empty_graph, path_graph, star_graph
from clawdom.io import (
    DIMACS,
    EDGELIST,
    ParseError,
    emit_graph,
    emit_solution,
    parse_graph,
    sniff_format,
)

from conftest import graphs


def test_edgelist_example():
    assert parse_graph(b"3 2\n0 1\n1 2\n", EDGELIST) == path_graph(3)


def test_dimacs_example():
    assert parse_graph(b"p edge 3 2\ne 1 2\ne 2 3\n", DIMACS) == path_graph(3)


def test_out_of_range_line_number():
    with pytest.raises(ParseError) as exc:
        parse_graph(b"3 2\n0 5\n", EDGELIST)
    assert exc.value.line == 2


def test_comments_and_blank_lines():
    data = b"# a path\n3 2\n\n0 1  # first\n1 2\n"
    assert parse_graph(data, EDGELIST) == path_graph(3)
    assert parse_graph(b"c hello\np edge 3 2\ne 1 2\nc mid\ne 2 3\n", DIMACS) == path_graph(3)


@pytest.mark.parametrize("data,fmt,line", [
    (b"3\n0 1\n", EDGELIST, 1),
    (b"3 2\n0 1\n", EDGELIST, 2),
    (b"3 1\n0 x\n", EDGELIST, 2),
    (b"3 2\n0 1\n1 0\n", EDGELIST, 3),
    (b"3 1\n1 1\n", EDGELIST, 2),
    (b"e 1 2\n", DIMACS, 1),
    (b"p edge 3 1\ne 0 1\n", DIMACS, 2),
    (b"p edge 3 1\ne 1 4\n", DIMACS, 2),
    (b"p graph 3 1\ne 1 2\n", DIMACS, 1),
    (b"p edge 3 1\nx 1 2\n", DIMACS, 2),
    (b"p edge 3 2\ne 1 2\n", DIMACS, 2),
])
def test_parse_errors(data, fmt, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(data, fmt)
    assert exc.value.line == line


def test_missing_header():
    with pytest.raises(ParseError):
        parse_graph(b"", EDGELIST)
    with pytest.raises(ParseError):
        parse_graph(b"c only\n", DIMACS)


def test_unknown_format():
    with pytest.raises(ValueError):
        parse_graph(b"1 0\n", "gml")


def test_sniff():
    assert sniff_format(b"p edge 1 0\n") == DIMACS
    assert sniff_format(b"# x\n1 0\n") == EDGELIST


@given(graphs(max_n=12), st.sampled_from([EDGELIST, DIMACS]))
def test_round_trip(g, fmt):
    data = emit_graph(g, fmt)
    h = parse_graph(data, fmt)
    assert h == g
    assert emit_graph(h, fmt) == data


def test_emit_graph_bytes():
    assert emit_graph(path_graph(3), EDGELIST) == b"3 2\n0 1\n1 2\n"
    assert emit_graph(path_graph(3), DIMACS) == b"p edge 3 2\ne 1 2\ne 2 3\n"


def test_solution_c4():
    out = emit_solution(solve(cycle_graph(4)))
    assert out.endswith(b"\n") and out.count(b"\n") == 1
    rec = json.loads(out)
    assert list(rec) == ["n", "gamma", "dominating_set", "branch_trace", "reductions",
                         "class_report"]
    assert rec["gamma"] == 2 and len(rec["dominating_set"]) == 2
    assert rec["dominating_set"] == sorted(rec["dominating_set"])


def test_solution_empty():
    rec = json.loads(emit_solution(solve(empty_graph(0))))
    assert rec["gamma"] == 0 and rec["dominating_set"] == []


def test_solution_fallback():
    rec = json.loads(emit_solution(solve(star_graph(3), fallback_exact=True)))
    assert rec["class_report"]["claw_free"] is False
    assert sorted(rec["class_report"]["claw_witness"]) == [0, 1, 2, 3]
    assert rec["branch_trace"] == ["exact-fallback"]


def test_solution_bytes_are_stable():
    a = emit_solution(solve(cycle_graph(7), small_cutoff=0))
    b = emit_solution(solve(cycle_graph(7), small_cutoff=0))
    assert a == b
