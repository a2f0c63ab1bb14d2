import pytest
from hypothesis import given, strategies as st

from clawdom.graph import (
    DuplicateEdgeError,
    SelfLoopError,
    VertexRangeError,
    build_graph,
    closed_neighborhood,
    complete_graph,
    connected_components,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    is_dominating,
    line_graph,
    path_graph,
)

from conftest import graphs


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g == path_graph(3)
    assert g.edges() == [(0, 1), (1, 2)]


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        build_graph(2, [(0, 0)])


def test_build_rejects_duplicate():
    with pytest.raises(DuplicateEdgeError):
        build_graph(4, [(0, 1), (0, 1)])
    with pytest.raises(DuplicateEdgeError):
        build_graph(4, [(0, 1), (1, 0)])


def test_build_rejects_range():
    with pytest.raises(VertexRangeError):
        build_graph(3, [(0, 3)])


def test_closed_neighborhood_examples():
    assert closed_neighborhood(path_graph(3), {1}) == {0, 1, 2}
    assert closed_neighborhood(cycle_graph(5), {0, 2}) == set(range(5))
    assert closed_neighborhood(cycle_graph(5), set()) == set()


def test_is_dominating_examples():
    assert is_dominating(cycle_graph(4), {0, 2})
    assert not is_dominating(cycle_graph(4), {0})
    assert is_dominating(empty_graph(0), set())


def test_induced_subgraph_examples():
    h, ids = induced_subgraph(cycle_graph(5), {0, 1, 2})
    assert h == path_graph(3) and ids == (0, 1, 2)
    g = cycle_graph(6)
    h, ids = induced_subgraph(g, range(6))
    assert h == g and ids == tuple(range(6))
    h, ids = induced_subgraph(g, set())
    assert h.n == 0 and ids == ()


def test_components_examples():
    two = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert sorted(map(len, connected_components(two))) == [3, 3]
    assert connected_components(cycle_graph(6)) == [frozenset(range(6))]
    assert connected_components(empty_graph(0)) == []


def test_line_graph_of_path_is_path():
    assert line_graph(9, [(i, i + 1) for i in range(8)]) == path_graph(8)


def test_line_graph_of_triangle():
    assert line_graph(3, [(0, 1), (1, 2), (0, 2)]) == complete_graph(3)


@given(graphs(), st.data())
def test_set_inside_its_closed_neighborhood(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)))) if g.n else set()
    assert s <= closed_neighborhood(g, s)


@given(graphs())
def test_whole_vertex_set_dominates(g):
    assert is_dominating(g, range(g.n))


@given(graphs())
def test_components_partition_vertices(g):
    comps = connected_components(g)
    assert sum(map(len, comps)) == g.n
    assert frozenset().union(*comps) == frozenset(range(g.n))
    for c in comps:
        for v in c:
            assert g.adj[v] <= c


@given(graphs(), st.data())
def test_induced_subgraph_keeps_adjacency(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)))) if g.n else set()
    h, ids = induced_subgraph(g, s)
    assert h.n == len(s)
    for a in range(h.n):
        for b in range(h.n):
            assert h.has_edge(a, b) == g.has_edge(ids[a], ids[b])
