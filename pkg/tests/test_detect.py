import itertools

import networkx as nx
import pytest
from hypothesis import given

from clawdom.detect import (
    CYCLE,
    PATH,
    find_any_hole,
    find_claw,
    find_induced_cycle,
    find_induced_path,
    is_perfect_elimination,
    lexbfs_elimination,
)
from clawdom.graph import build_graph, complete_graph, cycle_graph, line_graph, path_graph, star_graph

from conftest import graphs


def brute_induced(g, kind, k):
    """Presence of an induced claw / P_k / C_k by checking every k-subset and ordering."""
    for sub in itertools.combinations(range(g.n), k):
        edges = sum(g.has_edge(a, b) for a, b in itertools.combinations(sub, 2))
        degs = sorted(sum(g.has_edge(v, u) for u in sub if u != v) for v in sub)
        if kind == "claw" and edges == 3 and degs == [1, 1, 1, 3]:
            return True
        if kind == PATH and edges == k - 1 and degs == ([0] if k == 1 else [1, 1] + [2] * (k - 2)):
            if _connected(g, sub):
                return True
        if kind == CYCLE and edges == k and degs == [2] * k and _connected(g, sub):
            return True
    return False


def _connected(g, sub):
    sub = set(sub)
    seen = {min(sub)}
    stack = [min(sub)]
    while stack:
        v = stack.pop()
        for u in g.adj[v] & sub:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == sub


def test_claw_examples():
    w = find_claw(star_graph(3))
    assert w is not None and w.vertices[0] == 0 and set(w.vertices[1:]) == {1, 2, 3}
    assert find_claw(cycle_graph(5)) is None
    assert find_claw(line_graph(4, [(0, 1), (0, 2), (0, 3)])) is None


def test_path_examples():
    w = find_induced_path(path_graph(8), 8)
    assert w is not None and w.verify(path_graph(8))
    assert find_induced_path(cycle_graph(8), 8) is None
    assert find_induced_path(complete_graph(4), 3) is None


def test_cycle_examples():
    assert find_induced_cycle(cycle_graph(6), 6) is not None
    assert find_induced_cycle(cycle_graph(6), 5) is None
    chord = build_graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    w = find_induced_cycle(chord, 4)
    assert set(w.vertices) in ({0, 1, 2, 3}, {0, 3, 4, 5})


def test_lexbfs_examples():
    tree = build_graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    order = lexbfs_elimination(tree)
    assert order is not None and is_perfect_elimination(tree, order.order)
    assert lexbfs_elimination(cycle_graph(4)) is None
    k4 = complete_graph(4)
    for perm in itertools.permutations(range(4)):
        assert is_perfect_elimination(k4, perm)


def test_out_of_range_lengths():
    with pytest.raises(ValueError):
        find_induced_cycle(cycle_graph(9), 9)
    with pytest.raises(ValueError):
        find_induced_path(path_graph(9), 9)


@given(graphs(max_n=9))
def test_detectors_match_enumeration(g):
    assert (find_claw(g) is not None) == brute_induced(g, "claw", 4)
    for k in range(2, 9):
        w = find_induced_path(g, k)
        assert (w is not None) == brute_induced(g, PATH, k)
        if w is not None:
            assert w.verify(g) and w.k == k
    for k in range(4, 9):
        w = find_induced_cycle(g, k)
        assert (w is not None) == brute_induced(g, CYCLE, k)
        if w is not None:
            assert w.verify(g) and w.k == k


@given(graphs(max_n=10))
def test_chordality_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    order = lexbfs_elimination(g)
    assert (order is not None) == nx.is_chordal(h)
    if order is not None:
        assert is_perfect_elimination(g, order.order)
    # any hole of length at most 8 is found exactly when one exists
    hole = find_any_hole(g)
    if hole is not None:
        assert hole.verify(g) and order is None
