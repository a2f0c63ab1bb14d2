"""Immutable simple undirected graphs over vertices ``0..n-1``.

Adjacency is kept twice: as frozensets for readable set algebra and as
Python ``int`` bitmasks (closed neighbourhoods) for the hot kernels.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import Sequence

VertexSet = frozenset


class GraphError(ValueError):
    """Base class for invalid graph construction."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph. Instances are never mutated after creation."""

    __slots__ = ("n", "adj", "closed_masks", "edge_count", "_hash")

    def __init__(self, n: int, adj: Sequence[frozenset[int]]):
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(adj)
        self.closed_masks: tuple[int, ...] = tuple(
            to_mask(nb) | (1 << v) for v, nb in enumerate(self.adj)
        )
        self.edge_count = sum(len(nb) for nb in self.adj) // 2
        self._hash = None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.adj)
        return self._hash

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def common_neighbors(self, u: int, v: int) -> frozenset[int]:
        a, b = self.adj[u], self.adj[v]
        if len(a) > len(b):
            a, b = b, a
        return frozenset(x for x in a if x in b)

    def closed_neighborhood(self, s: Iterable[int]) -> frozenset[int]:
        return closed_neighborhood(self, s)

    def is_dominating(self, s: Iterable[int]) -> bool:
        return is_dominating(self, s)

    def mask_of(self, s: Iterable[int]) -> int:
        return to_mask(s)

    def dominated_mask(self, s: Iterable[int]) -> int:
        m = 0
        for v in s:
            m |= self.closed_masks[v]
        return m


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, rejecting self-loops, repeated edges and bad identifiers."""
    if n < 0:
        raise VertexRangeError(f"negative vertex count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at {u}")
        if v in adj[u]:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, [frozenset(a) for a in adj])


def from_adjacency(adj: Sequence[Iterable[int]]) -> Graph:
    """Build from an adjacency list that is already symmetric and loop-free."""
    return Graph(len(adj), [frozenset(a) for a in adj])


def empty_graph(n: int = 0) -> Graph:
    return Graph(n, [frozenset()] * n)


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """``N[s]``: the members of ``s`` together with all their neighbours."""
    out: set[int] = set()
    for v in s:
        out.add(v)
        out |= g.adj[v]
    return frozenset(out)


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    return g.dominated_mask(s) == g.full_mask


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Relabel ``g[s]`` onto ``0..|s|-1`` in ascending order of original id.

    Returns the subgraph and the tuple mapping new ids to original ids.
    """
    keep = tuple(sorted(set(s)))
    index = {v: i for i, v in enumerate(keep)}
    adj = [frozenset(index[u] for u in g.adj[v] if u in index) for v in keep]
    return Graph(len(keep), adj), keep


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    seen = 0
    comps = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.closed_masks[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(frozenset(iter_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    members = set(s)
    return all(not (g.adj[v] & members) for v in members)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    members = list(s)
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if v not in g.adj[u]:
                return False
    return True


# small named graphs used across tests, generators and docs

def path_graph(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return build_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def line_graph(n: int, edges: Sequence[tuple[int, int]]) -> Graph:
    """Line graph of the simple graph on ``n`` vertices with the given edges.

    Vertex ``i`` of the result is ``edges[i]``.
    """
    incident: list[list[int]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    adj: list[set[int]] = [set() for _ in edges]
    for bucket in incident:
        for a in bucket:
            adj[a].update(b for b in bucket if b != a)
    return Graph(len(edges), [frozenset(a) for a in adj])
