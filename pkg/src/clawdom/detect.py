"""Induced claw / path / hole detection and chordality recognition.

Path and cycle search is exact backtracking over partial induced paths
(see ``_pykernels``); it is exponential in the worst case but fast on the
sparse, structured graphs this package targets. Every witness re-checks
itself against the graph before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from clawdom import _kernels
from clawdom.graph import Graph

CLAW = "claw"
PATH = "path"
CYCLE = "cycle"


class WitnessError(AssertionError):
    """A witness failed its own verification (a detector bug)."""


@dataclass(frozen=True)
class InducedWitness:
    kind: str
    vertices: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.vertices)

    def label(self) -> str:
        if self.kind == CLAW:
            return "claw"
        return f"{'P' if self.kind == PATH else 'C'}{self.k}"

    def verify(self, g: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            return False
        if self.kind == CLAW:
            if len(vs) != 4:
                return False
            c, leaves = vs[0], vs[1:]
            return all(g.has_edge(c, x) for x in leaves) and not any(
                g.has_edge(a, b) for i, a in enumerate(leaves) for b in leaves[i + 1:]
            )
        k = len(vs)
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (self.kind == CYCLE and i == 0 and j == k - 1)
                if g.has_edge(vs[i], vs[j]) != consecutive:
                    return False
        return self.kind == PATH or k >= 3

    def as_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


def _checked(g: Graph, w: InducedWitness) -> InducedWitness:
    if not w.verify(g):
        raise WitnessError(f"invalid {w.label()} witness {w.vertices}")
    return w


def find_claw(g: Graph) -> Optional[InducedWitness]:
    """First claw ``(center, a, b, c)`` by ascending center, then leaves."""
    for c in range(g.n):
        nb = sorted(g.adj[c])
        if len(nb) < 3:
            continue
        for i, a in enumerate(nb):
            na = g.adj[a]
            for j in range(i + 1, len(nb)):
                b = nb[j]
                if b in na:
                    continue
                nab = na | g.adj[b]
                for x in nb[j + 1:]:
                    if x not in nab:
                        return _checked(g, InducedWitness(CLAW, (c, a, b, x)))
    return None


def find_induced_path(g: Graph, k: int) -> Optional[InducedWitness]:
    if not 1 <= k <= 8:
        raise ValueError(f"path length {k} outside 1..8")
    found = _kernels.induced_path(g.closed_masks, g.n, k)
    return None if found is None else _checked(g, InducedWitness(PATH, tuple(found)))


def find_induced_cycle(g: Graph, k: int) -> Optional[InducedWitness]:
    if not 4 <= k <= 8:
        raise ValueError(f"hole length {k} outside 4..8")
    found = _kernels.induced_cycle(g.closed_masks, g.n, k)
    return None if found is None else _checked(g, InducedWitness(CYCLE, tuple(found)))


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple[int, ...]

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


def lexbfs(g: Graph) -> list[int]:
    """Lexicographic BFS visit order; ties go to the smallest vertex.

    Quadratic label-list implementation, which is plenty for the graph sizes
    handled here.
    """
    labels: dict[int, list[int]] = {v: [] for v in range(g.n)}
    order = []
    remaining = set(range(g.n))
    step = g.n
    while remaining:
        v = max(remaining, key=lambda u: (labels[u], -u))
        remaining.remove(v)
        order.append(v)
        for u in g.adj[v]:
            if u in remaining:
                labels[u].append(step)
        step -= 1
    return order


def is_perfect_elimination(g: Graph, order) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    if sorted(pos) != list(range(g.n)):
        return False
    for v in order:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        for i, a in enumerate(later):
            na = g.adj[a]
            for b in later[i + 1:]:
                if b not in na:
                    return False
    return True


def lexbfs_elimination(g: Graph) -> Optional[EliminationOrder]:
    """A perfect elimination ordering if ``g`` is chordal, else ``None``."""
    order = lexbfs(g)[::-1]
    if is_perfect_elimination(g, order):
        return EliminationOrder(tuple(order))
    return None


def find_any_hole(g: Graph, max_k: int = 8) -> Optional[InducedWitness]:
    for k in range(4, max_k + 1):
        w = find_induced_cycle(g, k)
        if w is not None:
            return w
    return None
