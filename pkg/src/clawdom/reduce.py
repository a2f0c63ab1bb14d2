"""Twin deletion and leaf commitment, with the bookkeeping to lift solutions.

Deleting one of two true twins keeps the domination number (contracting
``uv`` when ``N[u] = N[v]`` gives a graph isomorphic to ``G - u``). For a
leaf with support ``v`` in a connected claw-free graph, some minimum
dominating set is ``{v}`` plus a minimum dominating set of ``G - N[v]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from clawdom.detect import find_claw
from clawdom.errors import ClassViolation, LiftError
from clawdom.graph import Graph, connected_components, induced_subgraph, is_dominating

TWIN_DELETE = "twin_delete"
LEAF_COMMIT = "leaf_commit"


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    removed: frozenset[int]
    committed: Optional[int] = None
    survivor: Optional[int] = None

    def as_dict(self) -> dict:
        out: dict = {"kind": self.kind, "removed": sorted(self.removed)}
        if self.committed is not None:
            out["committed"] = self.committed
        if self.survivor is not None:
            out["survivor"] = self.survivor
        return out


@dataclass(frozen=True)
class Kernel:
    """An irreducible connected piece and its local-to-original id map."""

    graph: Graph
    ids: tuple[int, ...]

    def to_original(self, local) -> frozenset[int]:
        return frozenset(self.ids[v] for v in local)


@dataclass
class LiftStack:
    original: Graph
    steps: list[ReductionStep] = field(default_factory=list)
    kernels: list[Kernel] = field(default_factory=list)

    @property
    def committed(self) -> list[int]:
        return [s.committed for s in self.steps if s.kind == LEAF_COMMIT]

    def summary(self) -> dict:
        return {
            "twin_deletions": sum(s.kind == TWIN_DELETE for s in self.steps),
            "leaf_commits": sum(s.kind == LEAF_COMMIT for s in self.steps),
            "kernels": [k.graph.n for k in self.kernels],
        }


def find_twin_pair(g: Graph) -> Optional[tuple[int, int]]:
    """Lexicographically smallest ``(u, v)``, ``u < v``, with ``N[u] = N[v]``."""
    first: dict[int, int] = {}
    best = None
    for v, mask in enumerate(g.closed_masks):
        u = first.setdefault(mask, v)
        if u != v and (best is None or (u, v) < best):
            best = (u, v)
    return best


def find_leaf(g: Graph) -> Optional[tuple[int, int]]:
    """Smallest degree-one vertex and its support."""
    for u in range(g.n):
        if len(g.adj[u]) == 1:
            (v,) = g.adj[u]
            return u, v
    return None


def _split(g: Graph, ids: Sequence[int], keep) -> list[tuple[Graph, tuple[int, ...]]]:
    sub, local = induced_subgraph(g, keep)
    out = []
    for comp in connected_components(sub):
        piece, idx = induced_subgraph(sub, comp)
        out.append((piece, tuple(ids[local[i]] for i in idx)))
    return out


def reduce_to_kernel(g: Graph, check_claw: bool = True) -> tuple[list[Kernel], LiftStack]:
    """Apply both reductions until no component has a twin pair or a leaf."""
    if check_claw:
        claw = find_claw(g)
        if claw is not None:
            raise ClassViolation("leaf reduction needs a claw-free graph", claw)
    stack = LiftStack(g)
    work = deque(_split(g, tuple(range(g.n)), range(g.n)))
    while work:
        h, ids = work.popleft()
        while True:
            if h.n == 1:
                stack.steps.append(ReductionStep(LEAF_COMMIT, frozenset(ids), committed=ids[0]))
                break
            pair = find_twin_pair(h)
            if pair is not None:
                u, v = pair
                stack.steps.append(ReductionStep(TWIN_DELETE, frozenset({ids[v]}), survivor=ids[u]))
                h, local = induced_subgraph(h, [x for x in range(h.n) if x != v])
                ids = tuple(ids[i] for i in local)
                continue
            leaf = find_leaf(h)
            if leaf is not None:
                _, s = leaf
                gone = h.closed(s)
                stack.steps.append(
                    ReductionStep(LEAF_COMMIT, frozenset(ids[x] for x in gone), committed=ids[s])
                )
                work.extend(_split(h, ids, [x for x in range(h.n) if x not in gone]))
                break
            stack.kernels.append(Kernel(h, ids))
            break
    return stack.kernels, stack


def lift_solution(stack: LiftStack, kernel_sets) -> frozenset[int]:
    """Map per-kernel dominating sets (local ids) back to the original graph."""
    kernel_sets = list(kernel_sets)
    if len(kernel_sets) != len(stack.kernels):
        raise LiftError(f"expected {len(stack.kernels)} kernel sets, got {len(kernel_sets)}")
    out = set(stack.committed)
    for kern, local in zip(stack.kernels, kernel_sets):
        if not is_dominating(kern.graph, local):
            raise LiftError(f"set {sorted(local)} does not dominate its kernel")
        out |= kern.to_original(local)
    result = frozenset(out)
    assert is_dominating(stack.original, result), "lift produced a non-dominating set"
    return result
