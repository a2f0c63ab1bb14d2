"""Minimum independent dominating set of a chordal graph.

On claw-free graphs the domination number equals the independent
domination number, so on claw-free chordal graphs this is a minimum
dominating set.

The dynamic programme runs over the tree decomposition read off a perfect
elimination ordering: node ``v`` has bag ``{v} + later(v)`` (a clique) and
its parent is the earliest vertex of ``later(v)``. Going from ``v`` up to its
parent forgets exactly ``v``. A node's state is either the one bag vertex
that is selected (a clique holds at most one vertex of an independent set)
or ``None`` together with the set of bag vertices already dominated from
below. The number of ``None`` states is exponential in the bag size in the
worst case; only reachable states are kept, which stays small on the
graphs produced by the kernelization.
"""

from __future__ import annotations

from typing import Optional

from clawdom.detect import EliminationOrder, is_perfect_elimination
from clawdom.graph import Graph, is_dominating, is_independent

_INF = float("inf")


class EliminationError(ValueError):
    pass


def solve_chordal_clawfree(g: Graph, order: EliminationOrder) -> frozenset[int]:
    if not is_perfect_elimination(g, order.order):
        raise EliminationError("order is not a perfect elimination ordering")
    if g.n == 0:
        return frozenset()
    pos = order.position()
    later = {v: sorted((u for u in g.adj[v] if pos[u] > pos[v]), key=pos.__getitem__)
             for v in range(g.n)}
    parent = {v: (later[v][0] if later[v] else None) for v in range(g.n)}
    children: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for v in order.order:
        if parent[v] is not None:
            children[parent[v]].append(v)
    bag = {v: frozenset(later[v]) | {v} for v in range(g.n)}

    # table[v]: state -> (cost, choice) where state is ("sel", x) or ("dom", frozenset)
    table: dict[int, dict] = {}
    for v in order.order:
        table[v] = _node_table(g, v, bag, children[v], table)

    chosen: set[int] = set()
    for root in order.order:
        if parent[root] is not None:
            continue
        t = table[root]
        options = []
        if ("sel", root) in t:
            options.append((t[("sel", root)][0], 0, ("sel", root)))
        for state, (cost, _) in t.items():
            if state[0] == "dom" and root in state[1]:
                options.append((cost, 1, state))
        cost, _, state = min(options, key=lambda o: (o[0], o[1], _state_key(o[2])))
        _collect(root, state, table, chosen)
    result = frozenset(chosen)
    assert is_independent(g, result) and is_dominating(g, result)
    return result


def _state_key(state):
    kind, val = state
    return (kind, tuple(sorted(val)) if kind == "dom" else (val,))


def _child_options(c: int, s: Optional[int], bag, table):
    """Allowed child states given the parent's selection ``s``.

    Yields (cost, child_state, contribution) where contribution is the set
    of parent-bag vertices dominated from below (only used when s is None).
    """
    t = table[c]
    upper = bag[c] - {c}
    if s is not None and s in upper:
        entry = t.get(("sel", s))
        if entry is not None:
            yield entry[0], ("sel", s), upper
        return
    entry = t.get(("sel", c))
    if entry is not None:
        yield entry[0], ("sel", c), upper
    for state, (cost, _) in t.items():
        if state[0] == "dom" and c in state[1]:
            yield cost, state, state[1] & upper


def _node_table(g: Graph, v: int, bag, kids: list[int], table) -> dict:
    out = {}
    for s in sorted(bag[v]):
        total = 1 if s == v else 0
        picks = []
        feasible = True
        for c in kids:
            best = min(_child_options(c, s, bag, table), default=None,
                       key=lambda o: (o[0], _state_key(o[1])))
            if best is None:
                feasible = False
                break
            total += best[0]
            picks.append((c, best[1]))
        if feasible:
            out[("sel", s)] = (total, tuple(picks))
    # nothing in the bag selected: fold children, tracking what is dominated
    partial: dict[frozenset, tuple[float, tuple]] = {frozenset(): (0, ())}
    for c in kids:
        nxt: dict[frozenset, tuple[float, tuple]] = {}
        opts = list(_child_options(c, None, bag, table))
        for dom, (cost, picks) in partial.items():
            for ccost, cstate, contrib in opts:
                key = dom | contrib
                val = (cost + ccost, picks + ((c, cstate),))
                old = nxt.get(key)
                if old is None or val[0] < old[0]:
                    nxt[key] = val
        partial = nxt
        if not partial:
            break
    for dom, (cost, picks) in partial.items():
        out[("dom", frozenset(dom))] = (cost, picks)
    return out


def _collect(v: int, state, table, chosen: set[int]) -> None:
    _, picks = table[v][state]
    if state == ("sel", v):
        chosen.add(v)
    for c, cstate in picks:
        _collect(c, cstate, table, chosen)
