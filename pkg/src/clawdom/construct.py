"""Minimum dominating set constructions, one per structured case.

Each solver receives a kernelized connected graph (no true twins, no
leaves) that avoids the forbidden subgraphs of its case, plus the spine the
dispatcher found. The structure is computed with :mod:`clawdom.anatomy`,
a base set forced by the lower-bound argument is assembled, and
:func:`complete_base` finishes it by scanning the candidate pools of the
case before falling back to the fixed completion.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from clawdom.anatomy import (
    CLAWP8,
    P6P7,
    P8C,
    Anatomy,
    ZPartition,
    cycle_anatomy,
    cycle_labelings,
    path_anatomy,
    z_partition,
)
from clawdom.detect import InducedWitness
from clawdom.errors import StructureViolation
from clawdom.exact import mds_bounded
from clawdom.graph import Graph, is_dominating

log = logging.getLogger(__name__)

NONE, SINGLETON, PAIR, TRIPLE, FALLBACK, SEARCH = (
    "none", "singleton", "pair", "triple", "fallback", "search",
)


@dataclass
class BranchResult:
    set: frozenset[int]
    branch: str
    sub: str = ""
    completion_used: str = NONE
    notes: list[str] = field(default_factory=list)

    @property
    def label(self) -> str:
        return f"{self.branch}/{self.sub}" if self.sub else self.branch


def _result(g: Graph, dom: Iterable[int], branch: str, sub: str = "", completion: str = NONE,
            notes=()) -> BranchResult:
    dom = frozenset(dom)
    if not is_dominating(g, dom):
        raise StructureViolation(f"{branch}/{sub} produced a non-dominating set", sorted(dom))
    return BranchResult(dom, branch, sub, completion, list(notes))


def _bounded(g: Graph, cap: int, branch: str, sub: str) -> BranchResult:
    found = mds_bounded(g, cap)
    if found is None:
        raise StructureViolation(f"{branch}: no dominating set within the bound {cap}")
    return _result(g, found, branch, sub, SEARCH)


def complete_base(
    g: Graph,
    base: Iterable[int],
    singles: Sequence[Iterable[int]] = (),
    pairs: Sequence[tuple[Iterable[int], Iterable[int]]] = (),
    fallback: Iterable[int] = (),
    triples: Sequence[tuple[Iterable[int], Iterable[int], Iterable[int]]] = (),
) -> tuple[frozenset[int], str]:
    """Cheapest extension of ``base`` to a dominating set.

    Tries ``base`` alone, then one vertex from each singles pool, then one
    vertex from each side of a pool pair, then triples, stopping before any
    stage that cannot beat ``base | fallback``. Pools are scanned in
    ascending vertex order.
    """
    base = frozenset(base)
    fallback = frozenset(fallback)
    full = g.full_mask
    cm = g.closed_masks
    dom = g.dominated_mask(base)
    if g.dominated_mask(base | fallback) != full:
        raise StructureViolation("base plus fallback does not dominate", sorted(base | fallback))
    if dom == full:
        return base, NONE
    need = full & ~dom
    extra = len(fallback - base)

    if extra > 1:
        for pool in singles:
            for s in sorted(pool):
                if cm[s] & need == need:
                    return base | {s}, SINGLETON
    if extra > 2:
        for left, right in pairs:
            rs = sorted(right)
            for a in sorted(left):
                rest = need & ~cm[a]
                for b in rs:
                    if cm[b] & rest == rest:
                        return base | {a, b}, PAIR
    if extra > 3:
        for pools in triples:
            for a, b, c in product(*(sorted(p) for p in pools)):
                if (cm[a] | cm[b] | cm[c]) & need == need:
                    return base | {a, b, c}, TRIPLE
    return base | fallback, FALLBACK


def _require(cond: bool, message: str, vertices=()) -> None:
    if not cond:
        raise StructureViolation(message, vertices)


# -- long holes ---------------------------------------------------------------

def solve_cycle_dominates_all(g: Graph, c: InducedWitness) -> BranchResult:
    """A long hole dominates the whole graph, so the search depth is at most ``|C|``."""
    spine = frozenset(c.vertices)
    missed = set(range(g.n)) - g.closed_neighborhood(spine)
    _require(not missed, f"C{c.k} does not dominate the graph", sorted(missed))
    return _bounded(g, c.k, f"C{c.k}", "")


# -- C4 in a (claw, P6, C5, C6)-free graph ------------------------------------

def solve_c4_p6(g: Graph, c4: InducedWitness) -> BranchResult:
    an = cycle_anatomy(g, c4, w_independent=True)
    q = len(an.W)
    if q <= 1:
        return _bounded(g, 4 + q, "C4", "|W|<=1")
    outer = frozenset().union(*(g.adj[w] for w in an.W))
    for rot, refl in cycle_labelings(4):
        lab = cycle_anatomy(g, c4, rot, refl)
        if all(lab.attach.get(x) == frozenset({1, 2}) for x in outer):
            break
    else:
        raise StructureViolation("no C4 labelling puts every neighbour of W on one edge", sorted(outer))
    pick = {min(g.adj[w]) for w in sorted(lab.W)}
    dom, how = complete_base(g, pick, singles=[lab.spine_set | lab.S], fallback=lab.vs(3))
    return _result(g, dom, "C4", "|W|>=2", how)


# -- C6 in a (claw, P8, C7, C8)-free graph ------------------------------------

def solve_c6_p8(g: Graph, c6: InducedWitness) -> BranchResult:
    an = cycle_anatomy(g, c6, w_independent=True)
    q = len(an.W)
    if q <= 1:
        return _bounded(g, 6 + q, "C6", "|W|<=1")
    for rot, refl in cycle_labelings(6):
        lab = cycle_anatomy(g, c6, rot, refl)
        if all(g.adj[w] & lab.H[1] and g.adj[w] & lab.H[4] for w in lab.W):
            break
    else:
        raise StructureViolation("no C6 labelling gives every W vertex opposite attachments",
                                 sorted(an.W))
    dom, how = complete_base(g, lab.W, singles=[lab.spine_set | lab.S], fallback=lab.vs(1, 4))
    notes = []
    if how != FALLBACK:
        notes.append(f"completion {how} beat the opposite-corner pair")
        log.warning("C6 branch: %s", notes[-1])
    return _result(g, dom, "C6", "|W|>=2", how, notes)


# -- C5 in a (claw, P8, C6, C7, C8)-free graph --------------------------------

def solve_c5_p8(g: Graph, c5: InducedWitness) -> BranchResult:
    an = cycle_anatomy(g, c5)
    if not an.W:
        return _bounded(g, 5, "C5/W0", "")
    labelings = [cycle_anatomy(g, c5, rot, refl) for rot, refl in cycle_labelings(5)]
    for lab in labelings:
        if any(g.adj[w] & lab.R[1] and g.adj[w] & lab.R[3] for w in lab.W):
            return _c5_z13(g, lab)
    for lab in labelings:
        if lab.R[1]:
            return _c5_zsingle(g, lab)
    raise StructureViolation("W is non-empty but no spine edge reaches it", sorted(an.W))


def _c5_z13(g: Graph, an: Anatomy) -> BranchResult:
    for i in (2, 4, 5):
        _require(not an.R[i], f"C5/Z13: R{i} must be empty", sorted(an.R[i]))
    zp = z_partition(an, CLAWP8)
    z13 = zp.Z_pair.get((1, 3), frozenset())
    _require(z13 == an.W, "C5/Z13: every W vertex must see both R1 and R3", sorted(an.W - z13))
    if len(z13) <= 1:
        return _bounded(g, 6, "C5/Z13", "|W|<=1")
    w1, w1b, *rest = sorted(z13)
    base = {min(g.adj[w1] & an.R[1]), min(g.adj[w1b] & an.R[3]), *rest}
    dom, how = complete_base(g, base, singles=[an.S | {an.v(5)}], fallback=an.vs(2, 5))
    return _result(g, dom, "C5/Z13", "q>=2", how)


def _c5_zsingle(g: Graph, an: Anatomy) -> BranchResult:
    for i in (2, 3, 4, 5):
        _require(not an.R[i], f"C5/Z-single: R{i} must be empty", sorted(an.R[i]))
    for i in (2, 5):
        _require(not an.H[i], f"C5/Z-single: H{i} must be empty", sorted(an.H[i]))
    zp = z_partition(an, CLAWP8)
    Y = zp.Y
    base: set[int] = set()
    for y in sorted(Y):
        nb = g.adj[y]
        _require(bool(nb), "C5/Z-single: isolated Y vertex", (y,))
        _require(nb <= zp.Z, "C5/Z-single: Y vertex with a neighbour outside Z", (y,))
        _require(all(nb - {x} <= g.adj[x] for x in nb), "C5/Z-single: N(y) is not a clique", (y,))
        _require(not (base & nb), "C5/Z-single: two Y vertices share a neighbour", (y,))
        reach = frozenset().union(*(g.adj[z] & an.R[1] for z in nb))
        full = [z for z in sorted(nb) if reach <= g.adj[z]]
        base.add(full[0] if full else min(nb))
    case_a = False
    for comp in zp.components:
        rs = [r for r in sorted(an.R[1]) if comp <= g.adj[r]]
        if rs:
            base.add(rs[0])
            case_a = True
        else:
            base.add(_widest(g, zp.universal[comp], an.R_all))
    C = an.spine_set
    if case_a:
        dom, how = complete_base(g, base, singles=[C | an.S], fallback=an.vs(3, 5))
        sub = "a"
    else:
        near = g.closed_neighborhood(C)
        dom, how = complete_base(g, base, singles=[C | an.S], pairs=[(near, near)],
                                 fallback=an.vs(1, 3, 5))
        sub = "b"
    return _result(g, dom, "C5/Z-single", sub, how)


# -- induced P7 / P6 ------------------------------------------------------------

def _widest(g: Graph, candidates, part: frozenset[int]) -> int:
    """A candidate whose neighbours in ``part`` include every other candidate's, if any."""
    reach = frozenset().union(*(g.adj[c] & part for c in candidates))
    full = [c for c in candidates if reach <= g.adj[c]]
    if full:
        return full[0]
    return max(candidates, key=lambda c: (len(g.adj[c] & part), -c))


def _cover_components(g: Graph, an: Anatomy, zp: ZPartition, label: str) -> set[int]:
    """One vertex per Y vertex, then one per component of Z not touching Y.

    A Y vertex takes a universal vertex of its component adjacent to it; a
    free component takes an R vertex complete to it when there is one,
    otherwise a universal vertex. Among universal vertices the one seeing
    every R vertex the others see is preferred.
    """
    base: set[int] = set()
    touched: set[frozenset[int]] = set()
    for y in sorted(zp.Y):
        nb = g.adj[y]
        comps = {zp.component_of(z) for z in nb}
        _require(None not in comps and len(comps) == 1,
                 f"{label}: Y vertex must attach to exactly one component", (y,))
        (comp,) = comps
        unis = [u for u in zp.universal[comp] if u in nb]
        _require(bool(unis), f"{label}: Y vertex sees no universal vertex of its component", (y,))
        _require(not (base & nb), f"{label}: two Y vertices share a neighbour", (y,))
        base.add(_widest(g, unis, an.R_all))
        touched.add(comp)
    for comp in zp.components:
        if comp in touched:
            continue
        idx = zp.component_index[comp]
        rs = [r for r in sorted(an.R[idx]) if comp <= g.adj[r]]
        base.add(rs[0] if rs else _widest(g, zp.universal[comp], an.R_all))
    return base


def solve_p7_p8(g: Graph, p7: InducedWitness) -> BranchResult:
    an = path_anatomy(g, p7)
    if not an.W:
        return _bounded(g, 7, "P7/W0", "")
    zp = z_partition(an, P8C)
    if not zp.Z_pair[(2, 4)] and zp.Z_pair[(3, 5)]:
        an = path_anatomy(g, p7, reverse=True)
        zp = z_partition(an, P8C)
    for i in (2, 5):
        _require(not zp.Z_single[i], f"P7: Z{i} must be empty", sorted(zp.Z_single[i]))
    end1, end7 = g.adj[an.v(1)], g.adj[an.v(7)]
    z24 = zp.Z_pair[(2, 4)]
    if z24:
        _require(not an.R[3], "P7/Z24: R3 must be empty", sorted(an.R[3]))
        for w in z24:
            _require(g.adj[w] <= an.R[2] | an.R[4], "P7/Z24: Z24 vertex outside R2+R4", (w,))
        base = _cover_components(g, an, zp, "P7/Z24")
        if len(z24) >= 2:
            w, *others = sorted(z24)
            base.add(min(g.adj[w] & an.R[2]))
            base.update(min(g.adj[x] & an.R[4]) for x in others)
            dom, how = complete_base(g, base, singles=[end1 & end7], pairs=[(end1, end7)],
                                     fallback=an.vs(2, 4, 6))
            return _result(g, dom, "P7/Z24", "|Z24|>=2", how)
        (w,) = z24
        dom, how = complete_base(
            g, base, singles=[end1 & end7], pairs=[(end1, end7)],
            triples=[(end1, end7, an.R[2] | an.R[4])], fallback=an.vs(2, 4, 6) | {w},
        )
        return _result(g, dom, "P7/Z24", "|Z24|=1", how)
    base = _cover_components(g, an, zp, "P7/Y")
    y3, y4 = zp.Y_parts[3], zp.Y_parts[4]
    z3, z4 = zp.Z_single[3], zp.Z_single[4]
    if y3 and y4:
        sub = "Y3,Y4"
    elif y3 or y4:
        sub = "one Y, Z other" if (z4 if y3 else z3) else "one Y"
    elif z3 and z4:
        sub = "Z3,Z4"
    else:
        sub = "one Z"
    dom, how = complete_base(g, base, singles=[end1 & end7], pairs=[(end1, end7)],
                             fallback=an.vs(2, 4, 6))
    return _result(g, dom, "P7/Y", sub, how)


def solve_p6_p7(g: Graph, p6: InducedWitness) -> BranchResult:
    an = path_anatomy(g, p6)
    if not an.W:
        return _bounded(g, 6, "P6/W0", "")
    zp = z_partition(an, P6P7)
    for i in (2, 4):
        _require(not zp.Z_single[i], f"P6: Z{i} must be empty", sorted(zp.Z_single[i]))
    end1, end6 = g.adj[an.v(1)], g.adj[an.v(6)]
    z24 = zp.Z_pair[(2, 4)]
    if z24:
        _require(not an.R[3], "P6/Z24: R3 must be empty", sorted(an.R[3]))
        _require(z24 == an.W, "P6/Z24: W must equal Z24", sorted(an.W - z24))
        if len(z24) == 1:
            return _bounded(g, 7, "P6/Z24", "|W|<=1")
        w, *others = sorted(z24)
        base = {min(g.adj[w] & an.R[2])}
        base.update(min(g.adj[x] & an.R[4]) for x in others)
        sub = "|W|>=2"
    else:
        base = _cover_components(g, an, zp, "P6/Z3")
        sub = "Y3" if zp.Y else "Z3=W"
    dom, how = complete_base(g, base, singles=[end1 & end6], pairs=[(end1, end6)],
                             fallback=an.vs(2, 4, 6))
    return _result(g, dom, "P6/Z24" if z24 else "P6/Z3", sub, how)
