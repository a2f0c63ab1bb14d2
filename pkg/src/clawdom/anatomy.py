"""The partition of a graph around a fixed induced cycle or path (the spine).

Spine positions are 1-based: ``v(1) .. v(m)``. ``H[i]`` holds the vertices
attached to exactly the spine edge ``v(i) v(i+1)`` (wrapping for cycles) and
``R[i]`` those members of ``H[i]`` with a neighbour in ``W``, the vertices at
distance at least two from the spine.

Structural facts that the constructions depend on are checked here and
reported as :class:`StructureViolation` instead of being assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from clawdom.detect import CYCLE, PATH, InducedWitness
from clawdom.errors import StructureViolation
from clawdom.graph import Graph, connected_components, induced_subgraph, is_clique

CLAWP8 = "clawp8"
P8C = "P8C"
P6P7 = "p6p7"


@dataclass
class Anatomy:
    g: Graph
    spine: tuple[int, ...]
    cyclic: bool
    attach: dict[int, frozenset[int]]
    S: frozenset[int]
    S_count: dict[int, frozenset[int]]
    H: dict[int, frozenset[int]]
    R: dict[int, frozenset[int]]
    W: frozenset[int]

    @property
    def m(self) -> int:
        return len(self.spine)

    def v(self, i: int) -> int:
        if self.cyclic:
            return self.spine[(i - 1) % self.m]
        return self.spine[i - 1]

    def vs(self, *idx: int) -> frozenset[int]:
        return frozenset(self.v(i) for i in idx)

    @property
    def spine_set(self) -> frozenset[int]:
        return frozenset(self.spine)

    @property
    def R_all(self) -> frozenset[int]:
        return frozenset().union(*self.R.values())

    def h_index(self, x: int) -> Optional[int]:
        for i, members in self.H.items():
            if x in members:
                return i
        return None

    def n_in(self, x: int, part: Iterable[int]) -> frozenset[int]:
        return self.g.adj[x] & frozenset(part)


def _edge_indices(m: int, cyclic: bool) -> range:
    return range(1, m + 1) if cyclic else range(1, m)


def _build(g: Graph, spine: tuple[int, ...], cyclic: bool) -> Anatomy:
    pos = {v: i + 1 for i, v in enumerate(spine)}
    m = len(spine)
    attach: dict[int, frozenset[int]] = {}
    W = []
    for x in range(g.n):
        if x in pos:
            continue
        hits = frozenset(pos[u] for u in g.adj[x] if u in pos)
        if not hits:
            W.append(x)
        elif len(hits) == 1:
            (i,) = hits
            raise StructureViolation(
                f"vertex {x} sees only spine vertex {spine[i - 1]}", (x, spine[i - 1])
            )
        else:
            attach[x] = hits
    S = frozenset(attach)
    counts: dict[int, set[int]] = {}
    for x, hits in attach.items():
        counts.setdefault(len(hits), set()).add(x)
    H: dict[int, set[int]] = {i: set() for i in _edge_indices(m, cyclic)}
    for x, hits in attach.items():
        if len(hits) != 2:
            continue
        a, b = sorted(hits)
        if b == a + 1:
            H[a].add(x)
        elif cyclic and a == 1 and b == m:
            H[m].add(x)
    Wset = frozenset(W)
    R = {i: frozenset(x for x in members if g.adj[x] & Wset) for i, members in H.items()}
    an = Anatomy(
        g=g,
        spine=spine,
        cyclic=cyclic,
        attach=attach,
        S=S,
        S_count={c: frozenset(v) for c, v in counts.items()},
        H={i: frozenset(v) for i, v in H.items()},
        R=R,
        W=Wset,
    )
    _check_common(an)
    return an


def _check_common(an: Anatomy) -> None:
    g = an.g
    for i, members in an.H.items():
        if not is_clique(g, members):
            raise StructureViolation(f"H{i} is not a clique", sorted(members))
    in_h = frozenset().union(*an.H.values()) if an.H else frozenset()
    for w in an.W:
        for x in g.adj[w]:
            if x in an.S and x not in in_h:
                raise StructureViolation(
                    f"vertex {x} next to W-vertex {w} does not attach to a single spine edge",
                    (x, w),
                )


def _labeling(vertices: tuple[int, ...], rotation: int, reflect: bool) -> tuple[int, ...]:
    m = len(vertices)
    if reflect:
        return tuple(vertices[(rotation - i) % m] for i in range(m))
    return tuple(vertices[(rotation + i) % m] for i in range(m))


def cycle_labelings(m: int) -> list[tuple[int, bool]]:
    return [(rot, refl) for refl in (False, True) for rot in range(m)]


def cycle_anatomy(
    g: Graph,
    c: InducedWitness,
    rotation: int = 0,
    reflect: bool = False,
    w_independent: bool = False,
) -> Anatomy:
    """Anatomy around a hole, labelled from ``c.vertices`` by rotation/reflection.

    ``w_independent`` asserts that ``W`` is stable, which holds when the graph
    avoids the two holes just longer than the spine and the long path.
    """
    if c.kind != CYCLE or not c.verify(g):
        raise StructureViolation("spine is not an induced cycle of the graph", c.vertices)
    an = _build(g, _labeling(c.vertices, rotation, reflect), cyclic=True)
    if w_independent:
        for w in an.W:
            other = g.adj[w] & an.W
            if other:
                raise StructureViolation("W is not independent", (w, min(other)))
    return an


def path_anatomy(g: Graph, p: InducedWitness, reverse: bool = False) -> Anatomy:
    """Anatomy around an induced path; the end edges must not reach ``W``."""
    if p.kind != PATH or not p.verify(g):
        raise StructureViolation("spine is not an induced path of the graph", p.vertices)
    spine = tuple(reversed(p.vertices)) if reverse else tuple(p.vertices)
    an = _build(g, spine, cyclic=False)
    last = an.m - 1
    for i in (1, last):
        if an.R[i]:
            raise StructureViolation(f"R{i} must be empty on a path spine", sorted(an.R[i]))
    return an


@dataclass
class ZPartition:
    scheme: str
    Z: frozenset[int]
    Z_single: dict[int, frozenset[int]]
    Z_pair: dict[tuple[int, int], frozenset[int]]
    Y: frozenset[int]
    Y_parts: dict[int, frozenset[int]] = field(default_factory=dict)
    components: list[frozenset[int]] = field(default_factory=list)
    universal: dict[frozenset[int], tuple[int, ...]] = field(default_factory=dict)
    component_index: dict[frozenset[int], int] = field(default_factory=dict)

    def component_of(self, x: int) -> Optional[frozenset[int]]:
        for comp in self.components:
            if x in comp:
                return comp
        return None


def _components_with_universal(g: Graph, part: frozenset[int]):
    sub, ids = induced_subgraph(g, part)
    comps = []
    universal = {}
    for comp in connected_components(sub):
        members = frozenset(ids[i] for i in comp)
        unis = tuple(sorted(u for u in members if members - {u} <= g.adj[u]))
        if not unis:
            raise StructureViolation("component without a universal vertex", sorted(members))
        comps.append(members)
        universal[members] = unis
    return comps, universal


def _anticomplete(g: Graph, a: Iterable[int], b, what: str) -> None:
    b = frozenset(b)
    for x in a:
        hit = g.adj[x] & b
        if hit:
            raise StructureViolation(f"{what} not anticomplete", (x, min(hit)))


def _check_disjoint(parts: dict, what: str) -> None:
    seen: dict[int, object] = {}
    for key, members in parts.items():
        for x in members:
            if x in seen:
                raise StructureViolation(f"{what}: {x} in both {seen[x]} and {key}", (x,))
            seen[x] = key


def z_partition(an: Anatomy, scheme: str) -> ZPartition:
    """Refine ``W`` the way the named case analysis does."""
    if scheme == CLAWP8:
        return _z_clawp8(an)
    if scheme == P8C:
        return _z_path(an, pairs=((2, 4), (3, 5)), singles=(2, 3, 4, 5), comp_idx=(3, 4))
    if scheme == P6P7:
        return _z_path(an, pairs=((2, 4),), singles=(2, 3, 4), comp_idx=(3,))
    raise ValueError(f"unknown scheme {scheme!r}")


def _z_clawp8(an: Anatomy) -> ZPartition:
    g = an.g
    R = an.R
    nr = {w: {i for i, members in R.items() if g.adj[w] & members} for w in an.W}
    Z = frozenset(w for w in an.W if nr[w])
    singles = {i: frozenset(w for w in Z if nr[w] == {i}) for i in R}
    pairs = {}
    for i in R:
        for j in R:
            if i < j:
                pairs[(i, j)] = frozenset(w for w in Z if {i, j} <= nr[w])
    _check_disjoint({**{(i,): s for i, s in singles.items()}, **pairs}, "Z-sets overlap")
    Y = an.W - Z
    z13 = pairs.get((1, 3), frozenset())
    r13 = R[1] | R[3]
    for z in z13:
        for z2 in g.adj[z] & z13:
            if g.adj[z] & r13 != g.adj[z2] & r13:
                raise StructureViolation("adjacent Z13 vertices see different R1/R3 vertices", (z, z2))
    ZA = frozenset(w for w in Z if not g.adj[w] & Y)
    comps, universal = _components_with_universal(g, ZA)
    return ZPartition(CLAWP8, Z, singles, {k: v for k, v in pairs.items() if v}, Y,
                      components=comps, universal=universal,
                      component_index={c: 1 for c in comps})


def _z_path(an: Anatomy, pairs, singles, comp_idx) -> ZPartition:
    g = an.g
    R = an.R
    W = an.W
    zpair = {
        (i, j): frozenset(w for w in W if g.adj[w] & R[i] and g.adj[w] & R[j]) for i, j in pairs
    }
    in_pairs = frozenset().union(*zpair.values())
    taken = {i: frozenset(x for x in R[i] if g.adj[x] & in_pairs) for i in singles}
    zsingle = {i: frozenset(w for w in W if g.adj[w] & (R[i] - taken[i])) for i in singles}
    keyed = {**{(i,): s for i, s in zsingle.items()}, **zpair}
    _check_disjoint(keyed, "Z-sets overlap")
    for i in singles:
        for j in singles:
            if i < j:
                _anticomplete(g, zsingle[i], zsingle[j], f"Z{i}/Z{j}")
    Z = frozenset().union(*keyed.values())
    Y = W - Z
    y_parts = {i: frozenset(y for y in Y if g.adj[y] & zsingle[i]) for i in comp_idx}
    _check_disjoint({(i,): s for i, s in y_parts.items()}, "Y-parts overlap")
    covered = frozenset().union(*y_parts.values())
    if covered != Y:
        raise StructureViolation("Y vertex without a neighbour in the component sets", sorted(Y - covered))
    if len(comp_idx) == 2:
        a, b = comp_idx
        _anticomplete(g, y_parts[a], y_parts[b], f"Y{a}/Y{b}")
    comps, universal, index = [], {}, {}
    for i in comp_idx:
        cs, un = _components_with_universal(g, zsingle[i])
        comps.extend(cs)
        universal.update(un)
        index.update({c: i for c in cs})
    comps.sort(key=min)
    return ZPartition(
        P8C if len(singles) == 4 else P6P7, Z, zsingle, zpair, Y, y_parts, comps, universal, index
    )
