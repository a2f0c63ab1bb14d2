"""Seeded instance generators: random members of the class and per-case families.

Every family returns a graph whose membership (claw-free, P8-free and the
extra forbidden holes/paths of its case) has been checked with the
detectors, together with an :class:`InstanceManifest`.

The case families start from a small template (the spine plus the
``W``-structure the case is about) and then grow it at random. Growth steps
are kept only if the graph stays inside the case's class and the dispatcher
still routes it to the target case. For the families marked ``irreducible``
the growth is steered towards a graph without leaves or true twins, so that
kernelization leaves it untouched and the case is reached through the full
pipeline.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from clawdom.detect import find_claw, find_induced_cycle, find_induced_path
from clawdom.errors import StructureViolation
from clawdom.graph import Graph, build_graph, is_connected, line_graph

CYCLE_CHECK = "C"
PATH_CHECK = "P"

# (kind, k) pairs forbidden on top of the claw
P8_FREE = ((PATH_CHECK, 8),)
CASE_FORBIDDEN = {
    "C4": ((CYCLE_CHECK, 5), (CYCLE_CHECK, 6), (PATH_CHECK, 6)),
    "C6": ((CYCLE_CHECK, 7), (CYCLE_CHECK, 8), (PATH_CHECK, 8)),
    "C5": ((CYCLE_CHECK, 6), (CYCLE_CHECK, 7), (CYCLE_CHECK, 8), (PATH_CHECK, 8)),
    "P7": tuple((CYCLE_CHECK, k) for k in (5, 6, 7, 8)) + ((PATH_CHECK, 8),),
    "P6": ((CYCLE_CHECK, 5), (CYCLE_CHECK, 6), (CYCLE_CHECK, 7), (PATH_CHECK, 7)),
}


class GenerationError(RuntimeError):
    """No valid instance was produced within the attempt budget."""


@dataclass(frozen=True)
class InstanceManifest:
    family: str
    n: int
    q: Optional[int]
    seed: int
    expected_branch: Optional[str]
    membership: dict = field(default_factory=dict)
    irreducible: bool = False

    def as_dict(self) -> dict:
        return asdict(self)

    def verify(self, g: Graph) -> bool:
        """Re-check the recorded membership flags against ``g``."""
        from clawdom.driver import verify_membership

        rep = verify_membership(g)
        return g.n == self.n and {"claw_free": rep.claw_free, "p8_free": rep.path_free} == {
            k: self.membership[k] for k in ("claw_free", "p8_free")
        }


def avoids(g: Graph, forbidden) -> bool:
    """Claw-free and free of every listed induced cycle/path."""
    if find_claw(g) is not None:
        return False
    for kind, k in forbidden:
        if g.n < k:
            continue
        find = find_induced_cycle if kind == CYCLE_CHECK else find_induced_path
        if find(g, k) is not None:
            return False
    return True


def irreducibility_defect(g: Graph) -> int:
    """Number of leaves plus surplus members of true-twin classes."""
    classes: dict[int, int] = {}
    for m in g.closed_masks:
        classes[m] = classes.get(m, 0) + 1
    return sum(c - 1 for c in classes.values()) + sum(1 for v in range(g.n) if len(g.adj[v]) <= 1)


def relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return build_graph(g.n, sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))


# -- templates ------------------------------------------------------------------

def _clique(vs) -> set[tuple[int, int]]:
    return {(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]}


def _spine(k: int, cyclic: bool) -> set[tuple[int, int]]:
    edges = {(i, i + 1) for i in range(k - 1)}
    if cyclic:
        edges.add((0, k - 1))
    return edges


def paired_template(k: int, cyclic: bool, i: int, j: int, q: int, linked: bool) -> Graph:
    """Spine plus ``q`` vertices at distance two, each seeing one ``H_i`` and one ``H_j`` vertex.

    Edge ``i`` of the spine is ``v_i v_{i+1}`` (1-based). The ``H_i`` and
    ``H_j`` vertices form two cliques; ``linked`` joins each pair.
    """
    edges = _spine(k, cyclic)
    n = k
    left, right = [], []
    for _ in range(q):
        a, b, w = n, n + 1, n + 2
        n += 3
        edges |= {(i - 1, a), (i % k, a), (j - 1, b), (j % k, b), (a, w), (b, w)}
        if linked:
            edges.add((a, b))
        left.append(a)
        right.append(b)
    edges |= _clique(left) | _clique(right)
    return build_graph(n, sorted(edges))


def c4_template(q: int) -> Graph:
    """C4 with a clique on edge ``v_1 v_2``, each clique vertex carrying one pendant."""
    edges = _spine(4, True)
    n = 4
    hub = []
    for _ in range(q):
        a, w = n, n + 1
        n += 2
        edges |= {(0, a), (1, a), (a, w)}
        hub.append(a)
    edges |= _clique(hub)
    return build_graph(n, sorted(edges))


def chain_template(k: int, cyclic: bool, i: int, depth: int) -> Graph:
    """Spine plus one ``H_i`` vertex and a path of ``depth`` vertices hanging off it."""
    edges = _spine(k, cyclic)
    r = k
    edges |= {(i - 1, r), (i % k, r)}
    prev, n = r, k + 1
    for _ in range(depth):
        edges.add((prev, n))
        prev, n = n, n + 1
    return build_graph(n, sorted(edges))


# -- random growth --------------------------------------------------------------

def _case_label(g: Graph) -> Optional[str]:
    from clawdom.driver import branch_bucket, solve_kernel

    try:
        return branch_bucket(solve_kernel(g).label)
    except StructureViolation:
        return None


def _w_size(g: Graph, case: str) -> int:
    """``|V - N[spine]|`` for the spine the dispatcher would pick."""
    kind, k = case[0], int(case[1])
    spine = (find_induced_cycle if kind == "C" else find_induced_path)(g, k)
    if spine is None:
        return -1
    return g.n - len(g.closed_neighborhood(spine.vertices))


def _grow_step(g: Graph, rng: random.Random) -> Graph:
    """Add one vertex adjacent to a random clique-like patch around a random vertex."""
    centre = rng.randrange(g.n)
    patch = {centre} | {u for u in sorted(g.adj[centre]) if rng.random() < 0.5}
    return build_graph(g.n + 1, sorted(set(g.edges()) | {(u, g.n) for u in patch}))


def _toggle_step(g: Graph, rng: random.Random, frozen: int) -> Optional[Graph]:
    a, b = sorted(rng.sample(range(g.n), 2))
    if b < frozen:
        return None
    edges = set(g.edges())
    edges ^= {(a, b)}
    return build_graph(g.n, sorted(edges))


def _drop_step(g: Graph, rng: random.Random, frozen: int) -> Optional[Graph]:
    if g.n <= frozen:
        return None
    x = rng.randrange(frozen, g.n)
    edges = [(u - (u > x), v - (v > x)) for u, v in g.edges() if x not in (u, v)]
    return build_graph(g.n - 1, edges)


def _decorate(g: Graph, rng: random.Random, case: str, target: str, extra: int,
              keep_w: bool) -> Graph:
    """Grow ``g`` by up to ``extra`` vertices, staying in the case and its branch."""
    forbidden = CASE_FORBIDDEN[case]
    w0 = _w_size(g, case) if keep_w else None
    goal = g.n + extra
    for _ in range(12 * extra):
        if g.n >= goal:
            break
        h = _grow_step(g, rng)
        if not avoids(h, forbidden) or _case_label(h) != target:
            continue
        if keep_w and _w_size(h, case) != w0:
            continue
        g = h
    return g


def _polish(g: Graph, rng: random.Random, case: str, target: str, nmax: int,
            steps: int, keep_w: bool) -> Optional[Graph]:
    """Local search towards an irreducible graph that stays in the target branch.

    Moves add a vertex, delete a non-template vertex or flip a pair outside
    the template; a move is kept when the graph stays in the case's class,
    the dispatcher still routes it to ``target`` and the irreducibility
    defect does not grow (with a small chance of accepting a worse one).
    """
    forbidden = CASE_FORBIDDEN[case]
    frozen = g.n
    w0 = _w_size(g, case) if keep_w else None
    defect = irreducibility_defect(g)
    for _ in range(steps):
        if defect == 0:
            return g
        r = rng.random()
        if r < 0.2 and g.n < nmax:
            h = _grow_step(g, rng)
        elif r < 0.25:
            h = _drop_step(g, rng, frozen)
        else:
            h = _toggle_step(g, rng, frozen)
        if h is None or not is_connected(h) or not avoids(h, forbidden):
            continue
        d = irreducibility_defect(h)
        if d > defect and rng.random() > 0.03:
            continue
        if _case_label(h) != target or (keep_w and _w_size(h, case) != w0):
            continue
        g, defect = h, d
    return g if defect == 0 else None


@dataclass(frozen=True)
class _CaseFamily:
    case: str
    target: str
    template: Callable[[random.Random, int], Graph]
    uses_q: bool
    irreducible: bool
    default_q: int = 2


def _chain(k, cyclic, i, depths):
    return lambda rng, q: chain_template(k, cyclic, i, rng.choice(depths))


CASE_FAMILIES = {
    "c4p6": _CaseFamily("C4", "C4", lambda rng, q: c4_template(q), True, False, 3),
    "c6p8": _CaseFamily("C6", "C6", lambda rng, q: paired_template(6, True, 1, 4, q, False),
                        True, True),
    "c5p8_z13": _CaseFamily("C5", "C5/Z13", lambda rng, q: paired_template(5, True, 1, 3, q, True),
                            True, True),
    "c5p8_za": _CaseFamily("C5", "C5/Z-single", _chain(5, True, 1, (1, 2)), False, True),
    "p7p8_z24": _CaseFamily("P7", "P7/Z24", lambda rng, q: paired_template(7, False, 2, 4, q, True),
                            True, False),
    "p7p8_y3": _CaseFamily("P7", "P7/Y", _chain(7, False, 3, (1, 2)), False, True),
    "p6p7_z24": _CaseFamily("P6", "P6/Z24", lambda rng, q: paired_template(6, False, 2, 4, q, True),
                            True, False),
    "p6p7_z3": _CaseFamily("P6", "P6/Z3", _chain(6, False, 3, (1, 2)), False, True),
}

RANDOM_FAMILIES = ("line_graph", "unit_interval")
FAMILIES = RANDOM_FAMILIES + tuple(CASE_FAMILIES)


def random_line_graph(n: int, rng: random.Random) -> Graph:
    """Line graph with ``n`` vertices of a random graph whose components have at most 8 vertices.

    A path on nine vertices in the root graph is exactly what an induced P8
    of the line graph needs, so small components keep the result P8-free.
    Half of the components start from a cycle through all their vertices,
    which is where long holes of the line graph come from.
    """
    edges: list[tuple[int, int]] = []
    base = 0
    while len(edges) < n:
        size = rng.randint(3, 8)
        p = rng.uniform(0.1, 0.6)
        ring: list[tuple[int, int]] = []
        if rng.random() < 0.5:
            order = list(range(size))
            rng.shuffle(order)
            ring = [tuple(sorted((order[i], order[(i + 1) % size]))) for i in range(size)]
        chords = [(a, b) for a in range(size) for b in range(a + 1, size)
                  if (a, b) not in ring and rng.random() < p]
        rng.shuffle(chords)
        block = [(base + a, base + b) for a, b in ring + chords]
        edges.extend(block[: n - len(edges)])
        base += size
    rng.shuffle(edges)
    return line_graph(base, edges)


def random_unit_interval(n: int, rng: random.Random) -> Graph:
    span = rng.uniform(0.5, 3.0)
    pts = [rng.uniform(0.0, span) for _ in range(n)]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if abs(pts[i] - pts[j]) <= 1.0]
    return build_graph(n, edges)


def _membership(g: Graph) -> dict:
    from clawdom.driver import verify_membership

    rep = verify_membership(g)
    return {"claw_free": rep.claw_free, "p8_free": rep.path_free}


def gen_family(
    family: str,
    n: Optional[int] = None,
    q: Optional[int] = None,
    seed: int = 0,
    max_attempts: int = 40,
    n_max: Optional[int] = None,
) -> tuple[Graph, InstanceManifest]:
    """Generate one verified member instance of ``family``.

    For the random families ``n`` is the vertex count. For the case
    families ``n`` is a target size for the random growth (the template
    alone may already be larger) and ``q`` the number of distance-two
    vertices where the family has one. ``n_max`` is a hard bound on the
    vertex count; attempts that exceed it are retried.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if q is not None and q < 0:
        raise ValueError("q must be non-negative")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        g, branch, irreducible = _attempt(family, n, q, rng, n_max)
        if g is None or (n_max is not None and g.n > n_max):
            continue
        member = _membership(g)
        if not all(member.values()):
            continue
        g = relabel(g, rng)
        if branch is not None and _case_label(g) != branch:
            # the spine the detectors pick depends on the labelling
            continue
        manifest = InstanceManifest(family, g.n, q if _uses_q(family) else None, seed, branch,
                                    member, irreducible and irreducibility_defect(g) == 0)
        return g, manifest
    raise GenerationError(f"{family}: no valid instance after {max_attempts} attempts")


def _uses_q(family: str) -> bool:
    spec = CASE_FAMILIES.get(family)
    return bool(spec and spec.uses_q)


def _attempt(family: str, n: Optional[int], q: Optional[int], rng: random.Random,
             n_max: Optional[int] = None):
    if family == "line_graph":
        return random_line_graph(n or rng.randint(6, 18), rng), None, False
    if family == "unit_interval":
        g = random_unit_interval(n or rng.randint(4, 16), rng)
        return (g if avoids(g, P8_FREE) else None), None, False
    spec = CASE_FAMILIES[family]
    qq = spec.default_q if q is None else q
    g = spec.template(rng, qq)
    if not avoids(g, CASE_FORBIDDEN[spec.case]):
        raise GenerationError(f"{family}: template left the class (q={qq})")
    extra = max(0, n - g.n) if n is not None else rng.randint(0, 3)
    if extra:
        g = _decorate(g, rng, spec.case, spec.target, extra, keep_w=spec.uses_q)
    if spec.irreducible:
        nmax = max(n or 0, g.n + 8)
        if n_max is not None:
            nmax = min(nmax, n_max)
        g = _polish(g, rng, spec.case, spec.target, nmax, steps=6000, keep_w=spec.uses_q)
        if g is None:
            return None, None, False
    label = _case_label(g)
    if label != spec.target:
        return None, None, False
    return g, label, spec.irreducible
