"""Dispatch: kernelize, find the spine that decides the case, construct, lift, certify."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from clawdom import construct
from clawdom.chordal import solve_chordal_clawfree
from clawdom.construct import BranchResult
from clawdom.detect import (
    InducedWitness,
    find_claw,
    find_induced_cycle,
    find_induced_path,
    lexbfs_elimination,
)
from clawdom.errors import ClassViolation, StructureViolation
from clawdom.exact import mds_bounded, mds_exact
from clawdom.graph import Graph, connected_components, induced_subgraph, is_dominating
from clawdom.reduce import lift_solution, reduce_to_kernel

log = logging.getLogger(__name__)

MODE_P8 = "p8"
MODE_P7 = "p7"

# The ten case labels a (claw, P8)-free kernel can end in.
BRANCHES = (
    "C8", "C7", "C6", "C5/Z13", "C5/Z-single", "P7/Z24", "P7/Y", "P6/Z24", "P6/Z3", "C4", "chordal",
)


@dataclass(frozen=True)
class ClassReport:
    claw_free: bool
    claw: Optional[InducedWitness]
    path_free: bool
    path: Optional[InducedWitness]
    path_k: int = 8

    @property
    def member(self) -> bool:
        return self.claw_free and self.path_free

    def as_dict(self) -> dict:
        return {
            "claw_free": self.claw_free,
            "claw_witness": list(self.claw.vertices) if self.claw else None,
            f"p{self.path_k}_free": self.path_free,
            f"p{self.path_k}_witness": list(self.path.vertices) if self.path else None,
        }


def verify_membership(g: Graph, path_k: int = 8) -> ClassReport:
    claw = find_claw(g)
    path = find_induced_path(g, path_k) if g.n >= path_k else None
    return ClassReport(claw is None, claw, path is None, path, path_k)


@dataclass(frozen=True)
class TraceEntry:
    component: int
    n: int
    branch: str
    completion: str

    def as_dict(self) -> dict:
        return {"component": self.component, "n": self.n, "branch": self.branch,
                "completion": self.completion}


@dataclass
class Solution:
    set: frozenset[int]
    n: int
    trace: list[TraceEntry] = field(default_factory=list)
    reductions: dict = field(default_factory=dict)
    class_report: Optional[ClassReport] = None
    fallback: bool = False

    @property
    def gamma(self) -> int:
        return len(self.set)

    @property
    def branches(self) -> list[str]:
        return [t.branch for t in self.trace]


def branch_bucket(label: str) -> str:
    """Coverage bucket of a full branch label, e.g. ``C5/Z13/q>=2`` -> ``C5/Z13``."""
    parts = label.split("/")
    if parts[0] in ("C5", "P7", "P6") and len(parts) > 1:
        return "/".join(parts[:2])
    return parts[0]


def solve_kernel(g: Graph, mode: str = MODE_P8, small_cutoff: int = 0) -> BranchResult:
    """Solve one kernelized connected member graph by the case analysis."""
    if g.n <= small_cutoff:
        return BranchResult(mds_exact(g), "exact", "", construct.SEARCH)
    if mode == MODE_P8:
        for k in (8, 7):
            c = find_induced_cycle(g, k)
            if c is not None:
                return construct.solve_cycle_dominates_all(g, c)
        c = find_induced_cycle(g, 6)
        if c is not None:
            return construct.solve_c6_p8(g, c)
        c = find_induced_cycle(g, 5)
        if c is not None:
            return construct.solve_c5_p8(g, c)
        p = find_induced_path(g, 7)
        if p is not None:
            return construct.solve_p7_p8(g, p)
    elif mode == MODE_P7:
        for k in (7, 6):
            c = find_induced_cycle(g, k)
            if c is not None:
                return construct.solve_cycle_dominates_all(g, c)
        c = find_induced_cycle(g, 5)
        if c is not None:
            return _c5_small_w(g, c)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    p = find_induced_path(g, 6)
    if p is not None:
        return construct.solve_p6_p7(g, p)
    c = find_induced_cycle(g, 4)
    if c is not None:
        return construct.solve_c4_p6(g, c)
    order = lexbfs_elimination(g)
    if order is None:
        raise StructureViolation("no hole of length 4..8 found but the graph is not chordal")
    return BranchResult(solve_chordal_clawfree(g, order), "chordal", "", construct.NONE)


def _c5_small_w(g: Graph, c: InducedWitness) -> BranchResult:
    # in a (claw, P7)-free kernel a C5 leaves at most one vertex undominated
    found = mds_bounded(g, 6)
    if found is None:
        raise StructureViolation("C5 in P7 mode: no dominating set of size 6")
    return BranchResult(found, "C5", "|W|<=1", construct.SEARCH)


def solve(
    g: Graph,
    fallback_exact: bool = False,
    small_cutoff: int = 12,
    mode: str = MODE_P8,
    check_kernels: bool = False,
    kernelize: bool = True,
) -> Solution:
    """Certified minimum dominating set of a (claw, P8)-free graph.

    With ``fallback_exact`` a non-member is solved by exhaustive search and
    flagged in the result instead of raising :class:`ClassViolation`.
    ``mode="p7"`` dispatches for (claw, P7)-free inputs. ``kernelize=False``
    dispatches every connected component as it is, skipping the reductions;
    this is how the case constructions are exercised on instances that are
    not their own kernel.
    """
    path_k = 8 if mode == MODE_P8 else 7
    report = verify_membership(g, path_k)
    if not report.member:
        witness = report.claw or report.path
        if not fallback_exact:
            raise ClassViolation(f"input contains an induced {witness.label()}", witness)
        log.warning("input outside the class (%s); using exact search", witness.label())
        dom = mds_exact(g)
        assert is_dominating(g, dom)
        return Solution(dom, g.n, [TraceEntry(0, g.n, "exact-fallback", construct.SEARCH)],
                        _no_reductions([g.n]), report, fallback=True)
    if not kernelize:
        return _solve_components(g, mode, small_cutoff, report)
    kernels, stack = reduce_to_kernel(g, check_claw=False)
    trace = []
    sets = []
    for idx, kern in enumerate(kernels):
        h = kern.graph
        if check_kernels:
            rep = verify_membership(h, path_k)
            assert rep.member, f"kernel {idx} left the class"
        res = solve_kernel(h, mode, small_cutoff)
        trace.append(TraceEntry(idx, h.n, res.label, res.completion_used))
        sets.append(res.set)
    dom = lift_solution(stack, sets)
    if not is_dominating(g, dom):
        raise AssertionError("certification failed: result does not dominate")
    return Solution(dom, g.n, trace, stack.summary(), report)


def _solve_components(g: Graph, mode: str, small_cutoff: int, report: ClassReport) -> Solution:
    trace = []
    chosen: set[int] = set()
    for idx, comp in enumerate(connected_components(g)):
        h, ids = induced_subgraph(g, comp)
        res = solve_kernel(h, mode, small_cutoff)
        trace.append(TraceEntry(idx, h.n, res.label, res.completion_used))
        chosen.update(ids[v] for v in res.set)
    dom = frozenset(chosen)
    if not is_dominating(g, dom):
        raise AssertionError("certification failed: result does not dominate")
    return Solution(dom, g.n, trace, _no_reductions([t.n for t in trace]), report)


def _no_reductions(sizes: list[int]) -> dict:
    return {"twin_deletions": 0, "leaf_commits": 0, "kernels": sizes}
