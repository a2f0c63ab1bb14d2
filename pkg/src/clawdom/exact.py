"""Exact minimum dominating sets by depth-bounded branching.

Used both where a lemma bounds the domination number by a constant and as
the verification oracle. The search itself lives in the kernel backends.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from clawdom import _kernels
from clawdom.graph import Graph


def mds_bounded(g: Graph, cap: int) -> Optional[frozenset[int]]:
    """A minimum dominating set if one of size ``<= cap`` exists, else ``None``."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    found = _kernels.dominating_search(g.closed_masks, g.n, cap)
    return None if found is None else frozenset(found)


def mds_exact(g: Graph) -> frozenset[int]:
    if g.n == 0:
        return frozenset()
    found = mds_bounded(g, g.n)
    assert found is not None
    return found


def gamma(g: Graph) -> int:
    return len(mds_exact(g))


def brute_force_gamma(g: Graph) -> int:
    """Domination number by enumerating every subset in ascending size."""
    full = g.full_mask
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            if g.dominated_mask(subset) == full:
                return size
    raise AssertionError("unreachable: V dominates itself")
