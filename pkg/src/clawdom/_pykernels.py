"""Pure-Python hot kernels over closed-neighbourhood bitmasks.

The compiled twin in ``_ckernels.pyx`` implements the same search in the
same order, so both backends return identical answers.
"""

from __future__ import annotations

from typing import Optional, Sequence


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def greedy_dominating(closed: Sequence[int], n: int) -> list[int]:
    """Repeatedly add the vertex covering the most undominated vertices."""
    full = (1 << n) - 1
    dom = 0
    chosen = []
    while dom != full:
        best, gain = -1, -1
        undom = full & ~dom
        for v in range(n):
            c = (closed[v] & undom).bit_count()
            if c > gain:
                best, gain = v, c
        chosen.append(best)
        dom |= closed[best]
    return chosen


def dominating_search(closed: Sequence[int], n: int, cap: int) -> Optional[list[int]]:
    """Smallest dominating set of size at most ``cap`` (sorted), or ``None``.

    Iterative deepening on the solution size. Each node branches over the
    closed neighbourhood of the undominated vertex with the fewest
    dominators; a branch is cut when the undominated count exceeds the
    budget times the best single-vertex coverage still available.
    """
    if n == 0:
        return []
    full = (1 << n) - 1
    size = [closed[v].bit_count() for v in range(n)]
    greedy = greedy_dominating(closed, n)
    upper = len(greedy)
    lower = -(-n // max(size))
    chosen: list[int] = []

    def dfs(dom: int, budget: int) -> bool:
        if dom == full:
            return True
        if budget == 0:
            return False
        undom = full & ~dom
        best_cov = 0
        for v in range(n):
            c = (closed[v] & undom).bit_count()
            if c > best_cov:
                best_cov = c
        if undom.bit_count() > budget * best_cov:
            return False
        pick, pick_size = -1, n + 1
        for u in _bits(undom):
            if size[u] < pick_size:
                pick, pick_size = u, size[u]
        for x in _bits(closed[pick]):
            chosen.append(x)
            if dfs(dom | closed[x], budget - 1):
                return True
            chosen.pop()
        return False

    for t in range(lower, min(cap, upper - 1) + 1):
        if dfs(0, t):
            return sorted(chosen)
    if upper <= cap:
        return sorted(greedy)
    return None


def induced_path(closed: Sequence[int], n: int, k: int) -> Optional[list[int]]:
    """First induced path on ``k`` vertices in DFS order from ascending starts."""
    if k <= 0 or k > n:
        return None
    open_ = [closed[v] & ~(1 << v) for v in range(n)]
    path: list[int] = []

    def extend(last: int, inner: int) -> bool:
        if len(path) == k:
            return True
        for x in _bits(open_[last] & ~inner):
            path.append(x)
            if extend(x, inner | closed[last]):
                return True
            path.pop()
        return False

    for start in range(n):
        path.append(start)
        if extend(start, 1 << start):
            return list(path)
        path.pop()
    return None


def induced_cycle(closed: Sequence[int], n: int, k: int) -> Optional[list[int]]:
    """First induced cycle on ``k >= 4`` vertices.

    The returned sequence starts at the cycle's smallest vertex and its
    second entry is smaller than its last, so every hole has one canonical
    form and is visited once.
    """
    if k < 4 or k > n:
        return None
    open_ = [closed[v] & ~(1 << v) for v in range(n)]
    path: list[int] = []

    def extend(first: int, last: int, inner: int, above: int) -> bool:
        # inner: union of closed neighbourhoods of path[1:-1]
        j = len(path)
        if j == k - 1:
            for x in _bits(open_[last] & open_[first] & ~inner & above):
                if x > path[1]:
                    path.append(x)
                    return True
            return False
        cand = open_[last] & ~inner & above & ~closed[first]
        nxt_inner = inner | (closed[last] if j >= 2 else 0)
        for x in _bits(cand):
            path.append(x)
            if extend(first, x, nxt_inner, above):
                return True
            path.pop()
        return False

    full = (1 << n) - 1
    for start in range(n):
        above = full & ~((1 << (start + 1)) - 1)
        path.append(start)
        for second in _bits(open_[start] & above):
            path.append(second)
            if extend(start, second, 0, above):
                return list(path)
            path.pop()
        path.pop()
    return None
