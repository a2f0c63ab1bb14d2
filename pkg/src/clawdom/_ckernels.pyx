# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``clawdom._pykernels`` on multi-word bitsets."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    WORD = 64


cdef uint64_t* _pack(object masks, int n, int w) except NULL:
    cdef uint64_t* arr = <uint64_t*> calloc(max(n, 1) * max(w, 1), sizeof(uint64_t))
    cdef int v, i
    if arr == NULL:
        raise MemoryError()
    low = 0xFFFFFFFFFFFFFFFF
    for v in range(n):
        m = masks[v]
        for i in range(w):
            arr[v * w + i] = <uint64_t> ((m >> (64 * i)) & low)
    return arr


cdef struct DomCtx:
    int n
    int w
    uint64_t* closed
    uint64_t* full
    uint64_t* stack
    int* size
    int* chosen
    int found_level


cdef inline int _popcount_andnot(uint64_t* a, uint64_t* full, uint64_t* dom, int w) nogil:
    cdef int i, c = 0
    for i in range(w):
        c += __builtin_popcountll(a[i] & full[i] & ~dom[i])
    return c


cdef bint _dom_dfs(DomCtx* c, int level, int budget) nogil:
    cdef int w = c.w
    cdef int n = c.n
    cdef uint64_t* dom = c.stack + level * w
    cdef uint64_t* nd
    cdef int i, v, cnt, best, cov, pick, pick_size, x, b
    cdef uint64_t bits
    cnt = 0
    for i in range(w):
        cnt += __builtin_popcountll(c.full[i] & ~dom[i])
    if cnt == 0:
        c.found_level = level
        return 1
    if budget == 0:
        return 0
    best = 0
    for v in range(n):
        cov = _popcount_andnot(c.closed + v * w, c.full, dom, w)
        if cov > best:
            best = cov
    if cnt > budget * best:
        return 0
    pick = -1
    pick_size = n + 1
    for i in range(w):
        bits = c.full[i] & ~dom[i]
        while bits:
            b = __builtin_ctzll(bits)
            bits &= bits - 1
            v = i * WORD + b
            if c.size[v] < pick_size:
                pick = v
                pick_size = c.size[v]
    nd = c.stack + (level + 1) * w
    for i in range(w):
        bits = c.closed[pick * w + i]
        while bits:
            b = __builtin_ctzll(bits)
            bits &= bits - 1
            x = i * WORD + b
            c.chosen[level] = x
            for v in range(w):
                nd[v] = dom[v] | c.closed[x * w + v]
            if _dom_dfs(c, level + 1, budget - 1):
                return 1
    return 0


def greedy_dominating(masks, int n):
    from clawdom._pykernels import greedy_dominating as _g
    return _g(masks, n)


def dominating_search(masks, int n, int cap):
    """Same contract and output as the pure-Python ``dominating_search``."""
    if n == 0:
        return []
    cdef int w = (n + WORD - 1) // WORD
    cdef DomCtx c
    cdef int v, t, i, lower, upper, top, maxsize
    cdef bint found = 0
    greedy = greedy_dominating(masks, n)
    upper = len(greedy)
    top = min(cap, upper - 1)
    c.n = n
    c.w = w
    c.closed = _pack(masks, n, w)
    c.full = <uint64_t*> calloc(w, sizeof(uint64_t))
    c.stack = <uint64_t*> calloc((n + 2) * w, sizeof(uint64_t))
    c.size = <int*> malloc(n * sizeof(int))
    c.chosen = <int*> malloc((n + 1) * sizeof(int))
    try:
        for v in range(n):
            c.full[v // WORD] |= (<uint64_t> 1) << (v % WORD)
        maxsize = 0
        for v in range(n):
            c.size[v] = 0
            for i in range(w):
                c.size[v] += __builtin_popcountll(c.closed[v * w + i])
            if c.size[v] > maxsize:
                maxsize = c.size[v]
        lower = (n + maxsize - 1) // maxsize
        for t in range(lower, top + 1):
            for i in range(w):
                c.stack[i] = 0
            with nogil:
                found = _dom_dfs(&c, 0, t)
            if found:
                return sorted([c.chosen[i] for i in range(c.found_level)])
        if upper <= cap:
            return sorted(greedy)
        return None
    finally:
        free(c.closed)
        free(c.full)
        free(c.stack)
        free(c.size)
        free(c.chosen)


cdef struct PathCtx:
    int n
    int w
    int k
    uint64_t* closed
    uint64_t* inner
    int* path


cdef bint _path_ext(PathCtx* c, int depth, int last) nogil:
    cdef int w = c.w
    cdef uint64_t* cur
    cdef uint64_t* nxt
    cdef int i, j, b, x
    cdef uint64_t bits
    if depth == c.k:
        return 1
    cur = c.inner + depth * w
    nxt = c.inner + (depth + 1) * w
    for i in range(w):
        bits = c.closed[last * w + i] & ~cur[i]
        while bits:
            b = __builtin_ctzll(bits)
            bits &= bits - 1
            x = i * WORD + b
            c.path[depth] = x
            for j in range(w):
                nxt[j] = cur[j] | c.closed[last * w + j]
            if _path_ext(c, depth + 1, x):
                return 1
    return 0


def induced_path(masks, int n, int k):
    if k <= 0 or k > n:
        return None
    cdef int w = (n + WORD - 1) // WORD
    cdef PathCtx c
    cdef int start, i
    cdef bint found = 0
    c.n = n
    c.w = w
    c.k = k
    c.closed = _pack(masks, n, w)
    c.inner = <uint64_t*> calloc((k + 2) * w, sizeof(uint64_t))
    c.path = <int*> malloc((k + 1) * sizeof(int))
    try:
        for start in range(n):
            for i in range(w):
                c.inner[w + i] = 0
            c.inner[w + start // WORD] = (<uint64_t> 1) << (start % WORD)
            c.path[0] = start
            with nogil:
                found = _path_ext(&c, 1, start)
            if found:
                return [c.path[i] for i in range(k)]
        return None
    finally:
        free(c.closed)
        free(c.inner)
        free(c.path)


cdef struct CycCtx:
    int n
    int w
    int k
    int first
    uint64_t* closed
    uint64_t* above
    uint64_t* inner
    int* path


cdef bint _cyc_ext(CycCtx* c, int j, int last) nogil:
    # path[0..j-1]; inner at level j is the union of closed(path[1..j-2])
    cdef int w = c.w
    cdef uint64_t* cur = c.inner + j * w
    cdef uint64_t* nxt = c.inner + (j + 1) * w
    cdef uint64_t* cf = c.closed + c.first * w
    cdef uint64_t* cl = c.closed + last * w
    cdef uint64_t bits, lastbit, firstbit
    cdef int i, t, b, x
    if j == c.k - 1:
        for i in range(w):
            bits = cl[i] & cf[i] & ~cur[i] & c.above[i]
            while bits:
                b = __builtin_ctzll(bits)
                bits &= bits - 1
                x = i * WORD + b
                if x == last or x == c.first:
                    continue
                if x > c.path[1]:
                    c.path[j] = x
                    return 1
        return 0
    for t in range(w):
        nxt[t] = cur[t] | (cl[t] if j >= 2 else 0)
    for i in range(w):
        bits = cl[i] & ~cur[i] & c.above[i] & ~cf[i]
        while bits:
            b = __builtin_ctzll(bits)
            bits &= bits - 1
            x = i * WORD + b
            if x == last:
                continue
            c.path[j] = x
            if _cyc_ext(c, j + 1, x):
                return 1
    return 0


def induced_cycle(masks, int n, int k):
    if k < 4 or k > n:
        return None
    cdef int w = (n + WORD - 1) // WORD
    cdef CycCtx c
    cdef int start, second, i, b, t
    cdef uint64_t bits
    cdef bint found = 0
    c.n = n
    c.w = w
    c.k = k
    c.closed = _pack(masks, n, w)
    c.above = <uint64_t*> calloc(w, sizeof(uint64_t))
    c.inner = <uint64_t*> calloc((k + 2) * w, sizeof(uint64_t))
    c.path = <int*> malloc((k + 1) * sizeof(int))
    try:
        for start in range(n):
            c.first = start
            for i in range(w):
                c.above[i] = 0
            for i in range(start + 1, n):
                c.above[i // WORD] |= (<uint64_t> 1) << (i % WORD)
            c.path[0] = start
            for i in range(w):
                bits = c.closed[start * w + i] & c.above[i]
                while bits:
                    b = __builtin_ctzll(bits)
                    bits &= bits - 1
                    second = i * WORD + b
                    c.path[1] = second
                    for t in range(w):
                        c.inner[2 * w + t] = 0
                    with nogil:
                        found = _cyc_ext(&c, 2, second)
                    if found:
                        return [c.path[t] for t in range(k)]
        return None
    finally:
        free(c.closed)
        free(c.above)
        free(c.inner)
        free(c.path)
