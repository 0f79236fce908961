# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; vertex sets are 64-bit masks so graphs must have n <= 64.

Same contracts as the functions in ``_pykernels``.
"""

from libc.stdint cimport uint64_t

from evenorient._pykernels import CapExceeded


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int low_bit(uint64_t mask) noexcept nogil:
    return __builtin_ctzll(mask)


cdef inline int popcount(uint64_t mask) noexcept nogil:
    return __builtin_popcountll(mask)


cdef bint _has_pm(uint64_t* adj, uint64_t avail, dict memo) except -1:
    cdef uint64_t rest, cand, bit
    cdef int v, w
    cdef bint result = False
    if avail == 0:
        return True
    key = avail
    hit = memo.get(key)
    if hit is not None:
        return hit
    if popcount(avail) % 2 == 0:
        v = low_bit(avail)
        rest = avail & ~((<uint64_t>1) << v)
        cand = adj[v] & rest
        while cand:
            w = low_bit(cand)
            cand &= cand - 1
            if _has_pm(adj, rest & ~((<uint64_t>1) << w), memo):
                result = True
                break
    memo[key] = result
    return result


cdef void _load(tuple adj_in, uint64_t* adj, int n):
    cdef int i
    for i in range(n):
        adj[i] = <uint64_t>adj_in[i]


def has_perfect_matching(tuple adj_in, avail, dict memo):
    cdef uint64_t adj[64]
    cdef int n = len(adj_in)
    if n > 64:
        raise ValueError("compiled kernels need n <= 64")
    _load(adj_in, adj, n)
    return bool(_has_pm(adj, <uint64_t>avail, memo))


cdef int _pm_rec(uint64_t* adj, int* eid, int n, uint64_t avail, int* chosen, int depth,
                 list out, dict memo) except -1:
    cdef uint64_t rest, cand, nxt
    cdef int v, w
    if avail == 0:
        out.append(tuple(sorted([chosen[i] for i in range(depth)])))
        return 0
    v = low_bit(avail)
    rest = avail & ~((<uint64_t>1) << v)
    cand = adj[v] & rest
    while cand:
        w = low_bit(cand)
        cand &= cand - 1
        nxt = rest & ~((<uint64_t>1) << w)
        if not _has_pm(adj, nxt, memo):
            continue
        chosen[depth] = eid[v * n + w]
        _pm_rec(adj, eid, n, nxt, chosen, depth + 1, out, memo)
    return 0


def perfect_matchings(tuple adj_in, list edge_ids, int n, dict memo):
    cdef uint64_t adj[64]
    cdef int eid[64 * 64]
    cdef int chosen[32]
    cdef int i
    cdef list out = []
    if n > 64:
        raise ValueError("compiled kernels need n <= 64")
    _load(adj_in, adj, n)
    for i in range(n * n):
        eid[i] = edge_ids[i]
    if n % 2 == 0:
        _pm_rec(adj, eid, n, ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF,
                chosen, 0, out, memo)
    out.sort()
    return out


def alternating_cycles(tuple adj_in, list mate_in, int n, long long cap):
    """Iterative DFS version of ``_pykernels.alternating_cycles``."""
    cdef uint64_t adj[64]
    cdef int mate[64]
    cdef int path[64]
    cdef uint64_t cand_stack[33]
    cdef uint64_t visited
    cdef int s, t, depth, cur, w, x, i, plen
    cdef uint64_t above, cand
    cdef list out = []
    if n > 64:
        raise ValueError("compiled kernels need n <= 64")
    _load(adj_in, adj, n)
    for i in range(n):
        mate[i] = mate_in[i]
    for s in range(n):
        t = mate[s]
        if t < s:
            continue
        above = ~(((<uint64_t>1) << (s + 1)) - 1) if s < 63 else <uint64_t>0
        path[0] = s
        path[1] = t
        plen = 2
        visited = ((<uint64_t>1) << s) | ((<uint64_t>1) << t)
        depth = 0
        # entering a vertex: report closure, then push its candidate set
        cur = t
        cand = adj[cur] & ~((<uint64_t>1) << mate[cur])
        if (cand >> s) & 1 and plen >= 4:
            out.append(tuple([path[i] for i in range(plen)]))
        cand_stack[0] = cand & ~visited & above
        while depth >= 0:
            cand = cand_stack[depth]
            if cand == 0:
                depth -= 1
                if depth >= 0:
                    plen -= 2
                    visited &= ~((<uint64_t>1) << path[plen])
                    visited &= ~((<uint64_t>1) << path[plen + 1])
                continue
            w = low_bit(cand)
            cand_stack[depth] = cand & (cand - 1)
            x = mate[w]
            path[plen] = w
            path[plen + 1] = x
            plen += 2
            visited |= ((<uint64_t>1) << w) | ((<uint64_t>1) << x)
            cand = adj[x] & ~((<uint64_t>1) << mate[x])
            if (cand >> s) & 1:
                out.append(tuple([path[i] for i in range(plen)]))
                if len(out) > cap:
                    raise CapExceeded(f"more than {cap} alternating cycles")
            depth += 1
            cand_stack[depth] = cand & ~visited & above
    return out


def odd_components(tuple adj_in, avail_in):
    cdef uint64_t adj[64]
    cdef int n = len(adj_in)
    cdef uint64_t avail = <uint64_t>avail_in
    cdef uint64_t left, comp, frontier, new
    cdef int v, odd = 0, even = 0
    if n > 64:
        raise ValueError("compiled kernels need n <= 64")
    _load(adj_in, adj, n)
    left = avail
    while left:
        comp = left & (~left + 1)
        frontier = comp
        while frontier:
            v = low_bit(frontier)
            frontier &= frontier - 1
            new = adj[v] & avail & ~comp
            comp |= new
            frontier |= new
        left &= ~comp
        if popcount(comp) % 2:
            odd += 1
        else:
            even += 1
    return odd, even
