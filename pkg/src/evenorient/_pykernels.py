"""Pure-Python hot kernels.

Reference implementation of the routines in ``_ckernels.pyx``; used when the
compiled module is unavailable and for graphs too large for 64-bit vertex
masks.  Vertex sets are Python ints used as bitsets.
"""

from __future__ import annotations


class CapExceeded(RuntimeError):
    """An enumeration produced more results than the caller allowed."""


def _low_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def has_perfect_matching(adj: tuple[int, ...], avail: int, memo: dict[int, bool]) -> bool:
    """Whether the subgraph induced by the vertex mask ``avail`` has a perfect matching."""
    if avail == 0:
        return True
    hit = memo.get(avail)
    if hit is not None:
        return hit
    result = False
    if avail.bit_count() % 2 == 0:
        v = _low_bit(avail)
        rest = avail & ~(1 << v)
        cand = adj[v] & rest
        while cand:
            w = _low_bit(cand)
            cand &= cand - 1
            if has_perfect_matching(adj, rest & ~(1 << w), memo):
                result = True
                break
    memo[avail] = result
    return result


def perfect_matchings(
    adj: tuple[int, ...], edge_ids: list[int], n: int, memo: dict[int, bool]
) -> list[tuple[int, ...]]:
    """All perfect matchings as sorted tuples of edge indices, in lexicographic order.

    ``edge_ids`` is the flattened ``n*n`` table of edge indices (-1 for no edge).
    """
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []
    full = (1 << n) - 1

    def rec(avail: int) -> None:
        if avail == 0:
            out.append(tuple(sorted(chosen)))
            return
        v = _low_bit(avail)
        rest = avail & ~(1 << v)
        cand = adj[v] & rest
        while cand:
            w = _low_bit(cand)
            cand &= cand - 1
            nxt = rest & ~(1 << w)
            if not has_perfect_matching(adj, nxt, memo):
                continue
            chosen.append(edge_ids[v * n + w])
            rec(nxt)
            chosen.pop()

    if n % 2 == 0:
        rec(full)
    out.sort()
    return out


def alternating_cycles(
    adj: tuple[int, ...], mate: list[int], n: int, cap: int
) -> list[tuple[int, ...]]:
    """Every cycle alternating between matched and unmatched edges, once each.

    A cycle is reported from its least vertex ``s``, leaving ``s`` along its
    matched edge, so both traversal directions and all rotations collapse to
    one hit.
    """
    out: list[tuple[int, ...]] = []
    path: list[int] = []

    def extend(s: int, cur: int, visited: int) -> None:
        # cur was just reached along a matched edge; take an unmatched one
        cand = adj[cur] & ~(1 << mate[cur])
        if cand >> s & 1 and len(path) >= 4:
            out.append(tuple(path))
            if len(out) > cap:
                raise CapExceeded(f"more than {cap} alternating cycles")
        cand &= ~visited & ~((1 << (s + 1)) - 1)
        while cand:
            w = _low_bit(cand)
            cand &= cand - 1
            x = mate[w]
            path.append(w)
            path.append(x)
            extend(s, x, visited | (1 << w) | (1 << x))
            path.pop()
            path.pop()

    for s in range(n):
        t = mate[s]
        if t < s:
            continue
        path[:] = [s, t]
        extend(s, t, (1 << s) | (1 << t))
    return out


def odd_components(adj: tuple[int, ...], avail: int) -> tuple[int, int]:
    """``(odd, even)`` component counts of the subgraph induced by ``avail``."""
    odd = even = 0
    left = avail
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            v = _low_bit(frontier)
            frontier &= frontier - 1
            new = adj[v] & avail & ~comp
            comp |= new
            frontier |= new
        left &= ~comp
        if comp.bit_count() % 2:
            odd += 1
        else:
            even += 1
    return odd, even
