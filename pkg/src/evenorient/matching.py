"""Perfect matchings and the matching-theoretic predicates built on them."""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal

from evenorient import kernels
from evenorient.graph import Graph, GraphError

OneFactor = frozenset[int]

# per-graph memo of "vertex mask -> has a perfect matching"; never observable
# in results, only saves work across calls on the same graph
_PM_MEMO: "weakref.WeakKeyDictionary[Graph, dict[int, bool]]" = weakref.WeakKeyDictionary()


class NoFactorError(GraphError):
    """The graph has no perfect matching."""


def _memo(g: Graph) -> dict[int, bool]:
    try:
        return _PM_MEMO[g]
    except KeyError:
        memo: dict[int, bool] = {}
        _PM_MEMO[g] = memo
        return memo
    except TypeError:  # unhashable labels
        return {}


def _edge_table(g: Graph) -> list[int]:
    table = [-1] * (g.n * g.n)
    for i, (u, v) in enumerate(g.edges):
        if table[u * g.n + v] < 0:
            table[u * g.n + v] = table[v * g.n + u] = i
    return table


def full_mask(g: Graph) -> int:
    return (1 << g.n) - 1


def has_perfect_matching(g: Graph, removed: Iterable[int] = ()) -> bool:
    """Whether ``g`` minus the given vertices has a perfect matching."""
    avail = full_mask(g)
    for v in removed:
        avail &= ~(1 << v)
    return kernels.has_perfect_matching(g.adj_masks, avail, _memo(g))


def enumerate_perfect_matchings(g: Graph) -> list[OneFactor]:
    """Every perfect matching of ``g``, sorted by their sorted edge-index tuples."""
    if g.n % 2:
        return []
    raw = kernels.perfect_matchings(g.adj_masks, _edge_table(g), g.n, _memo(g))
    return [frozenset(t) for t in raw]


def first_perfect_matching(g: Graph) -> OneFactor:
    pms = enumerate_perfect_matchings(g)
    if not pms:
        raise NoFactorError("graph has no perfect matching")
    return pms[0]


def is_one_factor(g: Graph, f: Iterable[int]) -> bool:
    covered: set[int] = set()
    count = 0
    for i in f:
        u, v = g.edges[i]
        if u in covered or v in covered:
            return False
        covered.update((u, v))
        count += 1
    return len(covered) == g.n


def check_one_factor(g: Graph, f: Iterable[int]) -> OneFactor:
    f = frozenset(f)
    if not all(0 <= i < g.m for i in f):
        raise GraphError("factor refers to a missing edge")
    if not is_one_factor(g, f):
        raise GraphError("edge set is not a 1-factor of the graph")
    return f


def factor_from_labels(g: Graph, pairs: Iterable[tuple]) -> OneFactor:
    return check_one_factor(g, (g.edge_by_labels(a, b) for a, b in pairs))


def mate_array(g: Graph, f: Iterable[int]) -> list[int]:
    mate = [-1] * g.n
    for i in f:
        u, v = g.edges[i]
        mate[u], mate[v] = v, u
    return mate


def is_one_extendible(g: Graph) -> tuple[bool, int | None]:
    """``(True, None)`` if every edge lies in a perfect matching, else ``(False, first bad edge)``."""
    if not has_perfect_matching(g):
        return (False, 0) if g.m else (g.n == 0, None)
    for i, (u, v) in enumerate(g.edges):
        if not has_perfect_matching(g, (u, v)):
            return False, i
    return True, None


def is_bicritical(g: Graph) -> bool:
    """``g - u - v`` has a perfect matching for every pair of distinct vertices."""
    if g.m == 0:
        return False
    return all(has_perfect_matching(g, (u, v)) for u, v in combinations(range(g.n), 2))


def odd_component_count(g: Graph, removed: Iterable[int]) -> int:
    avail = full_mask(g)
    for v in removed:
        avail &= ~(1 << v)
    return kernels.odd_components(g.adj_masks, avail)[0]


def deficiency(g: Graph) -> int:
    """``max_S c_0(G - S) - |S|`` (Tutte-Berge); zero iff a perfect matching exists."""
    if has_perfect_matching(g):
        return 0
    return max(odd_component_count(g, s) - len(s)
               for k in range(g.n + 1) for s in combinations(range(g.n), k))


@dataclass(frozen=True)
class Barrier:
    vertices: tuple[int, ...]
    odd_components: int
    trivial: bool


def barriers(
    g: Graph,
    max_size: int | None = None,
    mode: Literal["strict", "maximal"] = "strict",
) -> list[Barrier]:
    """Vertex sets ``S`` with ``|S| <= max_size`` that are barriers.

    ``mode="strict"`` uses ``c_0(G - S) > |S|`` literally; such sets exist
    only when ``g`` has no perfect matching.  ``mode="maximal"`` uses the
    matching-theory notion ``c_0(G - S) - |S| = deficiency(G)``, which for a
    graph with a perfect matching means ``c_0(G - S) = |S|``; this is the
    form the barrier-cut results are about.
    Results are ordered by size, then lexicographically.
    """
    if max_size is None:
        max_size = g.n
    if max_size > g.n:
        raise ValueError("max_size exceeds the number of vertices")
    if g.n > 16 and max_size == g.n:
        raise ValueError("exhaustive barrier search is limited to 16 vertices")
    slack = deficiency(g) if mode == "maximal" else None
    out = []
    for k in range(max_size + 1):
        for s in combinations(range(g.n), k):
            c0 = odd_component_count(g, s)
            hit = c0 > k if slack is None else c0 - k == slack
            if hit:
                out.append(Barrier(s, c0, k <= 1))
    return out


def tutte_deficiency_check(g: Graph, max_size: int | None = None) -> tuple[int, ...] | None:
    """First ``S`` (by size, then lexicographic) with ``c_0(G - S) > |S|``, or ``None``."""
    if max_size is None:
        max_size = g.n
    for k in range(max_size + 1):
        for s in combinations(range(g.n), k):
            if odd_component_count(g, s) > k:
                return s
    return None


def is_e0_bad(g: Graph, e: int, e0: int) -> bool:
    """Every perfect matching containing edge ``e`` also contains ``e0``."""
    if e == e0:
        return True
    u, v = g.edges[e]
    a, b = g.edges[e0]
    if {u, v} & {a, b}:
        # e and e0 share an end, so no matching holds both
        return not has_perfect_matching(g, (u, v))
    rest = g.delete_edges([e0])
    return not has_perfect_matching(rest, (rest.vid(g.labels[u]), rest.vid(g.labels[v])))
