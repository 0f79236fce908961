"""Ear decompositions, tight cuts and the brick/brace decomposition.

All searches here are exhaustive and meant for desk-scale graphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from evenorient.graph import (
    Graph,
    GraphError,
    find_isomorphism,
    is_bipartite,
    vertex_connectivity_at_least,
)
from evenorient.matching import (
    OneFactor,
    barriers,
    check_one_factor,
    enumerate_perfect_matchings,
    is_bicritical,
    is_one_extendible,
)


class PreconditionError(GraphError):
    pass


class SizeLimitError(GraphError):
    pass


# -- ear decompositions -------------------------------------------------------


@dataclass(frozen=True)
class EarStage:
    """One graph of the sequence, as edge/vertex sets of the input graph.

    ``ears`` are the paths (vertex ids of the input graph) added at this
    stage; empty for the first stage.
    """

    vertices: frozenset[int]
    edges: frozenset[int]
    ears: tuple[tuple[int, ...], ...]
    factor: frozenset[int]

    def graph(self, g: Graph) -> Graph:
        return g.edge_subgraph(self.edges, keep_vertices=self.vertices)


@dataclass(frozen=True)
class EarDecomposition:
    source: Graph
    stages: tuple[EarStage, ...]

    def graphs(self) -> list[Graph]:
        return [s.graph(self.source) for s in self.stages]

    def to_json_obj(self) -> dict:
        g = self.source
        lab = g.labels
        return {
            "stages": [
                {
                    "vertices": [lab[v] for v in sorted(s.vertices)],
                    "edges": [list(g.edge_labels(i)) for i in sorted(s.edges)],
                    "ears": [[lab[v] for v in ear] for ear in s.ears],
                    "factor": [list(g.edge_labels(i)) for i in sorted(s.factor)],
                }
                for s in self.stages
            ]
        }


def _ear_edges(g: Graph, ear: tuple[int, ...]) -> set[int]:
    return {g.edge_id(a, b) for a, b in zip(ear, ear[1:])}


def _ear_paths(g: Graph, inside: frozenset[int], extra: set[int]) -> list[tuple[int, ...]]:
    """Components of the edge set ``extra`` that are paths with both ends in ``inside``."""
    inc: dict[int, list[int]] = {}
    for e in extra:
        for v in g.edges[e]:
            inc.setdefault(v, []).append(e)
    paths = set()
    for start in sorted(inside):
        for e in inc.get(start, ()):
            path = [start]
            cur, edge = start, e
            while True:
                u, v = g.edges[edge]
                nxt = v if u == cur else u
                path.append(nxt)
                if nxt in inside:
                    break
                edge = next(x for x in inc[nxt] if x != edge)
                cur = nxt
            if path[0] > path[-1] or (path[0] == path[-1] and path[1] > path[-2]):
                path.reverse()
            paths.add(tuple(path))
    return sorted(paths)


def f_reducible_ear_decomposition(g: Graph, f: Iterable[int]) -> EarDecomposition:
    """Ear decomposition whose every stage carries ``F`` restricted to it as a 1-factor.

    Starts from the first F-edge.  Each round picks the first edge with
    exactly one end in the current graph (else the first missing edge with
    both ends there), a perfect matching ``M`` through it, and the paths of
    ``(M - E_k) | (F - F_k)`` hanging off the current graph; a smallest
    subset of those paths that keeps the graph 1-extendable becomes the next
    ear system.
    """
    f = check_one_factor(g, f)
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    ok, _ = is_one_extendible(g)
    if not ok:
        raise PreconditionError("graph must be 1-extendable")
    matchings = enumerate_perfect_matchings(g)

    e_start = min(f)
    verts = frozenset(g.edges[e_start])
    edges = frozenset([e_start])
    stages = [EarStage(verts, edges, (), frozenset([e_start]))]
    while len(edges) < g.m:
        crossing = [i for i, (u, v) in enumerate(g.edges) if (u in verts) != (v in verts)]
        if crossing:
            e = crossing[0]
        else:
            e = next(i for i in range(g.m) if i not in edges)
        m = next(pm for pm in matchings if e in pm)
        extra = {i for i in m if i not in edges} | {i for i in f if i not in edges}
        paths = _ear_paths(g, verts, extra)
        chosen = None
        for size in range(1, len(paths) + 1):
            for subset in combinations(paths, size):
                new_edges = edges.union(*(_ear_edges(g, p) for p in subset))
                new_verts = verts.union(*subset)
                if is_one_extendible(g.edge_subgraph(new_edges, new_verts))[0]:
                    chosen = subset
                    break
            if chosen:
                break
        if chosen is None:
            raise AssertionError("no removable ear system among the adjoined paths")
        edges = edges.union(*(_ear_edges(g, p) for p in chosen))
        verts = verts.union(*chosen)
        stages.append(EarStage(verts, edges, tuple(chosen), frozenset(i for i in f if i in edges)))
    return EarDecomposition(g, tuple(stages))


def validate_ear_decomposition(dec: EarDecomposition, f: Iterable[int] | None = None) -> None:
    """Check every defining property; raises ``AssertionError`` with the first failure."""
    g = dec.source
    f = frozenset(f) if f is not None else None
    first = dec.stages[0]
    assert len(first.edges) == 1 and len(first.vertices) == 2, "first stage must be K2"
    last = dec.stages[-1]
    assert last.edges == frozenset(range(g.m)) and last.vertices == frozenset(range(g.n))
    for k, stage in enumerate(dec.stages):
        gk = stage.graph(g)
        assert is_one_extendible(gk)[0], f"stage {k} is not 1-extendable"
        if f is not None:
            assert stage.factor == frozenset(i for i in f if i in stage.edges)
            covered = [v for i in stage.factor for v in g.edges[i]]
            assert sorted(covered) == sorted(stage.vertices), f"stage {k}: F is not a 1-factor"
        if k == 0:
            continue
        prev = dec.stages[k - 1]
        ears = stage.ears
        assert 1 <= len(ears) <= 2, f"stage {k} has {len(ears)} ears"
        seen: set[int] = set()
        for ear in ears:
            assert (len(ear) - 1) % 2 == 1, "ear of even length"
            assert ear[0] in prev.vertices and ear[-1] in prev.vertices
            inner = set(ear[1:-1])
            assert not inner & prev.vertices and not inner & seen, "ears not vertex disjoint"
            assert not {ear[0], ear[-1]} & seen or True
            seen |= set(ear)
            for v in inner:
                deg = sum(1 for i in stage.edges if v in g.edges[i])
                assert deg == 2, "inner ear vertex of degree other than 2"
        added = set().union(*(_ear_edges(g, e) for e in ears))
        assert prev.edges | added == stage.edges and not prev.edges & added
        # removability: no proper nonempty subset may be deleted on its own
        for size in range(1, len(ears)):
            for keep in combinations(ears, size):
                partial = prev.edges.union(*(_ear_edges(g, e) for e in keep))
                pverts = prev.vertices.union(*keep)
                assert not is_one_extendible(g.edge_subgraph(partial, pverts))[0], \
                    f"stage {k}: ear system is not minimal"


# -- cuts ---------------------------------------------------------------------


@dataclass(frozen=True)
class Cut:
    side: tuple[int, ...]
    edges: tuple[int, ...]

    def to_json_obj(self, g: Graph) -> dict:
        return {
            "side": [g.labels[v] for v in self.side],
            "edges": [list(g.edge_labels(i)) for i in self.edges],
        }


def make_cut(g: Graph, side: Iterable[int]) -> Cut:
    """``Delta(X)`` with ``X`` normalized to the smaller side (ties: the side holding vertex 0)."""
    xs = set(side)
    if not xs or len(xs) == g.n:
        raise GraphError("a cut needs a proper nonempty side")
    other = set(range(g.n)) - xs
    if len(other) < len(xs) or (len(other) == len(xs) and 0 in other):
        xs = other
    edges = tuple(i for i, (u, v) in enumerate(g.edges) if (u in xs) != (v in xs))
    return Cut(tuple(sorted(xs)), edges)


@dataclass(frozen=True)
class TightCutReport:
    cut: Cut
    f_tight_for: tuple[int, ...]
    tight: bool
    trivial: bool
    shores: tuple[Graph, Graph] | None = field(default=None, compare=False)

    def to_json_obj(self, g: Graph) -> dict:
        out = self.cut.to_json_obj(g)
        out.update(tight=self.tight, trivial=self.trivial, f_tight_for=list(self.f_tight_for))
        return out


def shores(g: Graph, side: Iterable[int]) -> tuple[Graph, Graph]:
    """``(G/X, G/Xbar)``: shrink each side to one vertex, dropping parallel edges."""
    xs = set(side)
    other = set(range(g.n)) - xs
    return g.contract(xs), g.contract(other)


def _cut_masks(g: Graph, limit: int) -> list[int]:
    if g.n > limit:
        raise SizeLimitError(f"exhaustive cut search limited to {limit} vertices")
    # every cut once: sides containing vertex 0
    return [mask for mask in range(1, 1 << g.n) if mask & 1 and mask != (1 << g.n) - 1]


def enumerate_tight_cuts(
    g: Graph, exhaustive_limit: int = 16, with_shores: bool = True
) -> list[TightCutReport]:
    """Every cut of ``g`` with the perfect matchings it is tight for.

    Shores are attached to non-trivial cuts that are tight for at least one
    perfect matching.
    """
    pms = enumerate_perfect_matchings(g)
    pm_masks = [g.edge_mask(pm) for pm in pms]
    reports = []
    for mask in _cut_masks(g, exhaustive_limit):
        side = [v for v in range(g.n) if mask >> v & 1]
        cut = make_cut(g, side)
        cmask = g.edge_mask(cut.edges)
        tight_for = tuple(i for i, pm in enumerate(pm_masks) if (pm & cmask).bit_count() == 1)
        trivial = len(cut.side) == 1
        sh = shores(g, cut.side) if with_shores and tight_for and not trivial else None
        reports.append(TightCutReport(cut, tight_for, bool(pms) and len(tight_for) == len(pms),
                                      trivial, sh))
    reports.sort(key=lambda r: (len(r.cut.side), r.cut.side))
    return reports


def nontrivial_tight_cuts(g: Graph, exhaustive_limit: int = 16) -> list[Cut]:
    """Non-trivial cuts crossed exactly once by every perfect matching, in (size, lex) order."""
    pms = enumerate_perfect_matchings(g)
    if not pms:
        return []
    pm_masks = [g.edge_mask(pm) for pm in pms]
    found: dict[tuple[int, ...], Cut] = {}
    for mask in _cut_masks(g, exhaustive_limit):
        k = mask.bit_count()
        if k % 2 == 0 or k < 3 or g.n - k < 3:
            continue
        cut = make_cut(g, [v for v in range(g.n) if mask >> v & 1])
        cmask = g.edge_mask(cut.edges)
        if all((pm & cmask).bit_count() == 1 for pm in pm_masks):
            found[cut.side] = cut
    return [found[s] for s in sorted(found, key=lambda s: (len(s), s))]


def is_brick(g: Graph) -> bool:
    """Non-bipartite, 3-connected and bicritical."""
    if g.n < 4 or is_bipartite(g):
        return False
    return vertex_connectivity_at_least(g, 3) and is_bicritical(g)


def is_brick_by_definition(g: Graph) -> bool:
    """Connected, non-bipartite, 1-extendable and free of non-trivial tight cuts."""
    if not g.is_connected() or is_bipartite(g):
        return False
    if not is_one_extendible(g)[0]:
        return False
    return not nontrivial_tight_cuts(g)


def is_brace(g: Graph) -> bool:
    if not g.is_connected() or not is_bipartite(g):
        return False
    if not is_one_extendible(g)[0]:
        return False
    return not nontrivial_tight_cuts(g)


def tight_cut_decomposition(g: Graph, rng: random.Random | None = None) -> list[Graph]:
    """Split along non-trivial tight cuts until only bricks and braces remain.

    The first cut in (size, lex) order is used unless ``rng`` is given, in
    which case a random one is picked at every step.  Pieces are returned
    sorted by (order, size, degree sequence).
    """
    if not is_one_extendible(g)[0]:
        raise PreconditionError("graph must be 1-extendable")
    pieces: list[Graph] = []
    todo = [g]
    while todo:
        h = todo.pop()
        cuts = nontrivial_tight_cuts(h)
        if not cuts:
            pieces.append(h)
            continue
        cut = rng.choice(cuts) if rng is not None else cuts[0]
        todo.extend(reversed(shores(h, cut.side)))
    pieces.sort(key=_piece_key)
    return pieces


def _piece_key(h: Graph) -> tuple:
    return (h.n, h.m, sorted(h.degree(v) for v in range(h.n)))


def same_pieces(a: list[Graph], b: list[Graph]) -> bool:
    """Whether two piece lists agree as multisets up to isomorphism."""
    if len(a) != len(b):
        return False
    rest = list(b)
    for p in a:
        for i, q in enumerate(rest):
            if find_isomorphism(p.simple(), q.simple()) is not None:
                del rest[i]
                break
        else:
            return False
    return True


# -- barrier and 2-separation cuts --------------------------------------------


@dataclass(frozen=True)
class TaggedCut:
    tag: str  # "barrier" or "2-separation"
    cut: Cut
    source: tuple[int, ...]  # the barrier, or the separating pair

    def to_json_obj(self, g: Graph) -> dict:
        out = self.cut.to_json_obj(g)
        out["tag"] = self.tag
        out["source"] = [g.labels[v] for v in self.source]
        return out


def two_separations(g: Graph) -> list[tuple[tuple[int, int], list[list[int]]]]:
    """Pairs ``{u, v}`` whose removal disconnects ``g``, with the resulting components."""
    out = []
    for u, v in combinations(range(g.n), 2):
        comps = g.components((u, v))
        if len(comps) > 1:
            out.append(((u, v), comps))
    return out


def barrier_and_2separation_cuts(g: Graph) -> list[TaggedCut]:
    """Barrier cuts of non-trivial barriers and the cuts of non-barrier 2-separations.

    Barriers are taken in the matching-theory sense (``c_0(G - B) = |B|``
    for a graph with a perfect matching).  Only 2-separations leaving
    exactly two components yield cuts; others are reported by
    :func:`two_separations` but not classified.
    """
    out: list[TaggedCut] = []
    seen: set[tuple[str, tuple[int, ...]]] = set()

    def add(tag: str, side: Iterable[int], source: tuple[int, ...]) -> None:
        cut = make_cut(g, side)
        if (tag, cut.side) not in seen:
            seen.add((tag, cut.side))
            out.append(TaggedCut(tag, cut, source))

    barrier_sets = set()
    for b in barriers(g, mode="maximal"):
        barrier_sets.add(b.vertices)
        if b.trivial:
            continue
        for comp in g.components(b.vertices):
            if len(comp) % 2 == 1 and len(comp) > 1:
                add("barrier", comp, b.vertices)
    for (u, v), comps in two_separations(g):
        if (u, v) in barrier_sets or len(comps) != 2:
            continue
        for comp in comps:
            add("2-separation", list(comp) + [v], (u, v))
            add("2-separation", list(comp) + [u], (u, v))
    return out


def is_tight(g: Graph, side: Iterable[int], matchings: list[OneFactor] | None = None) -> bool:
    if matchings is None:
        matchings = enumerate_perfect_matchings(g)
    cut = make_cut(g, side)
    cmask = g.edge_mask(cut.edges)
    return bool(matchings) and all((g.edge_mask(pm) & cmask).bit_count() == 1 for pm in matchings)
