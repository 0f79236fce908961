"""Skew edge pairs and membership in the generalized Wagner class.

A graph is in the class when it is 1-extendable and has two independent
edges ``R = {e, f}`` such that ``G - R`` is bipartite and 1-extendable, and
some 1-factor ``F`` of ``G - R`` has two F-alternating cycles through both
``e`` and ``f`` that traverse them in opposite relative directions.  Such an
``F`` is called a W-factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from evenorient.alternating import AltCycle, enumerate_alternating_cycles, make_alt_cycle
from evenorient.graph import (
    Graph,
    GraphError,
    WalkError,
    find_isomorphism,
    is_bipartite_after_removing,
    suppress_even_subdivision,
)
from evenorient.matching import (
    OneFactor,
    enumerate_perfect_matchings,
    is_e0_bad,
    is_one_extendible,
    is_one_factor,
)

Pair = tuple[int, int]


class SkewPreconditionError(GraphError):
    pass


class CertificateError(GraphError):
    pass


class SearchCapError(RuntimeError):
    pass


# -- skewness -----------------------------------------------------------------


@dataclass(frozen=True)
class SkewWitness:
    """``e`` and ``f`` as vertex pairs; ``side`` is 1 or 2, the cycle in which
    ``(e[0], e[1], f[0], f[1])`` is a cyclic subsequence."""

    e: Pair
    f: Pair
    c1: tuple[int, ...]
    c2: tuple[int, ...]
    side: int


def _position(cycle: Sequence[int]) -> dict[int, int]:
    return {v: i for i, v in enumerate(cycle)}


def _follows(cycle: Sequence[int], pos: dict[int, int], a: int, b: int) -> bool | None:
    """True if ``b`` comes right after ``a``, False if right before, None if not adjacent."""
    k = len(cycle)
    i, j = pos.get(a), pos.get(b)
    if i is None or j is None:
        return None
    if (i + 1) % k == j:
        return True
    if (j + 1) % k == i:
        return False
    return None


def _same_direction(cycle: Sequence[int], e: Pair, f: Pair) -> bool:
    pos = _position(cycle)
    de = _follows(cycle, pos, *e)
    df = _follows(cycle, pos, *f)
    if de is None or df is None:
        raise SkewPreconditionError("both edges must lie on both cycles")
    return de == df


def are_skew(
    c1: Sequence[int], c2: Sequence[int], e: Pair, f: Pair
) -> SkewWitness | None:
    """Witness if ``e`` and ``f`` run the same way round exactly one of the cycles.

    Cycles are vertex sequences; ``e`` and ``f`` are vertex pairs.  Relabelling
    either edge flips its direction on both cycles at once, so the answer does
    not depend on how the pairs are written.
    """
    c1, c2 = tuple(c1), tuple(c2)
    e, f = tuple(e), tuple(f)
    if len(set(e) | set(f)) != 4:
        raise SkewPreconditionError("edges must be independent")
    s1 = _same_direction(c1, e, f)
    s2 = _same_direction(c2, e, f)
    if s1 == s2:
        return None
    return SkewWitness(e, f, c1, c2, 1 if s1 else 2)


# -- certificates -------------------------------------------------------------


@dataclass(frozen=True)
class WagnerCertificate:
    r: tuple[int, int]
    factor: OneFactor
    bipartition: tuple[frozenset[int], frozenset[int]]
    c1: AltCycle
    c2: AltCycle
    skew: SkewWitness

    def to_json_obj(self, g: Graph) -> dict:
        lab = g.labels
        return {
            "r": [list(g.edge_labels(i)) for i in self.r],
            "factor": [list(g.edge_labels(i)) for i in sorted(self.factor)],
            "bipartition": [[lab[v] for v in sorted(side)] for side in self.bipartition],
            "c1": self.c1.labels(g),
            "c2": self.c2.labels(g),
            "skew_side": self.skew.side,
        }


def validate_certificate(g: Graph, cert: WagnerCertificate) -> None:
    """Re-check every clause from scratch; raises ``CertificateError``."""
    if not is_one_extendible(g)[0]:
        raise CertificateError("graph is not 1-extendable")
    e, f = cert.r
    if e == f:
        raise CertificateError("R needs two distinct edges")
    rest = g.delete_edges(cert.r)
    if not is_one_extendible(rest)[0]:
        raise CertificateError("G - R is not 1-extendable")
    xs, ys = cert.bipartition
    if xs | ys != frozenset(range(g.n)) or xs & ys:
        raise CertificateError("bipartition does not partition the vertices")
    for i, (u, v) in enumerate(g.edges):
        if i not in cert.r and (u in xs) == (v in xs):
            raise CertificateError("G - R is not bipartite with the given sides")
    if set(cert.r) & cert.factor or not is_one_factor(g, cert.factor):
        raise CertificateError("factor is not a 1-factor of G - R")
    for c in (cert.c1, cert.c2):
        try:
            make_alt_cycle(g, cert.factor, c.vertices)
        except (WalkError, KeyError):
            raise CertificateError("cycle is not F-alternating") from None
    try:
        w = are_skew(cert.c1.vertices, cert.c2.vertices, g.edges[e], g.edges[f])
    except SkewPreconditionError as exc:
        raise CertificateError(str(exc)) from None
    if w is None:
        raise CertificateError("edges are not skew relative to the cycles")


def _independent(g: Graph, i: int, j: int) -> bool:
    return not set(g.edges[i]) & set(g.edges[j])


def _skew_pair(
    g: Graph, f: OneFactor, e: int, h: int, cycles: list[AltCycle]
) -> tuple[AltCycle, AltCycle, SkewWitness] | None:
    through = [c for c in cycles if e in c.edges and h in c.edges]
    for c1, c2 in combinations(through, 2):
        w = are_skew(c1.vertices, c2.vertices, g.edges[e], g.edges[h])
        if w is not None:
            return c1, c2, w
    return None


def _r_candidates(g: Graph, avoid: frozenset[int] = frozenset()):
    for i, j in combinations(range(g.m), 2):
        if i in avoid or j in avoid or not _independent(g, i, j):
            continue
        sides = is_bipartite_after_removing(g, (i, j))
        if sides is None:
            continue
        rest = g.delete_edges((i, j))
        if not is_one_extendible(rest)[0]:
            continue
        yield (i, j), sides, rest


def _lift(g: Graph, rest: Graph, factor: Iterable[int]) -> OneFactor:
    return frozenset(g.edge_id(*rest.edges[k]) for k in factor)


def wagner_membership(g: Graph) -> WagnerCertificate | None:
    """First certificate in (R, factor, cycle pair) lexicographic order, or ``None``."""
    if not is_one_extendible(g)[0]:
        return None
    for r, sides, rest in _r_candidates(g):
        for pm in enumerate_perfect_matchings(rest):
            f = _lift(g, rest, pm)
            hit = _skew_pair(g, f, *r, enumerate_alternating_cycles(g, f))
            if hit:
                return WagnerCertificate(r, f, sides, *hit)
    return None


def w_factor_certificate(g: Graph, f: Iterable[int]) -> WagnerCertificate | None:
    """Certificate showing ``f`` is a W-factor of ``g``, or ``None``."""
    f = frozenset(f)
    if not is_one_factor(g, f) or not is_one_extendible(g)[0]:
        return None
    cycles = enumerate_alternating_cycles(g, f)
    for r, sides, _ in _r_candidates(g, avoid=f):
        hit = _skew_pair(g, f, *r, cycles)
        if hit:
            return WagnerCertificate(r, f, sides, *hit)
    return None


def w_factors(g: Graph) -> list[OneFactor]:
    """Every 1-factor of ``g`` that is a W-factor."""
    if not is_one_extendible(g)[0]:
        return []
    return [f for f in enumerate_perfect_matchings(g) if w_factor_certificate(g, f)]


# -- reductions ---------------------------------------------------------------


def transfer_certificate(g: Graph, h: Graph, cert: WagnerCertificate) -> WagnerCertificate:
    """Move a certificate of ``g`` onto a subgraph ``h`` by vertex labels."""
    vmap = {v: h.vid(g.labels[v]) for v in range(g.n) if h.has_label(g.labels[v])}

    def edge(i: int) -> int:
        u, v = g.edges[i]
        return h.edge_id(vmap[u], vmap[v])

    try:
        r = tuple(sorted(edge(i) for i in cert.r))
        f = frozenset(edge(i) for i in cert.factor if g.edges[i][0] in vmap and g.edges[i][1] in vmap)
        c1 = make_alt_cycle(h, f, [vmap[v] for v in cert.c1.vertices])
        c2 = make_alt_cycle(h, f, [vmap[v] for v in cert.c2.vertices])
    except (KeyError, WalkError):
        raise CertificateError("certificate does not survive in the subgraph") from None
    xs = frozenset(vmap[v] for v in cert.bipartition[0] if v in vmap)
    ys = frozenset(vmap[v] for v in cert.bipartition[1] if v in vmap)
    w = are_skew(c1.vertices, c2.vertices, h.edges[r[0]], h.edges[r[1]])
    if w is None:
        raise CertificateError("skewness lost in the subgraph")
    return WagnerCertificate(r, f, (xs, ys), c1, c2, w)


@dataclass(frozen=True)
class ReductionStep:
    vertex: int  # id in the graph before the step
    e0: int
    deleted: tuple[tuple, ...]  # label pairs
    degree_before: int
    degree_after: int


@dataclass(frozen=True)
class Reduction:
    graph: Graph
    certificate: WagnerCertificate
    steps: tuple[ReductionStep, ...]


def reduce_to_subcubic(g: Graph, cert: WagnerCertificate) -> Reduction:
    """Delete ``e0``-bad edges until the maximum degree is at most 3.

    Each round takes the first vertex ``u`` of degree >= 4 and tries the
    edges ``e0`` at ``u`` avoiding both cycles and the factor, in index
    order.  The first ``e0`` whose reduced graph still carries the
    certificate wins.  An arbitrary ``e0`` is not enough: the reduced graph
    keeps ``C1 | C2`` and 1-extendability, but ``G - R`` can lose
    1-extendability.
    """
    validate_certificate(g, cert)
    steps = []
    while g.max_degree() >= 4:
        u = next(v for v in range(g.n) if g.degree(v) >= 4)
        used = set(cert.c1.edges) | set(cert.c2.edges) | set(cert.factor)
        for e0 in (i for i in g.incidence[u] if i not in used):
            bad = [i for i in range(g.m) if is_e0_bad(g, i, e0)]
            h = g.delete_edges(bad)
            try:
                new_cert = transfer_certificate(g, h, cert)
                validate_certificate(h, new_cert)
            except CertificateError:
                continue
            break
        else:
            raise CertificateError(f"no usable e0 at vertex {g.labels[u]!r}")
        steps.append(ReductionStep(u, e0, tuple(g.edge_labels(i) for i in bad),
                                   g.degree(u), h.degree(h.vid(g.labels[u]))))
        g, cert = h, new_cert
    return Reduction(g, cert, tuple(steps))


# -- central subgraphs ----------------------------------------------------------


def restrict_factor(g: Graph, f: Iterable[int], h: Graph) -> OneFactor:
    """Edges of ``f`` with both ends in the subgraph ``h``, as ``h`` edge indices."""
    out = set()
    for i in f:
        a, b = g.edge_labels(i)
        if h.has_label(a) and h.has_label(b):
            out.add(h.edge_by_labels(a, b))
    return frozenset(out)


def is_f_central(g: Graph, f: Iterable[int], h: Graph) -> bool:
    """``F`` restricted to ``h`` is a 1-factor of ``h`` (so the rest of ``F`` matches ``G - V(H)``)."""
    f = frozenset(f)
    inside = {h.labels[v] for v in range(h.n)}
    covered = []
    for i in f:
        a, b = g.edge_labels(i)
        if a in inside and b in inside:
            if not h.has_edge(h.vid(a), h.vid(b)):
                return False
            covered += [a, b]
        elif a in inside or b in inside:
            return False
    return sorted(map(str, covered)) == sorted(map(str, inside))


def _fixed_r_certificate(
    g: Graph, h: Graph, f: OneFactor, c1: AltCycle, c2: AltCycle, r: Pair
) -> WagnerCertificate | None:
    """Certificate for the subgraph ``h`` with ``R`` and both cycles fixed, or ``None``."""
    hr = tuple(sorted(h.edge_by_labels(*g.edge_labels(i)) for i in r))
    sides = is_bipartite_after_removing(h, hr)
    if sides is None:
        return None
    hf = restrict_factor(g, f, h)
    c1h = make_alt_cycle(h, hf, [h.vid(g.labels[v]) for v in c1.vertices])
    c2h = make_alt_cycle(h, hf, [h.vid(g.labels[v]) for v in c2.vertices])
    w = are_skew(c1h.vertices, c2h.vertices, h.edges[hr[0]], h.edges[hr[1]])
    cert = WagnerCertificate(hr, hf, sides, c1h, c2h, w)
    try:
        validate_certificate(h, cert)
    except CertificateError:
        return None
    return cert


def find_central_W_subgraph(
    g: Graph, f: Iterable[int], cap: int = 1 << 16
) -> tuple[Graph, WagnerCertificate] | None:
    """An F-central subgraph in the class, with ``F`` restricted to it a W-factor.

    ``g`` itself is tried first.  Otherwise every skew quadruple
    ``(C1, C2, e, f)`` of F-alternating cycles of ``g`` fixes ``R = {e, f}``,
    and candidates are ``C1 | C2`` plus some further F-edges plus a subset of
    the remaining edges among the chosen vertices.  Fewer extra F-edges come
    first, then fewer extra edges.  More than ``cap`` candidates raises
    ``SearchCapError``.
    """
    f = frozenset(f)
    cert = w_factor_certificate(g, f)
    if cert is not None:
        return g, cert
    cycles = enumerate_alternating_cycles(g, f)
    quads = []
    for c1, c2 in combinations(cycles, 2):
        shared = set(c2.edges)
        common = [i for i in c1.edges if i in shared and i not in f]
        for a, b in combinations(common, 2):
            if _independent(g, a, b) and are_skew(c1.vertices, c2.vertices, g.edges[a], g.edges[b]):
                quads.append((c1, c2, (a, b)))
    tried = 0
    for k in range(len(f) + 1):
        for c1, c2, r in quads:
            base = set(c1.edges) | set(c2.edges)
            verts = set(c1.vertices) | set(c2.vertices)
            outside = sorted(i for i in f if not set(g.edges[i]) & verts)
            for more in combinations(outside, k):
                vs = verts.union(*(g.edges[i] for i in more))
                core = base | set(more)
                extra = [i for i, (u, v) in enumerate(g.edges)
                         if i not in core and i not in f and u in vs and v in vs]
                for size in range(len(extra) + 1):
                    for chosen in combinations(extra, size):
                        tried += 1
                        if tried > cap:
                            raise SearchCapError(f"more than {cap} candidate subgraphs")
                        h = g.edge_subgraph(core | set(chosen))
                        hc = _fixed_r_certificate(g, h, f, c1, c2, r)
                        if hc is not None:
                            return h, hc
    return None


# -- K4 subdivisions ------------------------------------------------------------


@dataclass(frozen=True)
class K4Subdivision:
    graph: Graph  # subgraph of the input, labels kept
    branch_vertices: tuple  # labels
    cycle: tuple  # labels of the F-alternating cycle used as the rim


_K4 = Graph.from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


def _bridges(g: Graph, cycle: tuple[int, ...], allowed: set[int]) -> list[tuple[int, ...]]:
    """Paths in ``allowed`` edges joining two cycle vertices, internally off the cycle."""
    on = set(cycle)
    out = set()

    def walk(path: list[int], used: set[int]) -> None:
        cur = path[-1]
        for e in g.incidence[cur]:
            if e not in allowed or e in used:
                continue
            u, v = g.edges[e]
            nxt = v if u == cur else u
            if nxt in path:
                continue
            if nxt in on:
                if nxt != path[0]:
                    p = path + [nxt]
                    out.add(tuple(p) if p[0] < p[-1] else tuple(reversed(p)))
                continue
            walk(path + [nxt], used | {e})

    for s in sorted(on):
        walk([s], set())
    return sorted(out, key=lambda p: (len(p), p))


def _interleaved(cycle: tuple[int, ...], p: tuple[int, ...], q: tuple[int, ...]) -> bool:
    pos = _position(cycle)
    a, b = sorted((pos[p[0]], pos[p[-1]]))
    inside = [a < pos[x] < b for x in (q[0], q[-1])]
    return len({p[0], p[-1], q[0], q[-1]}) == 4 and inside[0] != inside[1]


def _check_k4(g: Graph, f: frozenset[int], edges: set[int]) -> K4Subdivision | None:
    h = g.edge_subgraph(edges)
    sup = suppress_even_subdivision(h)
    if not sup.parity_ok or sup.base.multi_ok or find_isomorphism(sup.base, _K4) is None:
        return None
    if not is_f_central(g, f, h):
        return None
    return K4Subdivision(h, tuple(sup.base.labels), ())


def central_K4_subdivision(g: Graph, cert: WagnerCertificate) -> K4Subdivision | None:
    """F-central even subdivision of K4 inside ``C1 | C2``.

    Tries the rim ``C1`` with two crossing bridges formed by segments of
    ``C2`` first, then any F-alternating cycle of ``C1 | C2`` with two
    crossing bridges from the rest of the union.  Every returned subgraph
    has been checked: it suppresses to K4, all suppressed paths are odd and
    ``F`` restricted to it is a 1-factor.
    """
    validate_certificate(g, cert)
    f = cert.factor
    union = set(cert.c1.edges) | set(cert.c2.edges)
    u = g.edge_subgraph(union)
    uf = restrict_factor(g, f, u)
    rims = [cert.c1.vertices, cert.c2.vertices]
    lifted = [tuple(g.vid(lab) for lab in c.labels(u)) for c in enumerate_alternating_cycles(u, uf)]
    rims += [r for r in lifted if r not in rims]
    for rim in rims:
        rim_edges = set()
        for a, b in zip(rim, rim[1:] + rim[:1]):
            rim_edges.add(g.edge_id(a, b))
        bridges = _bridges(g, rim, union - rim_edges)
        for p, q in combinations(bridges, 2):
            if set(p[1:-1]) & set(q[1:-1]) or not _interleaved(rim, p, q):
                continue
            edges = set(rim_edges)
            for path in (p, q):
                edges.update(g.edge_id(a, b) for a, b in zip(path, path[1:]))
            found = _check_k4(g, f, edges)
            if found is not None:
                return K4Subdivision(found.graph, found.branch_vertices,
                                     tuple(g.labels[v] for v in rim))
    return None
