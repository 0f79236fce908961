"""Edge splitting and glueing on cubic graphs.

Splitting at ``e0 = (a, b)`` deletes ``a`` and ``b`` and reconnects their
other neighbours in pairs.  Neighbours are always ordered by vertex id:
``a`` is the end of ``e0`` with the lower id, ``N(a) - b = {b1 < b2}``,
``N(b) - a = {a1 < a2}``, and the two reconnections are

    choice 1:  (a1, b1), (a2, b2)
    choice 2:  (a1, b2), (a2, b1)

Glueing is the converse: subdivide two independent edges and join the two
new vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from evenorient.graph import Graph, GraphError, Label
from evenorient.wagner import WagnerCertificate

Choice = Literal[1, 2]


class SplitError(GraphError):
    pass


class GlueError(GraphError):
    pass


@dataclass(frozen=True)
class SplitResult:
    graph: Graph
    is_simple: bool
    e0: tuple[Label, Label]
    choice: Choice
    added: tuple[tuple[Label, Label], tuple[Label, Label]]


def split_sites(g: Graph, e0: int) -> tuple[int, int, tuple[int, int], tuple[int, int]]:
    """``(a, b, (a1, a2), (b1, b2))`` for splitting at edge ``e0``; raises ``SplitError``."""
    a, b = g.edges[e0]
    if g.degree(a) != 3 or g.degree(b) != 3:
        raise SplitError("both ends of e0 must have degree 3")
    nb = sorted(g.adjacency[a] - {b})
    na = sorted(g.adjacency[b] - {a})
    if set(na) & set(nb):
        raise SplitError("ends of e0 have a common neighbour")
    return a, b, (na[0], na[1]), (nb[0], nb[1])


def reconnection(g: Graph, e0: int, choice: Choice) -> tuple[tuple[int, int], tuple[int, int]]:
    _, _, (a1, a2), (b1, b2) = split_sites(g, e0)
    if choice == 1:
        return (a1, b1), (a2, b2)
    if choice == 2:
        return (a1, b2), (a2, b1)
    raise SplitError(f"choice must be 1 or 2, not {choice!r}")


def e0_split(g: Graph, e0: int, choice: Choice) -> SplitResult:
    """Split ``g`` at edge index ``e0``; a repeated edge makes the result a flagged multigraph."""
    a, b = g.edges[e0]
    pairs = reconnection(g, e0, choice)
    simple = not any(g.has_edge(u, v) for u, v in pairs)
    lab = g.labels
    kept = [g.edge_labels(i) for i, (u, v) in enumerate(g.edges)
            if not {u, v} & {a, b}]
    added = tuple((lab[u], lab[v]) for u, v in pairs)
    out = Graph.from_edges(kept + list(added),
                           vertices=[lab[v] for v in range(g.n) if v not in (a, b)],
                           multi_ok=not simple)
    return SplitResult(out, simple, g.edge_labels(e0), choice, added)


def special_vertices(g: Graph, cert: WagnerCertificate) -> set[int]:
    return {v for i in cert.r for v in g.edges[i]}


def qualifies_for_special_split(g: Graph, cert: WagnerCertificate, e0: int) -> bool:
    """``e0`` is a factor edge with a non-special end and a special vertex next to it."""
    if e0 not in cert.factor:
        return False
    x, y = g.edges[e0]
    special = special_vertices(g, cert)
    if x in special and y in special:
        return False
    near = (g.adjacency[x] | g.adjacency[y]) & special
    return bool(near)


def special_e0_split(
    g: Graph, cert: WagnerCertificate, e0: int | None = None
) -> SplitResult | None:
    """A special split of a cubic class member, preferring a simple result.

    With ``e0`` given, ``None`` means it does not qualify; otherwise the
    simple choice is returned (choice 1 first), or the choice-1 multigraph
    when neither is simple.  Without ``e0``, factor edges are scanned in
    index order and the first simple result is returned, if any.
    """
    candidates = [e0] if e0 is not None else sorted(cert.factor)
    fallback = None
    for edge in candidates:
        if not qualifies_for_special_split(g, cert, edge):
            continue
        try:
            results = [e0_split(g, edge, c) for c in (1, 2)]
        except SplitError:
            continue
        for res in results:
            if res.is_simple:
                return res
        if fallback is None:
            fallback = results[0]
    return fallback if e0 is not None else None


@dataclass(frozen=True)
class GlueResult:
    graph: Graph
    e0: tuple[Label, Label]
    choice: Choice  # the split choice at e0 that restores the glued edges


def glue(
    g: Graph, e1: int, e2: int, new_labels: tuple[Label, Label] = ("x", "y")
) -> GlueResult:
    """Subdivide ``e1 = (p1, q1)`` and ``e2 = (p2, q2)`` and join the new vertices.

    The first new label is joined to ``p1`` and ``p2``, the second to
    ``q1`` and ``q2`` (endpoints in id order).  ``choice`` tells which split
    at the new edge gives ``g`` back.
    """
    if e1 == e2 or set(g.edges[e1]) & set(g.edges[e2]):
        raise GlueError("glued edges must be independent")
    return _glue(g, g.edges[e1], g.edges[e2], new_labels)


def glue_labels(g: Graph, e1: Iterable[Label], e2: Iterable[Label], **kw) -> GlueResult:
    """Like :func:`glue`, with each edge given as an ordered label pair ``(p, q)``."""
    (p1, q1), (p2, q2) = tuple(e1), tuple(e2)
    g.edge_by_labels(p1, q1), g.edge_by_labels(p2, q2)
    ends = [g.vid(p1), g.vid(q1), g.vid(p2), g.vid(q2)]
    if len(set(ends)) != 4:
        raise GlueError("glued edges must be independent")
    return _glue(g, tuple(ends[:2]), tuple(ends[2:]), kw.get("new_labels", ("x", "y")))


def _glue(
    g: Graph, e1: tuple[int, int], e2: tuple[int, int], new_labels: tuple[Label, Label]
) -> GlueResult:
    s, t = new_labels
    if s == t or g.has_label(s) or g.has_label(t):
        raise GlueError("new vertex labels must be fresh and distinct")
    (p1, q1), (p2, q2) = e1, e2
    lab = g.labels
    gone = {g.edge_id(p1, q1), g.edge_id(p2, q2)}
    pairs = [g.edge_labels(i) for i in range(g.m) if i not in gone]
    pairs += [(s, t), (s, lab[p1]), (s, lab[p2]), (t, lab[q1]), (t, lab[q2])]
    out = Graph.from_edges(pairs, vertices=lab + (s, t))
    e0 = out.edge_by_labels(s, t)
    want = {frozenset((lab[p1], lab[q1])), frozenset((lab[p2], lab[q2]))}
    for c in (1, 2):
        got = {frozenset((out.labels[u], out.labels[v])) for u, v in reconnection(out, e0, c)}
        if got == want:
            return GlueResult(out, out.edge_labels(e0), c)
    raise AssertionError("no split choice restores the glued edges")
