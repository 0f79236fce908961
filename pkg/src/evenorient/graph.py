"""Graph representation and the basic utilities every other module builds on.

Vertices are dense integers ``0..n-1``; the caller's labels are kept in
``Graph.labels`` and only used for parsing and output.  Edges are stored in a
canonical sorted order so that edge indices (and therefore bitsets over
edges) are reproducible.
"""

from __future__ import annotations

import json
import re
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Any, Hashable, Iterable, NamedTuple, Sequence

Label = Hashable
Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for malformed graph input."""


class ParseError(GraphError):
    pass


class LoopError(GraphError):
    pass


class MultiEdgeError(GraphError):
    pass


class WalkError(GraphError):
    """A vertex sequence that does not follow edges of the graph."""


class BipartiteError(GraphError):
    pass


_INT_RE = re.compile(r"^[+-]?\d+$")


def label_key(label: Label) -> tuple:
    # ints sort numerically and before everything else; the rest by str()
    if isinstance(label, int) and not isinstance(label, bool):
        return (0, label, "")
    return (1, 0, str(label))


def _coerce_label(token: str) -> Label:
    return int(token) if _INT_RE.match(token) else token


@dataclass(frozen=True)
class Graph:
    """A finite undirected graph on vertices ``0..n-1``.

    Use :meth:`from_edges` rather than the constructor; it normalizes labels
    and edge order.  ``multi_ok`` marks the (rare) multigraph produced by
    edge splitting.
    """

    labels: tuple[Label, ...]
    edges: tuple[Edge, ...]
    multi_ok: bool = False

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise GraphError("duplicate vertex label")
        prev = None
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise LoopError(f"self-loop at {self.labels[u]!r}")
            if u > v:
                raise GraphError("edges must be stored as (low, high)")
            if prev is not None:
                if (u, v) < prev:
                    raise GraphError("edges must be sorted")
                if (u, v) == prev and not self.multi_ok:
                    raise MultiEdgeError(
                        f"repeated edge ({self.labels[u]!r}, {self.labels[v]!r})")
            prev = (u, v)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        pairs: Iterable[tuple[Label, Label]],
        vertices: Iterable[Label] = (),
        multi_ok: bool = False,
    ) -> "Graph":
        pairs = [tuple(p) for p in pairs]
        seen = dict.fromkeys(vertices)
        for p in pairs:
            if len(p) != 2:
                raise ParseError(f"edge must have two endpoints, got {p!r}")
            a, b = p
            if a == b:
                raise LoopError(f"self-loop at {a!r}")
            seen.setdefault(a)
            seen.setdefault(b)
        labels = tuple(sorted(seen, key=label_key))
        index = {lab: i for i, lab in enumerate(labels)}
        edges = []
        for a, b in pairs:
            u, v = index[a], index[b]
            edges.append((u, v) if u < v else (v, u))
        edges.sort()
        if not multi_ok:
            for e1, e2 in zip(edges, edges[1:]):
                if e1 == e2:
                    raise MultiEdgeError(
                        f"repeated edge ({labels[e1[0]]!r}, {labels[e1[1]]!r})")
        return cls(labels, tuple(edges), multi_ok)

    # -- basic accessors ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _label_index(self) -> dict[Label, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def _edge_index(self) -> dict[Edge, int]:
        index: dict[Edge, int] = {}
        for i, e in enumerate(self.edges):
            index.setdefault(e, i)
        return index

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in a) for a in self.adjacency)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident with each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def has_label(self, label: Label) -> bool:
        return label in self._label_index

    def vid(self, label: Label) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise GraphError(f"unknown vertex {label!r}") from None

    def edge_id(self, u: int, v: int) -> int:
        """Index of edge ``(u, v)`` given vertex ids; ``KeyError`` if absent."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def edge_by_labels(self, a: Label, b: Label) -> int:
        try:
            return self.edge_id(self.vid(a), self.vid(b))
        except KeyError:
            raise GraphError(f"no edge ({a!r}, {b!r})") from None

    def edge_labels(self, i: int) -> tuple[Label, Label]:
        u, v = self.edges[i]
        return self.labels[u], self.labels[v]

    def edge_mask(self, idxs: Iterable[int]) -> int:
        mask = 0
        for i in idxs:
            mask |= 1 << i
        return mask

    # -- derived graphs -----------------------------------------------------

    def edge_subgraph(self, idxs: Iterable[int], keep_vertices: Iterable[int] = ()) -> "Graph":
        """Subgraph formed by the given edges (plus ``keep_vertices``), labels kept."""
        idxs = sorted(set(idxs))
        verts = set(keep_vertices)
        for i in idxs:
            verts.update(self.edges[i])
        return Graph.from_edges(
            [self.edge_labels(i) for i in idxs],
            vertices=[self.labels[v] for v in sorted(verts)],
            multi_ok=self.multi_ok,
        )

    def delete_edges(self, idxs: Iterable[int]) -> "Graph":
        drop = set(idxs)
        return Graph.from_edges(
            [self.edge_labels(i) for i in range(self.m) if i not in drop],
            vertices=self.labels,
            multi_ok=self.multi_ok,
        )

    def delete_vertices(self, vs: Iterable[int]) -> "Graph":
        drop = set(vs)
        return Graph.from_edges(
            [self.edge_labels(i) for i, (u, v) in enumerate(self.edges)
             if u not in drop and v not in drop],
            vertices=[lab for i, lab in enumerate(self.labels) if i not in drop],
            multi_ok=self.multi_ok,
        )

    def induced(self, vs: Iterable[int]) -> "Graph":
        keep = set(vs)
        return self.delete_vertices(v for v in range(self.n) if v not in keep)

    def contract(self, vs: Iterable[int], label: Label | None = None) -> "Graph":
        """Identify ``vs`` into one vertex; loops and parallel edges are deleted."""
        group = set(vs)
        if not group:
            raise GraphError("cannot contract an empty vertex set")
        if label is None:
            label = "{" + ",".join(str(self.labels[v]) for v in sorted(group)) + "}"
        if label in self._label_index and self._label_index[label] not in group:
            raise GraphError(f"label {label!r} already in use")

        def name(v: int) -> Label:
            return label if v in group else self.labels[v]

        pairs = set()
        for u, v in self.edges:
            a, b = name(u), name(v)
            if a == b:
                continue
            pairs.add((a, b) if label_key(a) <= label_key(b) else (b, a))
        verts = [label] + [self.labels[v] for v in range(self.n) if v not in group]
        return Graph.from_edges(sorted(pairs, key=lambda p: (label_key(p[0]), label_key(p[1]))),
                                vertices=verts)

    def relabel(self, mapping: dict[Label, Label]) -> "Graph":
        return Graph.from_edges(
            [(mapping.get(a, a), mapping.get(b, b)) for a, b in map(self.edge_labels, range(self.m))],
            vertices=[mapping.get(lab, lab) for lab in self.labels],
            multi_ok=self.multi_ok,
        )

    def simple(self) -> "Graph":
        """Underlying simple graph."""
        if not self.multi_ok:
            return self
        keep = sorted(set(self.edges))
        return Graph(self.labels, tuple(keep), False)

    # -- connectivity -------------------------------------------------------

    def components(self, removed: Iterable[int] = (), removed_edges: Iterable[int] = ()) -> list[list[int]]:
        """Connected components (sorted vertex lists) after deleting vertices/edges."""
        gone = set(removed)
        skip = set(removed_edges)
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            if i in skip or u in gone or v in gone:
                continue
            adj[u].append(v)
            adj[v].append(u)
        seen = set(gone)
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "vertices": list(self.labels),
            "edges": [list(self.edge_labels(i)) for i in range(self.m)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def to_edge_list(self) -> str:
        lines = [f"{a} {b}" for a, b in map(self.edge_labels, range(self.m))]
        isolated = [self.labels[v] for v in range(self.n) if not self.incidence[v]]
        if isolated:
            # isolated vertices cannot be written in edge-list form
            raise GraphError("edge-list output cannot carry isolated vertices")
        return "\n".join(lines) + ("\n" if lines else "")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}{', multi' if self.multi_ok else ''})"


def parse_graph(text: str, multi_ok: bool = False) -> Graph:
    """Parse an edge list (``a b`` per line, ``#`` comments) or a JSON document."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(doc, dict) or "edges" not in doc:
            raise ParseError("JSON graph needs an 'edges' array")
        edges = doc["edges"]
        verts = doc.get("vertices", [])
        if not isinstance(edges, list) or not isinstance(verts, list):
            raise ParseError("'edges' and 'vertices' must be arrays")
        pairs = []
        for e in edges:
            if not isinstance(e, list) or len(e) != 2:
                raise ParseError(f"bad edge {e!r}")
            pairs.append(tuple(_json_label(x) for x in e))
        return Graph.from_edges(pairs, vertices=[_json_label(x) for x in verts], multi_ok=multi_ok)

    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected two vertex labels, got {line!r}")
        pairs.append((_coerce_label(tokens[0]), _coerce_label(tokens[1])))
    return Graph.from_edges(pairs, multi_ok=multi_ok)


def _json_label(x: Any) -> Label:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"vertex labels must be integers or strings, got {x!r}")
    return x


def parse_edge_pairs(text: str) -> list[tuple[Label, Label]]:
    """Parse ``"1 2,3 4"`` (commas or newlines between edges) into label pairs."""
    pairs = []
    for chunk in re.split(r"[,;\n]", text):
        chunk = chunk.strip()
        if not chunk:
            continue
        tokens = chunk.split()
        if len(tokens) != 2:
            raise ParseError(f"bad edge {chunk!r}")
        pairs.append((_coerce_label(tokens[0]), _coerce_label(tokens[1])))
    return pairs


# -- orientations -------------------------------------------------------------


@dataclass(frozen=True)
class Orientation:
    """Direction per edge: bit 0 means low id -> high id, bit 1 the reverse."""

    graph: Graph
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != self.graph.m:
            raise GraphError("orientation needs exactly one bit per edge")
        if any(b not in (0, 1) for b in self.bits):
            raise GraphError("orientation bits must be 0 or 1")

    @classmethod
    def reference(cls, graph: Graph) -> "Orientation":
        return cls(graph, (0,) * graph.m)

    @classmethod
    def from_flips(cls, graph: Graph, flips: int) -> "Orientation":
        return cls(graph, tuple((flips >> i) & 1 for i in range(graph.m)))

    @classmethod
    def from_arcs(cls, graph: Graph, arcs: Iterable[tuple[Label, Label]]) -> "Orientation":
        """Build from ``(tail, head)`` label pairs covering every edge once."""
        bits: list[int | None] = [None] * graph.m
        for tail, head in arcs:
            t, h = graph.vid(tail), graph.vid(head)
            i = graph.edge_by_labels(tail, head)
            if bits[i] is not None:
                raise GraphError(f"edge ({tail!r}, {head!r}) oriented twice")
            bits[i] = 0 if t < h else 1
        missing = [graph.edge_labels(i) for i, b in enumerate(bits) if b is None]
        if missing:
            raise GraphError(f"edges without a direction: {missing}")
        return cls(graph, tuple(bits))  # type: ignore[arg-type]

    def arc(self, i: int) -> tuple[int, int]:
        u, v = self.graph.edges[i]
        return (v, u) if self.bits[i] else (u, v)

    def arcs(self) -> list[tuple[Label, Label]]:
        labels = self.graph.labels
        return [(labels[t], labels[h]) for t, h in map(self.arc, range(self.graph.m))]

    def flip_mask(self) -> int:
        mask = 0
        for i, b in enumerate(self.bits):
            if b:
                mask |= 1 << i
        return mask

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, tuple(1 - b for b in self.bits))


# -- cycles -------------------------------------------------------------------


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation of the sequence or of its reversal."""
    k = len(seq)
    if k == 0:
        return ()
    best = None
    for s in (list(seq), list(reversed(seq))):
        for r in range(k):
            cand = tuple(s[r:] + s[:r])
            if best is None or cand < best:
                best = cand
    return best  # type: ignore[return-value]


def walk_edges(g: Graph, walk: Sequence[int], closed: bool) -> list[int]:
    """Edge indices traversed by a vertex sequence; raises ``WalkError``."""
    steps = len(walk) if closed else len(walk) - 1
    out = []
    for i in range(steps):
        a, b = walk[i], walk[(i + 1) % len(walk)]
        try:
            out.append(g.edge_id(a, b))
        except KeyError:
            raise WalkError(f"({g.labels[a]!r}, {g.labels[b]!r}) is not an edge") from None
    return out


# -- predicates ---------------------------------------------------------------


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff no set of fewer than ``k`` vertices disconnects ``g``.

    Exhaustive over vertex subsets; ``k`` must be in 1..4.
    """
    if k not in (1, 2, 3, 4):
        raise ValueError("k must be between 1 and 4")
    if g.n == 0:
        return False
    for size in range(k):
        for removed in combinations(range(g.n), size):
            if g.n - size >= 2 and len(g.components(removed)) > 1:
                return False
    return True


def is_bipartite_after_removing(
    g: Graph, removed: Iterable[int] = ()
) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-colouring of ``g`` minus the given edges, or ``None`` if impossible.

    In every component the class holding the least vertex id goes to ``X``.
    """
    skip = set(removed)
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        if i not in skip:
            adj[u].append(v)
            adj[v].append(u)
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
    xs = frozenset(v for v in range(g.n) if colour[v] == 0)
    return xs, frozenset(range(g.n)) - xs


def is_bipartite(g: Graph) -> bool:
    return is_bipartite_after_removing(g) is not None


class Suppression(NamedTuple):
    base: Graph
    parity_ok: bool
    path_map: dict[int, tuple[int, ...]]


def suppress_even_subdivision(g: Graph) -> Suppression:
    """Suppress every chain of degree-2 vertices into a single edge.

    ``path_map`` sends each base edge index to the path of ``g`` (vertex ids,
    starting at the lower-labelled base endpoint) that it replaces.
    ``parity_ok`` holds iff every such path has odd length, i.e. ``g`` is an
    even subdivision of ``base``.  A chain that would close into a loop keeps
    its first internal vertex, so the base may become a flagged multigraph.
    """
    if any(g.degree(v) < 2 for v in range(g.n)):
        raise GraphError("suppression needs minimum degree 2")
    branch = {v for v in range(g.n) if g.degree(v) != 2}
    while True:
        for comp in g.components():
            if not branch.intersection(comp):
                branch.add(comp[0])
        chains = _chains(g, branch)
        loops = [c for c in chains if c[0] == c[-1]]
        if not loops:
            break
        for c in loops:
            branch.add(c[1])

    def oriented(path: tuple[int, ...]) -> tuple[int, ...]:
        return path if label_key(g.labels[path[0]]) <= label_key(g.labels[path[-1]]) else path[::-1]

    chains = sorted((oriented(c) for c in chains),
                    key=lambda p: (label_key(g.labels[p[0]]), label_key(g.labels[p[-1]]), p))
    pairs = [(g.labels[c[0]], g.labels[c[-1]]) for c in chains]
    multi = len(set(pairs)) != len(pairs)
    base = Graph.from_edges(pairs, vertices=[g.labels[v] for v in sorted(branch)], multi_ok=multi)
    # from_edges sorts stably, and chains are already in base edge order
    path_map = {i: c for i, c in enumerate(chains)}
    parity_ok = all((len(c) - 1) % 2 == 1 for c in chains)
    return Suppression(base, parity_ok, path_map)


def _chains(g: Graph, branch: set[int]) -> list[tuple[int, ...]]:
    used: set[int] = set()
    chains = []
    for s in sorted(branch):
        for e in g.incidence[s]:
            if e in used:
                continue
            path = [s]
            cur, edge = s, e
            while True:
                used.add(edge)
                u, v = g.edges[edge]
                nxt = v if u == cur else u
                path.append(nxt)
                if nxt in branch:
                    break
                edge = next(x for x in g.incidence[nxt] if x != edge)
                cur = nxt
            chains.append(tuple(path))
    return chains


# -- isomorphism --------------------------------------------------------------


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """Vertex bijection ``g -> h`` preserving edge multiplicities, or ``None``.

    Plain backtracking with degree filtering; meant for graphs of a dozen
    vertices or so.
    """
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return None
    gmult = Counter(g.edges)
    hmult = Counter(h.edges)
    if sorted(gmult.values()) != sorted(hmult.values()):
        return None

    def mult(c: Counter, a: int, b: int) -> int:
        return c.get((a, b) if a < b else (b, a), 0)

    # visit g in BFS order so each new vertex has mapped neighbours to check
    order: list[int] = []
    seen: set[int] = set()
    for s in sorted(range(g.n), key=lambda v: -g.degree(v)):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(g.adjacency[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in range(h.n):
            if w in used or h.degree(w) != g.degree(v):
                continue
            if any(mult(gmult, v, x) != mult(hmult, w, mapping[x]) for x in mapping):
                continue
            mapping[v] = w
            used.add(w)
            if extend(pos + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
