"""F-alternating cycles and the orientation parity function on walks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from evenorient import kernels
from evenorient.graph import Graph, Orientation, WalkError, canonical_cycle, walk_edges
from evenorient.matching import check_one_factor, mate_array

DEFAULT_CYCLE_CAP = 10**6


class CycleCapError(RuntimeError):
    """More alternating cycles than the configured cap."""


@dataclass(frozen=True)
class AltCycle:
    """An F-alternating cycle in canonical vertex order.

    ``edges`` lists edge indices along ``vertices`` (closing edge last);
    ``mask`` is the same set as a bitset.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    f_edges: frozenset[int]
    mask: int

    def __len__(self) -> int:
        return len(self.vertices)

    def labels(self, g: Graph) -> list:
        return [g.labels[v] for v in self.vertices]


def make_alt_cycle(g: Graph, f: Iterable[int], vertices: Sequence[int]) -> AltCycle:
    """Build and validate an ``AltCycle`` from any rotation/direction of its vertices."""
    f = frozenset(f)
    canon = canonical_cycle(vertices)
    if len(set(canon)) != len(canon) or len(canon) < 4:
        raise WalkError("not a cycle")
    edges = tuple(walk_edges(g, canon, closed=True))
    in_f = [e in f for e in edges]
    if any(a == b for a, b in zip(in_f, in_f[1:] + in_f[:1])):
        raise WalkError("cycle does not alternate between factor and non-factor edges")
    mask = 0
    for e in edges:
        mask |= 1 << e
    return AltCycle(canon, edges, frozenset(e for e in edges if e in f), mask)


def enumerate_alternating_cycles(
    g: Graph, f: Iterable[int], cap: int = DEFAULT_CYCLE_CAP
) -> list[AltCycle]:
    """All F-alternating cycles of ``g``, deduplicated and sorted by canonical form."""
    f = check_one_factor(g, f)
    mate = mate_array(g, f)
    try:
        raw = kernels.alternating_cycles(g.adj_masks, mate, g.n, cap)
    except kernels.CapExceeded as exc:
        raise CycleCapError(str(exc)) from None
    seen: dict[tuple[int, ...], AltCycle] = {}
    for seq in raw:
        canon = canonical_cycle(seq)
        if canon not in seen:
            seen[canon] = make_alt_cycle(g, f, canon)
    return [seen[k] for k in sorted(seen)]


def omega(orient: Orientation, walk: Sequence[int], closed: bool = False) -> int:
    """Parity of the number of steps of ``walk`` taken from tail to head.

    ``walk`` is a vertex-id sequence; with ``closed=True`` the step from the
    last vertex back to the first is counted too.  For odd closed walks the
    value depends on the traversal direction, so pass the sequence exactly as
    intended.
    """
    g = orient.graph
    count = 0
    steps = len(walk) if closed else len(walk) - 1
    for i in range(steps):
        a, b = walk[i], walk[(i + 1) % len(walk)]
        try:
            e = g.edge_id(a, b)
        except KeyError:
            raise WalkError(f"({g.labels[a]!r}, {g.labels[b]!r}) is not an edge") from None
        if orient.arc(e) == (a, b):
            count += 1
    return count % 2


def cycle_parity(orient: Orientation, cycle: AltCycle) -> int:
    return omega(orient, cycle.vertices, closed=True)


def classify_cycles(
    orient: Orientation, f: Iterable[int], cycles: list[AltCycle] | None = None
) -> tuple[list[AltCycle], list[AltCycle]]:
    """Split the F-alternating cycles into ``(evenly, oddly)`` oriented ones."""
    if cycles is None:
        cycles = enumerate_alternating_cycles(orient.graph, f)
    even, odd = [], []
    for c in cycles:
        (odd if cycle_parity(orient, c) else even).append(c)
    return even, odd


def is_even_orientation(orient: Orientation, f: Iterable[int]) -> bool:
    return not classify_cycles(orient, f)[1]


def is_odd_orientation(orient: Orientation, f: Iterable[int]) -> bool:
    return not classify_cycles(orient, f)[0]
