"""Named instances with their factors, printed orientations, cycles and verdicts.

Everything here is stored by vertex label exactly as it is usually written
down; ``expected`` holds the verdicts the test-suite recomputes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from evenorient.graph import Graph, Label, Orientation
from evenorient.matching import OneFactor, factor_from_labels

LabelPair = tuple[Label, Label]


@dataclass(frozen=True)
class NamedOrientation:
    factor: str
    target: str  # as claimed: "even", "odd", or "mixed" for one claimed to be neither
    arcs: tuple[LabelPair, ...]  # tail first


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    factor_pairs: dict[str, tuple[LabelPair, ...]]
    orientation_arcs: dict[str, NamedOrientation] = field(default_factory=dict)
    cycle_lists: dict[str, tuple[tuple[Label, ...], ...]] = field(default_factory=dict)
    skew_edges: tuple[LabelPair, LabelPair] | None = None
    expected: dict[str, Any] = field(default_factory=dict)

    def factor(self, name: str) -> OneFactor:
        return factor_from_labels(self.graph, self.factor_pairs[name])

    @property
    def factors(self) -> dict[str, OneFactor]:
        return {k: self.factor(k) for k in self.factor_pairs}

    def orientation(self, name: str) -> Orientation:
        return Orientation.from_arcs(self.graph, self.orientation_arcs[name].arcs)

    def cycles(self, factor: str) -> list[tuple[int, ...]]:
        """Listed cycles of ``factor`` as vertex-id sequences."""
        return [tuple(self.graph.vid(v) for v in c) for c in self.cycle_lists[factor]]

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "graph": self.graph.to_json_obj(),
            "factors": {k: [list(p) for p in v] for k, v in self.factor_pairs.items()},
            "orientations": {
                k: {"factor": o.factor, "target": o.target, "arcs": [list(a) for a in o.arcs]}
                for k, o in self.orientation_arcs.items()
            },
            "cycles": {k: [list(c) for c in v] for k, v in self.cycle_lists.items()},
            "expected": self.expected,
        }


def _ring(k: int) -> list[LabelPair]:
    return [(i, i % k + 1) for i in range(1, k + 1)]


def _wagner() -> CatalogEntry:
    g = Graph.from_edges(_ring(8) + [(1, 5), (2, 6), (3, 7), (4, 8)])
    return CatalogEntry(
        name="wagner",
        graph=g,
        factor_pairs={
            "F1": ((1, 5), (2, 6), (3, 7), (4, 8)),
            "F2": ((1, 2), (3, 4), (5, 6), (7, 8)),
        },
        orientation_arcs={
            "F1_even": NamedOrientation("F1", "even", (
                (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1),
                (2, 6), (5, 1), (3, 7), (4, 8))),
            "F1_odd": NamedOrientation("F1", "odd", (
                (2, 1), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1),
                (2, 6), (7, 3), (4, 8), (1, 5))),
            "F2_odd": NamedOrientation("F2", "odd", (
                (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (1, 8),
                (5, 1), (2, 6), (7, 3), (4, 8))),
        },
        cycle_lists={
            "F1": ((1, 2, 6, 5), (2, 3, 7, 6), (3, 4, 8, 7), (4, 5, 1, 8)),
            "F2": ((1, 2, 3, 4, 5, 6, 7, 8), (1, 2, 6, 5, 4, 3, 7, 8),
                   (1, 2, 3, 4, 8, 7, 6, 5), (3, 4, 8, 7), (1, 2, 6, 5)),
        },
        skew_edges=((1, 8), (4, 5)),
        expected={
            "perfect_matchings": 7,
            "even": {"F1": True, "F2": False},
            "odd": {"F1": True, "F2": True},
            "pfaffian": True,
            "bad": False,
            "in_w": True,
            # the F1_even arcs leave (1,2,6,5) odd; reversing (1,2) or (5,6) would repair it
            "F1_even_oddly_oriented": [0],
            "w_factor": {"F1": False, "F2": True},
            "brick": True,
        },
    )


def _petersen() -> CatalogEntry:
    g = Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 7), (7, 8), (8, 9),
                          (9, 10), (1, 6), (2, 9), (3, 7), (4, 10), (5, 8), (10, 6)])
    return CatalogEntry(
        name="petersen",
        graph=g,
        factor_pairs={"F0": ((1, 6), (2, 9), (3, 7), (4, 10), (5, 8))},
        orientation_arcs={
            "F0_even": NamedOrientation("F0", "even", (
                (1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 7), (7, 8), (8, 9), (9, 10),
                (1, 6), (2, 9), (3, 7), (4, 10), (5, 8), (10, 6))),
        },
        cycle_lists={
            "F0": ((1, 6, 10, 4, 5, 8, 9, 2), (1, 6, 7, 3, 2, 9, 8, 5),
                   (1, 6, 10, 4, 3, 7, 8, 5), (1, 6, 7, 3, 4, 10, 9, 2),
                   (5, 8, 7, 3, 2, 9, 10, 4)),
        },
        expected={
            "perfect_matchings": 6,
            "even": {"F0": True},
            "odd": {"F0": False},
            "even_all_factors": True,
            "pfaffian": False,
            "bad": True,
            "in_w": False,
            "w_factor": {"F0": False},
            "brick": True,
        },
    )


def _k33() -> CatalogEntry:
    g = Graph.from_edges([(a, b) for a in (1, 2, 3) for b in (4, 5, 6)])
    return CatalogEntry(
        name="k33",
        graph=g,
        factor_pairs={"F": ((1, 4), (2, 5), (3, 6))},
        cycle_lists={
            "F": ((1, 6, 3, 4), (1, 4, 2, 5), (2, 6, 3, 5),
                  (1, 6, 3, 5, 2, 4), (1, 4, 3, 6, 2, 5)),
        },
        expected={
            "perfect_matchings": 6,
            "even": {"F": True},
            "odd": {"F": False},
            "pfaffian": False,
            "bad": True,
            "in_w": False,
            "w_factor": {"F": False},
            "brick": False,
            "brace": True,
        },
    )


def _k4() -> CatalogEntry:
    g = Graph.from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    return CatalogEntry(
        name="k4",
        graph=g,
        factor_pairs={"F": ((1, 2), (3, 4))},
        cycle_lists={"F": ((1, 2, 3, 4), (1, 2, 4, 3))},
        expected={
            "perfect_matchings": 3,
            "even": {"F": True},
            "odd": {"F": True},
            "pfaffian": True,
            "bad": False,
            "in_w": False,
            "w_factor": {"F": False},
            "brick": True,
        },
    )


def _w_star() -> CatalogEntry:
    g = Graph.from_edges(_ring(8) + [(1, "x"), (2, "x"), (5, "y"), (6, "y"), ("x", "y"),
                                     (4, 8), (3, 7)])
    return CatalogEntry(
        name="w_star",
        graph=g,
        factor_pairs={"F*": ((2, 3), (4, 5), (6, 7), (8, 1), ("x", "y"))},
        orientation_arcs={
            "F*_listed": NamedOrientation("F*", "mixed", (
                ("x", "y"), ("y", 6), (6, 5), (5, 4), (4, 8), (8, 7), (7, 3), (3, 2),
                (2, 1), (1, "x"), ("y", 5), (4, 3), (6, 7), (8, 1), (2, "x"))),
        },
        cycle_lists={
            "F*": (("x", "y", 5, 4, 3, 2), ("x", "y", 5, 4, 8, 1),
                   (4, 5, 6, 7, 8, 1, 2, 3), (1, 8, 4, 5, 6, 7, 3, 2),
                   (2, 3, 7, 6, "y", "x"), ("x", "y", 6, 7, 8, 1)),
        },
        skew_edges=((5, 6), (1, 2)),
        expected={
            "perfect_matchings": 7,
            "even": {"F*": False},
            "odd": {"F*": False},
            "pfaffian": False,
            "bad": True,
            "in_w": True,
            "w_factor": {"F*": True},
            "brick": True,
            # the listed orientation is not even: the last cycle is odd
            "listed_oddly_oriented": [5],
            "split_e0": ("x", "y"),
            "split_pairs": ((1, 5), (2, 6)),
        },
    )


_BUILDERS = {
    "wagner": _wagner,
    "petersen": _petersen,
    "k33": _k33,
    "k4": _k4,
    "w_star": _w_star,
}

NAMES = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def entry(name: str) -> CatalogEntry:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; choose from {', '.join(NAMES)}") from None


def catalog() -> dict[str, CatalogEntry]:
    return {name: entry(name) for name in NAMES}
