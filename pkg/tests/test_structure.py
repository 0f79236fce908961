import random

import pytest
from hypothesis import assume, given, settings

import oracles
from evenorient import catalog
from evenorient.graph import Graph
from evenorient.matching import enumerate_perfect_matchings, factor_from_labels, is_one_extendible
from evenorient.structure import (
    PreconditionError,
    SizeLimitError,
    barrier_and_2separation_cuts,
    enumerate_tight_cuts,
    f_reducible_ear_decomposition,
    is_brace,
    is_brick,
    is_brick_by_definition,
    is_tight,
    make_cut,
    nontrivial_tight_cuts,
    same_pieces,
    shores,
    tight_cut_decomposition,
    two_separations,
    validate_ear_decomposition,
)
from strategies import graphs_with_factor, random_cubic_one_extendable

C6 = Graph.from_edges([(i, i % 6 + 1) for i in range(1, 7)])
C4 = Graph.from_edges([(i, i % 4 + 1) for i in range(1, 5)])
# two K4s joined by a perfect matching on one triangle each: a 1-extendable graph with tight cuts
PRISM_CHAIN = Graph.from_edges([(1, 2), (2, 3), (1, 3), (1, 4), (2, 4), (3, 4),
                                (5, 6), (6, 7), (5, 7), (5, 8), (6, 8), (7, 8),
                                (4, 8), (1, 5), (2, 6), (3, 7)])
RANDOM_CUBIC = random_cubic_one_extendable(12, sizes=(6, 8, 10), seed=11)


def _catalog_factor_cases():
    for name in catalog.NAMES:
        e = catalog.entry(name)
        for fname in e.factor_pairs:
            yield pytest.param(e.graph, e.factor(fname), id=f"{name}-{fname}")


@pytest.mark.parametrize("g, f", list(_catalog_factor_cases()))
def test_catalog_ear_decompositions(g, f):
    dec = f_reducible_ear_decomposition(g, f)
    validate_ear_decomposition(dec, f)
    assert dec.graphs()[-1].m == g.m
    assert all(1 <= len(s.ears) <= 2 for s in dec.stages[1:])


@settings(max_examples=40)
@given(graphs_with_factor(max_vertices=8, max_edges=13))
def test_ear_decomposition_property(case):
    g, factor = case
    assume(is_one_extendible(g)[0])
    f = factor_from_labels(g, factor)
    dec = f_reducible_ear_decomposition(g, f)
    validate_ear_decomposition(dec, f)
    assert all(len(s.ears) <= 2 for s in dec.stages)


def test_ear_decomposition_preconditions():
    path = Graph.from_edges([(1, 2), (2, 3), (3, 4)])
    with pytest.raises(PreconditionError):
        f_reducible_ear_decomposition(path, factor_from_labels(path, [(1, 2), (3, 4)]))


def _label_sides(g, cuts):
    out = set()
    for cut in cuts:
        xs = frozenset(g.labels[v] for v in cut.side)
        out.add(frozenset({xs, frozenset(g.labels) - xs}))
    return out


@settings(max_examples=50)
@given(graphs_with_factor(max_vertices=8, max_edges=13))
def test_tight_cuts_match_definition(case):
    g, _ = case
    assert _label_sides(g, nontrivial_tight_cuts(g)) == oracles.tight_cut_sides(g)


def test_tight_cut_report_fields():
    reports = enumerate_tight_cuts(C6)
    assert len(reports) == 2 ** 5 - 1
    tight = [r for r in reports if r.tight and not r.trivial]
    assert [r.cut.side for r in tight] == [(0, 1, 2), (0, 1, 5), (0, 4, 5)]
    assert all(r.shores is not None for r in tight)
    assert is_tight(C6, [0, 1, 2]) and not is_tight(C6, [0, 2, 4])


def test_cut_side_normalization():
    assert make_cut(C6, [1, 2, 3, 4, 5]).side == (0,)
    assert make_cut(C6, [3, 4, 5]).side == (0, 1, 2)
    with pytest.raises(Exception):
        make_cut(C6, [])


def test_size_limit():
    with pytest.raises(SizeLimitError):
        nontrivial_tight_cuts(C6, exhaustive_limit=4)


def _shore_factor(g, shore, side, pm):
    xs = {g.labels[v] for v in side}
    merged = next(lab for lab in shore.labels if str(lab).startswith("{") and lab not in g.labels)
    pairs = set()
    for e in pm:
        a, b = (merged if lab in xs else lab for lab in g.edge_labels(e))
        if a != b:
            pairs.add((a, b))
    return pairs


@pytest.mark.parametrize("g", [C6, PRISM_CHAIN] + RANDOM_CUBIC[:6], ids=lambda g: f"n{g.n}m{g.m}")
def test_every_factor_induces_factors_on_both_shores(g):
    pms = enumerate_perfect_matchings(g)
    for cut in nontrivial_tight_cuts(g):
        other = [v for v in range(g.n) if v not in cut.side]
        for side, shore in zip((cut.side, other), shores(g, cut.side)):
            for pm in pms:
                # raises GraphError if the image is not a 1-factor of the shore
                factor_from_labels(shore, _shore_factor(g, shore, side, pm))


@pytest.mark.parametrize("name", catalog.NAMES)
def test_brick_tests_agree_on_catalog(name):
    e = catalog.entry(name)
    assert is_brick(e.graph) == is_brick_by_definition(e.graph) == e.expected["brick"]


@pytest.mark.parametrize("g", RANDOM_CUBIC, ids=lambda g: f"n{g.n}m{g.m}")
def test_brick_tests_agree_on_random_cubic(g):
    assert is_brick(g) == is_brick_by_definition(g)


def test_braces():
    assert is_brace(catalog.entry("k33").graph) and is_brace(C4)
    assert not is_brace(C6) and not is_brace(catalog.entry("wagner").graph)


def test_c6_decomposes_into_two_squares():
    pieces = tight_cut_decomposition(C6)
    assert len(pieces) == 2
    assert all(oracles.isomorphic(p, C4) for p in pieces)
    for seed in range(10):
        assert same_pieces(tight_cut_decomposition(C6, random.Random(seed)), pieces)


@pytest.mark.parametrize("g", [PRISM_CHAIN] + RANDOM_CUBIC, ids=lambda g: f"n{g.n}m{g.m}")
def test_decomposition_independent_of_cut_order(g):
    base = tight_cut_decomposition(g)
    for p in base:
        assert is_brick(p.simple()) or is_brace(p.simple())
    for seed in range(5):
        assert same_pieces(tight_cut_decomposition(g, random.Random(seed)), base)


def test_decomposition_needs_one_extendable():
    path = Graph.from_edges([(1, 2), (2, 3), (3, 4)])
    with pytest.raises(PreconditionError):
        tight_cut_decomposition(path)


@pytest.mark.parametrize("g", [C6, PRISM_CHAIN] + RANDOM_CUBIC, ids=lambda g: f"n{g.n}m{g.m}")
def test_tight_cuts_come_with_barrier_or_2separation_cuts(g):
    if nontrivial_tight_cuts(g):
        assert barrier_and_2separation_cuts(g)


@settings(max_examples=40)
@given(graphs_with_factor(max_vertices=8, max_edges=13))
def test_tight_cuts_come_with_barrier_or_2separation_cuts_property(case):
    g, _ = case
    assume(is_one_extendible(g)[0])
    if nontrivial_tight_cuts(g):
        assert barrier_and_2separation_cuts(g)


@pytest.mark.parametrize("name", ["wagner", "k33", "petersen"])
def test_no_barrier_or_2separation_cuts_for_tight_cut_free(name):
    assert barrier_and_2separation_cuts(catalog.entry(name).graph) == []


def test_c6_cut_tags():
    cuts = barrier_and_2separation_cuts(C6)
    assert {c.tag for c in cuts} <= {"barrier", "2-separation"}
    assert any(c.tag == "2-separation" for c in cuts)
    assert all(len(c.cut.side) % 2 == 1 for c in cuts)
    assert ((0, 3), [[1, 2], [4, 5]]) in [(p, sorted(map(sorted, cs))) for p, cs in two_separations(C6)]
