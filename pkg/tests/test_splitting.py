import random
from functools import lru_cache

import pytest

import oracles
from evenorient import catalog
from evenorient.graph import Graph, are_isomorphic
from evenorient.matching import factor_from_labels, is_one_extendible
from evenorient.solver import orientation_exists
from evenorient.splitting import (
    GlueError,
    SplitError,
    e0_split,
    glue,
    glue_labels,
    qualifies_for_special_split,
    reconnection,
    special_e0_split,
    split_sites,
)
from evenorient.structure import enumerate_tight_cuts
from evenorient.wagner import wagner_membership, w_factor_certificate
from strategies import random_cubic, random_cubic_one_extendable

WAGNER = catalog.entry("wagner").graph
W_STAR = catalog.entry("w_star").graph
PRISM = Graph.from_edges([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)])
RANDOM = random_cubic_one_extendable(50, sizes=(6, 8, 10, 12), seed=23)


@lru_cache(maxsize=None)
def cubic_members(count=6, seed=2):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_cubic(rng.choice([10, 12]), rng)
        if g is None or not is_one_extendible(g)[0]:
            continue
        cert = wagner_membership(g)
        if cert is not None:
            out.append((g, cert))
    return tuple(out)


def test_w_star_splits_to_wagner():
    e0 = W_STAR.edge_by_labels("x", "y")
    res = e0_split(W_STAR, e0, 1)
    assert res.is_simple and set(map(frozenset, res.added)) == {frozenset((1, 5)), frozenset((2, 6))}
    assert are_isomorphic(res.graph, WAGNER) and oracles.isomorphic(res.graph, WAGNER)
    # the other reconnection is simple too and happens to give Wagner as well
    other = e0_split(W_STAR, e0, 2)
    assert set(map(frozenset, other.added)) == {frozenset((1, 6)), frozenset((2, 5))}
    assert other.is_simple and are_isomorphic(other.graph, WAGNER)


def test_special_split_of_w_star():
    cert = w_factor_certificate(W_STAR, factor_from_labels(W_STAR, catalog.entry("w_star").factor_pairs["F*"]))
    e0 = W_STAR.edge_by_labels("x", "y")
    assert qualifies_for_special_split(W_STAR, cert, e0)
    res = special_e0_split(W_STAR, cert, e0)
    assert res.choice == 1 and res.is_simple and are_isomorphic(res.graph, WAGNER)


def test_special_split_needs_a_qualifying_edge():
    cert = wagner_membership(W_STAR)
    # (3, 7) is not a factor edge
    assert special_e0_split(W_STAR, cert, W_STAR.edge_by_labels(3, 7)) is None


def test_factor_maps_to_a_factor_of_the_split():
    pairs = catalog.entry("w_star").factor_pairs["F*"]
    res = e0_split(W_STAR, W_STAR.edge_by_labels("x", "y"), 1)
    rest = [p for p in pairs if set(p) != {"x", "y"}]
    f = factor_from_labels(res.graph, rest)
    assert not orientation_exists(res.graph, f, "even")
    assert not orientation_exists(W_STAR, factor_from_labels(W_STAR, pairs), "even")


def test_wagner_glues_to_w_star():
    res = glue_labels(WAGNER, (1, 5), (2, 6))
    assert are_isomorphic(res.graph, W_STAR)
    back = e0_split(res.graph, res.graph.edge_by_labels(*res.e0), res.choice)
    assert back.graph == WAGNER


def test_multi_edge_flag():
    # in the prism, splitting a rung reconnects two triangles and repeats an edge
    res = e0_split(PRISM, PRISM.edge_by_labels(1, 4), 1)
    assert not res.is_simple and res.graph.multi_ok
    assert res.graph.n == 4


def test_split_preconditions():
    k4 = Graph.from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    with pytest.raises(SplitError):
        split_sites(k4, 0)
    with pytest.raises(SplitError):
        split_sites(W_STAR, W_STAR.edge_by_labels(1, 2))  # both ends see x
    with pytest.raises(SplitError):
        reconnection(WAGNER, WAGNER.edge_by_labels(1, 5), 3)


def test_glue_preconditions():
    with pytest.raises(GlueError):
        glue_labels(WAGNER, (1, 2), (2, 3))
    with pytest.raises(GlueError):
        glue_labels(WAGNER, (1, 2), (5, 6), new_labels=(3, "y"))
    with pytest.raises(GlueError):
        glue(WAGNER, 0, 0)


def _round_trips(g):
    checked = 0
    for e0 in range(g.m):
        try:
            split_sites(g, e0)
        except SplitError:
            continue
        for choice in (1, 2):
            res = e0_split(g, e0, choice)
            if not res.is_simple:
                continue
            h = res.graph
            back = glue_labels(h, *res.added, new_labels=("s", "t"))
            a, b = g.edge_labels(e0)
            assert back.graph.relabel({"s": b, "t": a}) == g
            again = e0_split(back.graph, back.graph.edge_by_labels(*back.e0), back.choice)
            assert again.graph == h
            checked += 1
    for i in range(g.m):
        for j in range(i + 1, g.m):
            if set(g.edges[i]) & set(g.edges[j]):
                continue
            glued = glue(g, i, j, new_labels=("s", "t"))
            undone = e0_split(glued.graph, glued.graph.edge_by_labels("s", "t"), glued.choice)
            assert undone.graph == g
            checked += 1
    return checked


@pytest.mark.parametrize("name", ["wagner", "w_star", "petersen", "k33"])
def test_round_trips_on_catalog(name):
    assert _round_trips(catalog.entry(name).graph) > 0


def test_round_trips_on_random_cubic():
    assert len(RANDOM) == 50
    assert all(g.n <= 12 for g in RANDOM)
    for g in RANDOM:
        assert _round_trips(g) > 0


@pytest.mark.parametrize("name", ["wagner", "petersen", "k33"])
def test_glue_keeps_one_extendability_on_catalog(name):
    g = catalog.entry(name).graph
    for i in range(g.m):
        for j in range(i + 1, g.m):
            if not set(g.edges[i]) & set(g.edges[j]):
                assert is_one_extendible(glue(g, i, j).graph)[0]


def _small_tight_cuts(g, f):
    return [r for r in enumerate_tight_cuts(g, with_shores=False)
            if not r.trivial and len(r.cut.edges) == 3 and len(set(r.cut.edges) & f) == 1]


def test_simple_special_split_exists_without_small_tight_cuts():
    cases = [(WAGNER, wagner_membership(WAGNER)), (W_STAR, wagner_membership(W_STAR))]
    cases += list(cubic_members())
    hits = 0
    for g, cert in cases:
        if _small_tight_cuts(g, cert.factor):
            continue
        res = special_e0_split(g, cert)
        assert res is not None and res.is_simple
        assert qualifies_for_special_split(g, cert, g.edge_by_labels(*res.e0))
        hits += 1
    assert hits >= 3
