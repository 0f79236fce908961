import random

import pytest
from hypothesis import given, settings

import oracles
from evenorient import catalog
from evenorient.alternating import enumerate_alternating_cycles
from evenorient.graph import (
    Graph,
    are_isomorphic,
    find_isomorphism,
    is_bipartite,
    suppress_even_subdivision,
)
from evenorient.matching import factor_from_labels, is_one_extendible
from evenorient.solver import orientation_exists
from evenorient.wagner import (
    CertificateError,
    SearchCapError,
    SkewPreconditionError,
    are_skew,
    central_K4_subdivision,
    find_central_W_subgraph,
    is_f_central,
    reduce_to_subcubic,
    transfer_certificate,
    validate_certificate,
    w_factor_certificate,
    w_factors,
    wagner_membership,
)
from strategies import graphs_with_factor, random_cubic

WAGNER = catalog.entry("wagner").graph
W_STAR = catalog.entry("w_star").graph
F1 = [(1, 5), (2, 6), (3, 7), (4, 8)]
F2 = [(1, 2), (3, 4), (5, 6), (7, 8)]
K4 = Graph.from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


def _pairs(g, f):
    return sorted(g.edge_labels(i) for i in f)


def test_skew_on_wagner_cycles():
    c1 = (1, 2, 3, 4, 5, 6, 7, 8)
    c2 = (1, 2, 6, 5, 4, 3, 7, 8)
    w = are_skew(c1, c2, (1, 8), (4, 5))
    assert w is not None and w.side in (1, 2)
    # writing an edge the other way round does not change the answer
    assert are_skew(c1, c2, (8, 1), (4, 5)) is not None
    assert are_skew(c2, c1, (1, 8), (5, 4)) is not None
    assert are_skew(c1, c1, (1, 8), (4, 5)) is None


def test_skew_preconditions():
    with pytest.raises(SkewPreconditionError):
        are_skew((1, 2, 3, 4), (1, 2, 3, 4), (1, 2), (2, 3))
    with pytest.raises(SkewPreconditionError):
        are_skew((1, 2, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6), (1, 2), (4, 6))


def test_chord_factor_has_one_cycle_through_both_edges():
    f = factor_from_labels(WAGNER, F1)
    e, h = WAGNER.edge_by_labels(1, 8), WAGNER.edge_by_labels(4, 5)
    through = [c.labels(WAGNER) for c in enumerate_alternating_cycles(WAGNER, f)
               if e in c.edges and h in c.edges]
    assert through == [[1, 5, 4, 8]]


@pytest.mark.parametrize("name", ["wagner", "w_star"])
def test_membership_certificates_validate(name):
    g = catalog.entry(name).graph
    cert = wagner_membership(g)
    assert cert is not None
    validate_certificate(g, cert)
    obj = cert.to_json_obj(g)
    assert set(obj) == {"r", "factor", "bipartition", "c1", "c2", "skew_side"}


def test_w_star_certificate():
    cert = wagner_membership(W_STAR)
    expected = factor_from_labels(W_STAR, catalog.entry("w_star").factor_pairs["F*"])
    assert cert.factor == expected
    assert {frozenset(W_STAR.edge_labels(i)) for i in cert.r} == {frozenset((1, 2)), frozenset((5, 6))}


@pytest.mark.parametrize("name", ["k33", "k4", "petersen"])
def test_non_members(name):
    assert wagner_membership(catalog.entry(name).graph) is None


def test_wagner_factors():
    assert w_factor_certificate(WAGNER, factor_from_labels(WAGNER, F1)) is None
    cert = w_factor_certificate(WAGNER, factor_from_labels(WAGNER, F2))
    assert cert is not None
    assert {frozenset(WAGNER.edge_labels(i)) for i in cert.r} == {frozenset((1, 8)), frozenset((4, 5))}
    found = [_pairs(WAGNER, f) for f in w_factors(WAGNER)]
    assert sorted(F2) in found and sorted(F1) not in found
    w_star_f = factor_from_labels(W_STAR, catalog.entry("w_star").factor_pairs["F*"])
    assert w_factor_certificate(W_STAR, w_star_f) is not None


@settings(max_examples=40)
@given(graphs_with_factor(max_vertices=8, max_edges=12))
def test_bipartite_graphs_have_no_w_factors(case):
    g, _ = case
    if is_bipartite(g):
        assert w_factors(g) == []


@settings(max_examples=40)
@given(graphs_with_factor(max_vertices=8, max_edges=12))
def test_membership_matches_definition(case):
    g, factor = case
    assert (wagner_membership(g) is not None) == oracles.in_w(g)
    f = factor_from_labels(g, factor)
    assert (w_factor_certificate(g, f) is not None) == oracles.in_w(g, factor)


@pytest.mark.parametrize("name", catalog.NAMES)
def test_membership_matches_definition_on_catalog(name):
    e = catalog.entry(name)
    assert (wagner_membership(e.graph) is not None) == oracles.in_w(e.graph) == e.expected["in_w"]
    for fname, pairs in e.factor_pairs.items():
        got = w_factor_certificate(e.graph, e.factor(fname)) is not None
        assert got == oracles.in_w(e.graph, pairs)
        if "w_factor" in e.expected:
            assert got == e.expected["w_factor"][fname]


def test_cubic_members_up_to_eight_vertices_are_wagner():
    rng = random.Random(3)
    seen = []
    for _ in range(300):
        g = random_cubic(rng.choice([4, 6, 8]), rng)
        if g is not None and not any(are_isomorphic(g, h) for h in seen):
            seen.append(g)
    # all eight connected cubic graphs of order at most eight
    assert len(seen) == 8
    members = [g for g in seen if wagner_membership(g) is not None]
    assert len(members) == 1 and are_isomorphic(members[0], WAGNER)


def _subdivide(g, edge, factor):
    a, b = edge
    edges = [g.edge_labels(i) for i in range(g.m) if set(g.edge_labels(i)) != {a, b}]
    edges += [(a, "s"), ("s", "t"), ("t", b)]
    if tuple(sorted(edge)) in {tuple(sorted(p)) for p in factor}:
        new_factor = [p for p in factor if set(p) != {a, b}] + [(a, "s"), ("t", b)]
    else:
        new_factor = list(factor) + [("s", "t")]
    return Graph.from_edges(edges), new_factor


@pytest.mark.parametrize("edge", [WAGNER.edge_labels(i) for i in range(WAGNER.m)])
def test_odd_subdivision_keeps_membership(edge):
    h, factor = _subdivide(WAGNER, edge, F2)
    cert = w_factor_certificate(h, factor_from_labels(h, factor))
    assert cert is not None
    validate_certificate(h, cert)


@pytest.mark.parametrize("name, fname", [("wagner", "F2"), ("w_star", "F*")])
def test_cubic_members_lack_even_orientation_for_found_factor(name, fname):
    e = catalog.entry(name)
    cert = w_factor_certificate(e.graph, e.factor(fname))
    assert cert is not None
    assert not orientation_exists(e.graph, cert.factor, "even")


def test_catalog_instances_without_even_orientation_contain_central_members():
    hits = 0
    for name in catalog.NAMES:
        e = catalog.entry(name)
        if not is_one_extendible(e.graph)[0]:
            continue
        for fname in e.factor_pairs:
            f = e.factor(fname)
            if orientation_exists(e.graph, f, "even"):
                continue
            found = find_central_W_subgraph(e.graph, f)
            assert found is not None
            h, cert = found
            validate_certificate(h, cert)
            assert is_f_central(e.graph, f, h)
            hits += 1
    assert hits == 2


WAGNER_PLUS_SQUARE = Graph.from_edges(
    [(i, i % 8 + 1) for i in range(1, 9)]
    + [(1, 5), (2, 6), (3, 7), (4, 8), (1, 9), (9, 10), (10, 3), (9, 5), (10, 7)])
PLUS_SQUARE_FACTOR = F2 + [(9, 10)]


def test_central_member_found_inside_larger_graph():
    g = WAGNER_PLUS_SQUARE
    f = factor_from_labels(g, PLUS_SQUARE_FACTOR)
    assert w_factor_certificate(g, f) is None
    assert not orientation_exists(g, f, "even")
    h, cert = find_central_W_subgraph(g, f)
    assert is_f_central(g, f, h) and are_isomorphic(h, WAGNER)
    validate_certificate(h, cert)


def test_central_search_can_come_up_empty():
    # six vertices are too few for the class, yet this factor admits no even orientation
    g = Graph.from_edges([(1, 2), (1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5),
                          (3, 6), (4, 5)])
    f = factor_from_labels(g, [(1, 2), (3, 6), (4, 5)])
    assert is_one_extendible(g)[0]
    assert oracles.orientation_search(g, [(1, 2), (3, 6), (4, 5)], "even") is None
    assert find_central_W_subgraph(g, f) is None


def test_search_cap():
    f = factor_from_labels(WAGNER_PLUS_SQUARE, PLUS_SQUARE_FACTOR)
    with pytest.raises(SearchCapError):
        find_central_W_subgraph(WAGNER_PLUS_SQUARE, f, cap=0)


def test_reduction_is_identity_on_cubic_members():
    for g in (WAGNER, W_STAR):
        red = reduce_to_subcubic(g, wagner_membership(g))
        assert red.graph == g and red.steps == ()


def test_reduction_lowers_degree_one_step_at_a_time():
    g = Graph.from_edges([(i, i % 8 + 1) for i in range(1, 9)]
                         + [(1, 5), (2, 6), (3, 7), (4, 8), (1, 7)])
    assert is_one_extendible(g)[0]
    cert = wagner_membership(g)
    red = reduce_to_subcubic(g, cert)
    assert red.graph.max_degree() <= 3
    for step in red.steps:
        assert step.degree_after == step.degree_before - 1
    validate_certificate(red.graph, red.certificate)


def test_reduction_rejects_broken_certificates():
    cert = wagner_membership(WAGNER)
    with pytest.raises(CertificateError):
        reduce_to_subcubic(W_STAR, cert)


def test_transfer_needs_the_cycles():
    cert = wagner_membership(WAGNER)
    smaller = WAGNER.delete_edges([WAGNER.edge_by_labels(1, 2)])
    with pytest.raises(CertificateError):
        transfer_certificate(WAGNER, smaller, cert)


@pytest.mark.parametrize("name", ["wagner", "w_star"])
def test_central_k4_subdivision(name):
    g = catalog.entry(name).graph
    cert = wagner_membership(g)
    sub = central_K4_subdivision(g, cert)
    assert sub is not None
    sup = suppress_even_subdivision(sub.graph)
    assert sup.parity_ok and find_isomorphism(sup.base, K4) is not None
    assert is_f_central(g, cert.factor, sub.graph)
    assert len(sub.branch_vertices) == 4 and sub.cycle


def test_k4_itself_is_not_a_member():
    assert wagner_membership(K4) is None
