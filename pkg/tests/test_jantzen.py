import pytest
from hypothesis import given, settings, strategies as st

from conftest import P, partitions
from oracles import brute_partners, components, prefix_dominates, valuation
from qschur_blocks import (ArithmeticParams, JantzenGraph, e_core, jantzen_graph, jantzen_nonzero,
                           jantzen_partners, jantzen_partners_by_columns, linkage_classes, nu_ep,
                           partitions_of)
from qschur_blocks.jantzen import UnionFind, edge_path

PARAMS = [(2, 0), (3, 0), (2, 3), (3, 2), (4, 0), (5, 2)]


@pytest.mark.parametrize("h, e, p, expected", [(5, 3, 0, 0), (24, 3, 2, 4), (6, 3, 0, 1), (6, 3, 2, 2)])
def test_nu_ep(h, e, p, expected):
    assert nu_ep(h, ArithmeticParams(e, p)) == expected == valuation(h, e, p)


def test_nu_ep_rejects_zero():
    with pytest.raises(ValueError):
        nu_ep(0, ArithmeticParams(3, 0))


@pytest.mark.parametrize("lam, expected", [
    (P(3), {P(2, 1), P(1, 1, 1)}),
    (P(2, 1), {P(1, 1, 1)}),
    (P(4, 2), set()),
])
def test_partners_small(lam, expected):
    got = {edge.lower for edge in jantzen_partners(lam, ArithmeticParams(3, 0))}
    assert got == expected == brute_partners(lam, 3, 0)


@pytest.mark.parametrize("e, p", PARAMS)
def test_partners_match_brute_force(e, p):
    params = ArithmeticParams(e, p)
    for r in range(1, 8):
        for lam in partitions_of(r):
            got = {edge.lower for edge in jantzen_partners(lam, params)}
            assert got == brute_partners(lam, e, p), (lam, e, p)


@pytest.mark.parametrize("e, p", PARAMS[:4])
def test_rows_and_columns_agree(e, p):
    params = ArithmeticParams(e, p)
    for r in range(1, 10):
        by_rows = {(edge.upper, edge.lower, edge.magnitude)
                   for lam in partitions_of(r) for edge in jantzen_partners(lam, params)}
        by_cols = {(edge.upper, edge.lower, edge.magnitude)
                   for mu in partitions_of(r) for edge in jantzen_partners_by_columns(mu, params)}
        assert {x[:2] for x in by_rows} == {x[:2] for x in by_cols}


@settings(max_examples=60)
@given(partitions(10), st.sampled_from(PARAMS))
def test_edges_preserve_core_and_go_down(lam, ep):
    params = ArithmeticParams(*ep)
    for edge in jantzen_partners(lam, params):
        assert edge.upper == lam
        assert edge.lower != lam and prefix_dominates(lam, edge.lower)
        assert e_core(edge.lower, params.e) == e_core(lam, params.e)
        assert edge.magnitude >= 1
        assert edge.sign is None


def test_signs_requested():
    # (2,1): R_13 and the wrapped 1-hook are both flat; (1,1,1): wrapped 2-hook has leg 1
    edges = jantzen_partners(P(3), ArithmeticParams(3, 0), signs=True)
    assert {(e.lower, e.sign) for e in edges} == {(P(2, 1), 1), (P(1, 1, 1), -1)}


def test_jantzen_nonzero():
    params = ArithmeticParams(3, 0)
    assert jantzen_nonzero(P(3), P(1, 1, 1), params)
    assert not jantzen_nonzero(P(1, 1, 1), P(3), params)
    with pytest.raises(ValueError):
        jantzen_nonzero(P(3), P(2), params)


@pytest.mark.parametrize("e, p", PARAMS)
def test_linkage_matches_oracle_components(e, p):
    params = ArithmeticParams(e, p)
    for r in range(1, 8):
        verts = list(partitions_of(r))
        pairs = [(lam, mu) for lam in verts for mu in brute_partners(lam, e, p)]
        got = set(linkage_classes(jantzen_graph(verts, params)))
        assert got == components(verts, pairs)


def test_graph_is_deterministic_across_threads():
    verts = list(partitions_of(9))
    params = ArithmeticParams(2, 3)
    assert jantzen_graph(verts, params, threads=1) == jantzen_graph(verts, params, threads=4)


def test_graph_keeps_only_internal_edges():
    verts = [P(3), P(1, 1, 1)]
    graph = jantzen_graph(verts, ArithmeticParams(3, 0))
    assert [(edge.upper, edge.lower) for edge in graph.edges] == [(P(3), P(1, 1, 1))]


def test_union_find():
    uf = UnionFind(range(6))
    uf.union(0, 1)
    uf.union(2, 3)
    uf.union(1, 3)
    assert set(uf.groups()) == {frozenset({0, 1, 2, 3}), frozenset({4}), frozenset({5})}
    assert uf.find(0) == uf.find(2)


def test_edge_path():
    verts = list(partitions_of(3))
    graph = jantzen_graph(verts, ArithmeticParams(3, 0))
    path = edge_path(graph, P(2, 1), P(3))
    assert path[0] == P(2, 1) and path[-1] == P(3)
    assert edge_path(JantzenGraph(tuple(verts), ()), P(2, 1), P(3)) is None
