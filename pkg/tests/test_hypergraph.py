import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from unituran.hypergraph import (
    HypergraphError,
    LinearKGraph,
    ThreeGraph,
    automorphisms,
    canonical_threegraph,
    construct_from_linear,
    monotone_edge_property,
    monotone_edge_property_naive,
    named_threegraph,
    nonisomorphic_threegraphs,
    random_maximal_linear,
    search_monotone_witness,
    shadow,
    single_edge_gadget,
)


def test_threegraph_validation():
    with pytest.raises(HypergraphError):
        ThreeGraph(3, frozenset({(0, 1, 1)}))
    with pytest.raises(HypergraphError):
        ThreeGraph(3, frozenset({(0, 1, 3)}))
    assert ThreeGraph(3, frozenset({(2, 0, 1)})).edges == {(0, 1, 2)}


def test_linear_rejection_names_both_edges():
    with pytest.raises(HypergraphError, match=r"\(0, 1, 2\).*\(0, 1, 3\)"):
        LinearKGraph(3, 4, frozenset({(0, 1, 2), (0, 1, 3)}))


def test_named_graphs():
    assert len(named_threegraph("complete", 5)) == 10
    assert named_threegraph("k4minus").edges == {(0, 1, 2), (0, 1, 3), (0, 2, 3)}
    f5 = named_threegraph("f5star")
    assert len(f5) == 5 and f5.n == 5
    assert named_threegraph("tight_cycle", 4).edges == named_threegraph("complete", 4).edges
    assert len(named_threegraph("tight_cycle", 7)) == 7
    with pytest.raises(HypergraphError):
        named_threegraph("tight_cycle", 3)


def test_shadow():
    assert shadow(named_threegraph("k4minus")) == set(itertools.combinations(range(4), 2))
    assert len(shadow(named_threegraph("tight_cycle", 5))) == 10


def test_gadgets():
    assert single_edge_gadget("F4").edges == {(0, 1, 2), (0, 2, 3)}
    assert single_edge_gadget("F7").edges == {(0, 1, 3), (1, 2, 3), (0, 2, 3), (3, 4, 5), (3, 4, 6), (3, 5, 6)}
    fh = single_edge_gadget("FH", 5)
    assert fh.edges == {(0, i, j) for i, j in itertools.combinations(range(1, 5), 2)}
    with pytest.raises(HypergraphError):
        single_edge_gadget("FH")


def test_construct_uses_sorted_edge_vertices():
    h = LinearKGraph(4, 7, frozenset({(6, 2, 4, 0), (0, 1, 3, 5)}))
    f = construct_from_linear(h, "F4")
    assert f.edges == {(0, 2, 4), (0, 4, 6), (0, 1, 3), (0, 3, 5)}


def test_single_edge_is_not_monotone():
    holds, sigma = monotone_edge_property(LinearKGraph(3, 3, frozenset({(0, 1, 2)})))
    assert not holds and sigma == (0, 2, 1)


def test_fano_plane_has_property():
    fano = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    h = LinearKGraph(3, 7, frozenset(fano))
    holds, _ = monotone_edge_property(h)
    assert holds == monotone_edge_property_naive(7, fano)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7), st.integers(0, 10_000))
def test_monotone_matches_naive(n, seed):
    h = random_maximal_linear(3, n, random.Random(seed))
    holds, sigma = monotone_edge_property(h)
    assert holds == monotone_edge_property_naive(n, h.edges)
    if not holds:
        vals = [[sigma[x] for x in e] for e in h.edges]
        assert all(v != sorted(v) and v != sorted(v, reverse=True) for v in vals)


def test_monotone_bound():
    with pytest.raises(HypergraphError):
        monotone_edge_property(LinearKGraph(3, 12, frozenset()))


def test_random_maximal_is_maximal():
    h = random_maximal_linear(3, 7, random.Random(1))
    covered = {p for e in h.edges for p in itertools.combinations(e, 2)}
    for t in itertools.combinations(range(7), 3):
        if t not in h.edges:
            assert set(itertools.combinations(t, 2)) & covered


def test_witness_search_returns_verified_or_none():
    h = search_monotone_witness(3, 9, budget=200_000, seed=0)
    if h is not None:
        assert monotone_edge_property_naive(h.n, h.edges)
    assert search_monotone_witness(4, 5, budget=10) is None


def test_nonisomorphic_counts():
    assert [sum(1 for _ in nonisomorphic_threegraphs(n)) for n in range(0, 5)] == [1, 1, 1, 2, 5]


def test_canonical_invariant():
    f = named_threegraph("f5star")
    assert canonical_threegraph(f) == canonical_threegraph(f.relabel([4, 3, 2, 1, 0]))


def test_automorphisms():
    assert len(automorphisms(named_threegraph("complete", 4))) == 24
    assert len(automorphisms(named_threegraph("tight_cycle", 5))) == 10
