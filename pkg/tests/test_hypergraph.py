"""Hypergraph core: links, degrees, codegrees, blow-ups, densities."""

from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np
import pytest

from daisy.constructions import noncollinear_hypergraph
from daisy.errors import DaisyError
from daisy.hypergraph import (DaisyPattern, Graph, Hypergraph,
                              complete_hypergraph, turan_graph_edges)


@pytest.fixture(scope="module")
def p2():
    return noncollinear_hypergraph(2)


def test_edge_validation():
    with pytest.raises(DaisyError):
        Hypergraph(4, 3, [(0, 1)])
    with pytest.raises(DaisyError):
        Hypergraph(4, 3, [(0, 1, 1)])
    with pytest.raises(DaisyError):
        Hypergraph(4, 3, [(0, 1, 4)])
    h = Hypergraph(4, 3, [(2, 1, 0), (0, 1, 2)])
    assert h.m == 1
    assert (0, 1, 2) in h and (0, 1, 3) not in h


def test_degrees_handshake_random():
    import random
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randrange(3, 9)
        r = rng.randrange(2, min(n, 4) + 1)
        edges = [e for e in combinations(range(n), r) if rng.random() < 0.4]
        h = Hypergraph(n, r, edges)
        assert int(h.degrees().sum()) == r * h.m


def test_degrees_examples(p2):
    assert set(p2.degrees().tolist()) == {12}
    assert Hypergraph(5, 3).degrees().tolist() == [0] * 5
    single = Hypergraph(5, 3, [(0, 1, 2)])
    assert single.degrees().tolist() == [1, 1, 1, 0, 0]


def test_link_graph_examples(p2):
    single = Hypergraph(3, 3, [(0, 1, 2)])
    link = single.link_graph((0,))
    assert sorted(link.edges()) == [(1, 2)]
    # every link of the plane construction is complete 3-partite with parts
    # of size 2: 12 edges, every non-base vertex of degree 4
    for v in range(p2.n):
        link = p2.link_graph((v,))
        assert link.m == 12
        degs = sorted(link.degree(u) for u in range(p2.n) if u != v)
        assert degs == [4] * 6
    # a set contained in no edge has an empty link
    h = Hypergraph(6, 4, [(0, 1, 2, 3)])
    assert h.link_graph((4, 5)).m == 0


def test_link_sum_identity(p2):
    # sum over vertices of link sizes is 3 |H|
    assert sum(p2.link_graph((v,)).m for v in range(p2.n)) == 3 * p2.m


def test_codegree_examples(p2):
    single = Hypergraph(5, 3, [(0, 1, 2)])
    assert single.codegree((0, 1)) == 1
    assert Hypergraph(5, 3).codegree((0, 1)) == 0
    # enumeration oracle on the plane construction: every pair has 4
    for pair in combinations(range(7), 2):
        count = sum(1 for e in p2.edges() if set(pair) <= set(e))
        assert p2.codegree(pair) == count == 4
    with pytest.raises(DaisyError):
        p2.codegree((0, 1, 2))


def test_codegree_equals_common_link_neighbors(p2):
    # codegree({u,v}) counts common completions, i.e. v's degree in L(u)
    for u, v in combinations(range(p2.n), 2):
        assert p2.codegree((u, v)) == p2.link_graph((u,)).degree(v)


def test_positive_min_codegree(p2):
    assert Hypergraph(5, 3).positive_min_codegree() is None
    assert Hypergraph(5, 3, [(0, 1, 2)]).positive_min_codegree() == 1
    assert p2.positive_min_codegree() == 4


def test_edge_density(p2):
    assert p2.edge_density() == Fraction(4, 5)
    assert complete_hypergraph(6, 3).edge_density() == 1
    with pytest.raises(DaisyError):
        Hypergraph(2, 3).edge_density()


def test_blow_up_counts_and_validation():
    single = Hypergraph(3, 3, [(0, 1, 2)])
    assert single.blow_up([2, 2, 2]).m == 8
    b = Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)])
    blown = b.blow_up([2, 1, 3, 1])
    assert blown.n == 7
    assert blown.m == 2 * 1 * 3 + 2 * 1 * 1
    with pytest.raises(DaisyError):
        b.blow_up([1, 1, 1])
    with pytest.raises(DaisyError):
        b.blow_up([1, 0, 1, 1])


def test_blow_up_contiguous_classes():
    h = Hypergraph(3, 3, [(0, 1, 2)])
    blown = h.blow_up([2, 3, 1])
    # class ranges: 0-1, 2-4, 5; every edge picks one per class
    assert sorted(blown.edges()) == [(a, b, 5) for a in (0, 1) for b in (2, 3, 4)]


def test_blow_up_unit_sizes_is_identity(p2):
    blown = p2.blow_up([1] * p2.n)
    assert blown == p2
    assert blown.canonical() == p2.canonical()


def test_membership_via_blow_up_symmetry(p2):
    blown = p2.blow_up([2] * 7)
    assert blown.m == p2.m * 8
    # blow-up of a positive-codegree pair keeps the dichotomy
    vals = blown.positive_codegree_values().tolist()
    assert vals == [8]


def _turan_edges_oracle(N, t):
    # maximize over all partitions of N labeled vertices into at most t parts
    best = 0
    def rec(sizes, left):
        nonlocal best
        if len(sizes) == t or left == 0:
            if left == 0:
                inside = sum(comb(s, 2) for s in sizes)
                best = max(best, comb(N, 2) - inside)
            return
        for s in range(1, left + 1):
            rec(sizes + [s], left - s)
    rec([], N)
    return best


@pytest.mark.parametrize("N,t,expect", [(7, 3, 16), (6, 3, 12), (5, 5, 10)])
def test_turan_graph_edges_examples(N, t, expect):
    assert turan_graph_edges(N, t) == expect


def test_turan_graph_edges_oracle():
    for N in range(1, 9):
        for t in range(1, 5):
            assert turan_graph_edges(N, t) == _turan_edges_oracle(N, t)
    with pytest.raises(DaisyError):
        turan_graph_edges(5, 0)


def test_daisy_pattern_shape():
    d = DaisyPattern(3, 4)
    assert d.vertex_count == 5 and d.edge_count == 6
    d2 = DaisyPattern(4, 3)
    assert d2.vertex_count == 5 and d2.edge_count == 3
    with pytest.raises(DaisyError):
        DaisyPattern(1, 3)
    with pytest.raises(DaisyError):
        DaisyPattern(3, 1)


def test_vertex_link_hypergraph():
    h = Hypergraph(6, 4, [(0, 1, 2, 3), (0, 1, 4, 5), (1, 2, 4, 5)])
    link0 = h.vertex_link(0)
    assert link0.r == 3
    assert sorted(link0.edges()) == [(1, 2, 3), (1, 4, 5)]


def test_graph_basics():
    g = Graph(5, [(0, 1), (1, 2), (0, 2)])
    assert g.m == 3
    assert g.has_edge(0, 1) and not g.has_edge(0, 3)
    assert g.degree(1) == 2 and g.degree(4) == 0
    assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 2)]
    assert g.nonisolated() == [0, 1, 2]
    assert g.edges_inside([0, 1, 2]) == 3
    assert g.edges_inside([0, 1]) == 1
    words = g.words()
    assert words.shape == (5, 1)
    assert int(words[0, 0]) == 0b110
    h = g.to_hypergraph()
    assert Graph.from_hypergraph(h).rows == g.rows


def test_relabel_roundtrip(p2):
    perm = [3, 0, 1, 2, 6, 5, 4]
    moved = p2.relabel(perm)
    inverse = [perm.index(i) for i in range(7)]
    assert moved.relabel(inverse) == p2
    with pytest.raises(DaisyError):
        p2.relabel([0, 0, 1, 2, 3, 4, 5])
