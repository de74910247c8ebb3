import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperzagreb.core import Hypergraph, build, is_connected
from hyperzagreb.families import Complete, UniformHyperpath
from hyperzagreb.indices import EdgeContribution, edge_contributions, hm1, hm2, index_value, indices

from .conftest import hypergraphs, random_hypergraph

CHAIN = build(7, [[0, 1, 2], [2, 3, 4], [4, 5, 6]])


def test_single_edge_contribution():
    assert edge_contributions(build(3, [[0, 1, 2]])) == [EdgeContribution((0, 1, 2), 3, 1)]


def test_chain_contributions():
    got = [(c.degree_sum, c.degree_product) for c in edge_contributions(CHAIN)]
    assert got == [(4, 2), (5, 4), (4, 2)]


def test_k3_edge_contribution():
    c = edge_contributions(Complete(3).generate())[0]
    assert c.edge == (0, 1) and (c.degree_sum, c.degree_product) == (6, 9)


@pytest.mark.parametrize("n", [2, 3, 5, 9])
def test_single_edge_values(n):
    h = build(n, [list(range(n))])
    assert hm1(h) == n * n and hm2(h) == 1


def test_known_values():
    assert indices(Complete(3).generate()) == (189, 972)
    assert indices(UniformHyperpath(3, 3).generate()) == (57, 24)
    assert index_value(CHAIN, "hm1") == 57 and index_value(CHAIN, "hm2") == 24
    with pytest.raises(ValueError):
        index_value(CHAIN, "hm3")


def test_edgeless_is_zero():
    assert indices(Hypergraph(5)) == (0, 0)


def test_big_values_are_exact():
    # degree 2^9 - 1 = 511 everywhere; the full edge alone contributes 511^20
    h = Complete(10).generate()
    assert hm2(h) == (1 + 511**2) ** 10 - 1 - 10 * 511**2
    assert hm2(h) > 10**54


def _graph_oracle(h):
    g = nx.Graph()
    g.add_nodes_from(range(h.n))
    g.add_edges_from(h.edges)
    d = dict(g.degree())
    return (
        sum((d[u] + d[v]) ** 2 for u, v in g.edges()),
        sum((d[u] * d[v]) ** 2 for u, v in g.edges()),
    )


def test_two_uniform_reduction_all_connected_small_graphs():
    checked = 0
    for n in range(2, 5):
        pairs = list(combinations(range(n), 2))
        for r in range(1, len(pairs) + 1):
            for es in combinations(pairs, r):
                h = Hypergraph(n, es)
                if is_connected(h):
                    assert indices(h) == _graph_oracle(h)
                    checked += 1
    assert checked == 1 + 4 + 38


def test_two_uniform_reduction_random_graphs():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(2, 12)
        h = random_hypergraph(rng, n, max_edges=20, max_size=2)
        assert indices(h) == _graph_oracle(h)


@settings(max_examples=100)
@given(hypergraphs(max_n=10), st.randoms(use_true_random=False))
def test_permutation_invariance(h, rnd):
    perm = list(range(h.n))
    rnd.shuffle(perm)
    assert indices(h.relabel(perm)) == indices(h)


@settings(max_examples=200)
@given(hypergraphs(max_n=7, max_edges=8), st.data())
def test_strict_monotonicity(h, data):
    pool = [c for k in range(2, h.n + 1) for c in combinations(range(h.n), k) if c not in h.edges]
    if not pool:
        return
    e = data.draw(st.sampled_from(pool))
    g = h.with_edge(e)
    assert hm1(g) > hm1(h) and hm2(g) > hm2(h)


@given(hypergraphs())
def test_lower_bounds_per_edge(h):
    assert hm2(h) >= h.m
    assert hm1(h) >= sum(len(e) ** 2 for e in h.edges)


def test_general_lower_bounds_exhaustive_small_n():
    for n in range(2, 5):
        cands = [c for k in range(2, n + 1) for c in combinations(range(n), k)]
        for mask in range(1, 1 << len(cands)):
            h = Hypergraph(n, tuple(c for i, c in enumerate(cands) if mask >> i & 1))
            if is_connected(h):
                assert hm1(h) >= n * n and hm2(h) >= 1
