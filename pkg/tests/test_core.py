from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperzagreb.core import (
    Bipartition,
    Hypergraph,
    build,
    degree,
    find_weak_bipartition,
    is_connected,
    is_hypertree,
    is_linear,
    is_linear_hyperpath,
    is_weak_bipartite_with,
    members_of,
    pendents,
    uniformity,
)
from hyperzagreb.errors import (
    DuplicateEdge,
    EdgeTooSmall,
    EmptyVertexSet,
    InvalidPartition,
    NoEdges,
    TooFewVertices,
    VertexOutOfRange,
)
from hyperzagreb.families import Complete, Sunflower

from .conftest import hypergraphs

K3 = build(3, [[0, 1], [0, 2], [1, 2], [0, 1, 2]])
CHAIN = build(7, [[0, 1, 2], [2, 3, 4], [4, 5, 6]])
TRIANGLE = build(3, [[0, 1], [1, 2], [0, 2]])


def test_build_single_edge():
    h = build(3, [[0, 1, 2]])
    assert h.m == 1 and h.edges == ((0, 1, 2),)


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (3, [[0, 1], [0, 1]], DuplicateEdge),
        (3, [[0, 1], [1, 0]], DuplicateEdge),
        (2, [[0, 2]], VertexOutOfRange),
        (2, [[-1, 0]], VertexOutOfRange),
        (3, [[1]], EdgeTooSmall),
        (3, [[1, 1]], EdgeTooSmall),
        (0, [], EmptyVertexSet),
    ],
)
def test_build_rejects(n, edges, exc):
    with pytest.raises(exc):
        build(n, edges)


def test_canonical_order_and_equality():
    a = build(4, [[3, 2, 1], [1, 0]])
    b = build(4, [[0, 1], [1, 2, 3]])
    assert a == b and hash(a) == hash(b)
    assert a.edges == ((0, 1), (1, 2, 3))
    assert K3.edges == ((0, 1), (0, 2), (1, 2), (0, 1, 2))


def test_degree_examples():
    assert degree(build(3, [[0, 1, 2]]), 0) == 1
    assert all(degree(K3, v) == 3 for v in range(3))
    assert degree(CHAIN, 2) == 2
    with pytest.raises(VertexOutOfRange):
        degree(K3, 3)


def test_isolated_vertex_degree_zero():
    assert degree(build(3, [[0, 1]]), 2) == 0


def test_connectivity_examples():
    assert is_connected(CHAIN)
    assert not is_connected(build(4, [[0, 1], [2, 3]]))
    assert not is_connected(build(3, [[0, 1]]))
    assert is_connected(Hypergraph(1))
    assert not is_connected(Hypergraph(2))


def test_uniformity_examples():
    assert uniformity(K3) is None
    assert uniformity(build(5, [[0, 1, 2], [2, 3, 4]])) == 3
    assert uniformity(build(2, [[0, 1]])) == 2
    with pytest.raises(NoEdges):
        uniformity(Hypergraph(3))


def test_linearity_examples():
    assert is_linear(build(5, [[0, 1, 2], [2, 3, 4]]))
    assert not is_linear(build(4, [[0, 1, 2], [0, 1, 3]]))
    assert is_linear(Hypergraph(4))


def test_weak_bipartite_with():
    e01 = build(2, [[0, 1]])
    assert is_weak_bipartite_with(e01, Bipartition.from_side(2, [0]))
    h = build(3, [[0, 1]])
    assert not is_weak_bipartite_with(h, Bipartition.from_side(3, [0, 1]))


@pytest.mark.parametrize(
    "side1, side2",
    [((0,), ()), ((0, 1), (1, 2)), ((0,), (1,))],
)
def test_invalid_partition(side1, side2):
    with pytest.raises(InvalidPartition):
        is_weak_bipartite_with(build(3, [[0, 1]]), Bipartition(frozenset(side1), frozenset(side2)))


def test_find_weak_bipartition_examples():
    b = find_weak_bipartition(build(3, [[0, 1, 2]]))
    assert b is not None and b.side1 == {0}
    assert find_weak_bipartition(build(2, [[0, 1]])) == Bipartition.from_side(2, [0])
    assert find_weak_bipartition(TRIANGLE) is None
    with pytest.raises(TooFewVertices):
        find_weak_bipartition(Hypergraph(1))


def _all_bipartitions(n):
    """Every split with vertex 0 on side 1, as sorted side-1 tuples."""
    for r in range(0, n - 1):
        for rest in combinations(range(1, n), r):
            yield (0,) + rest


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_n=9))
def test_find_weak_bipartition_matches_exhaustive_oracle(h):
    valid = [s for s in _all_bipartitions(h.n) if is_weak_bipartite_with(h, Bipartition.from_side(h.n, s))]
    got = find_weak_bipartition(h)
    if not valid:
        assert got is None
    else:
        assert got is not None
        assert tuple(sorted(got.side1)) == min(valid)


def test_bipartition_count_formula():
    for n in range(2, 13):
        assert sum(1 for _ in _all_bipartitions(n)) == 2 ** (n - 1) - 1


def test_hypertree_examples():
    assert is_hypertree(build(3, [[0, 1, 2]]))
    assert not is_hypertree(TRIANGLE)
    assert is_hypertree(Sunflower(3, 2, 3).generate())
    assert not is_hypertree(build(4, [[0, 1], [2, 3]]))


def test_berge_cycle_with_private_vertices_is_hypertree():
    # every edge owns a degree-1 vertex, so each removal isolates it
    h = build(6, [[0, 1, 2], [2, 3, 4], [4, 5, 0]])
    assert is_hypertree(h)
    assert not is_linear_hyperpath(h)


def test_pendent_examples():
    verts, edges = pendents(build(3, [[0, 1, 2]]))
    assert verts == {0, 1, 2} and edges == ()
    verts, edges = pendents(build(5, [[0, 1, 2], [0, 3, 4]]))
    assert verts == {1, 2, 3, 4} and len(edges) == 2
    verts, edges = pendents(build(3, [[0, 1], [1, 2]]))
    assert verts == {0, 2} and len(edges) == 2


def test_linear_hyperpath_predicate():
    assert is_linear_hyperpath(CHAIN)
    assert not is_linear_hyperpath(Sunflower(3, 1, 3).generate())
    assert not is_linear_hyperpath(build(3, [[0, 1, 2]]))


@given(hypergraphs())
def test_handshake_identity(h):
    assert sum(h.degrees) == sum(len(e) for e in h.edges)
    assert all(d <= h.m for d in h.degrees)


@given(hypergraphs(), st.randoms(use_true_random=False))
def test_relabelling_preserves_structure(h, rnd):
    perm = list(range(h.n))
    rnd.shuffle(perm)
    g = h.relabel(perm)
    assert is_connected(g) == is_connected(h)
    assert is_linear(g) == is_linear(h)
    assert is_hypertree(g) == is_hypertree(h)
    assert sorted(g.degrees) == sorted(h.degrees)
    if h.m:
        assert uniformity(g) == uniformity(h)


@pytest.mark.parametrize("n", range(2, 9))
def test_complete_hypergraph_degrees(n):
    assert set(Complete(n).generate().degrees) == {2 ** (n - 1) - 1}


def test_members_of_roundtrip():
    assert members_of(0b10110) == (1, 2, 4)
