import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from hyperzagreb.core import Hypergraph

ACCEPTANCE_LINES: list[str] = []


def random_hypergraph(rng: random.Random, n: int, max_edges: int = 8, max_size: int | None = None) -> Hypergraph:
    max_size = min(n, max_size or n)
    edges = set()
    for _ in range(rng.randint(0, max_edges)):
        size = rng.randint(2, max_size)
        edges.add(tuple(sorted(rng.sample(range(n), size))))
    return Hypergraph(n, tuple(edges))


@st.composite
def hypergraphs(draw, min_n=2, max_n=8, max_edges=10):
    n = draw(st.integers(min_n, max_n))
    pool = [c for k in range(2, n + 1) for c in combinations(range(n), k)]
    chosen = draw(st.sets(st.sampled_from(pool), max_size=max_edges))
    return Hypergraph(n, tuple(chosen))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def nx_connected(n: int, edges) -> bool:
    """Connectivity through the vertex/edge incidence graph."""
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(("v", v) for v in range(n))
    for i, e in enumerate(edges):
        g.add_edges_from((("e", i), ("v", v)) for v in e)
    return nx.is_connected(g)


def nx_hypertree(n: int, edges) -> bool:
    edges = list(edges)
    return nx_connected(n, edges) and all(
        not nx_connected(n, edges[:i] + edges[i + 1:]) for i in range(len(edges))
    )


def naive_space(space):
    """Brute-force membership list for a search space, built without the package's predicates."""
    from hyperzagreb.verify.spaces import AllConnected, Hypertrees, UniformConnected, UniformHypertrees, WeakBipartite

    out = []
    if isinstance(space, (AllConnected, UniformConnected, WeakBipartite)):
        n = space.n
        if isinstance(space, AllConnected):
            cands = [c for k in range(2, n + 1) for c in combinations(range(n), k)]
        elif isinstance(space, UniformConnected):
            cands = list(combinations(range(n), space.k))
        else:
            cands = [c for k in range(2, n + 1) for c in combinations(range(n), k) if min(c) < space.p <= max(c)]
        for r in range(len(cands) + 1):
            for es in combinations(cands, r):
                if nx_connected(n, es):
                    out.append(Hypergraph(n, es))
        return out
    if isinstance(space, Hypertrees):
        ns, sizes = range(space.n_min, space.n_max + 1), None
    else:
        ns, sizes = range(space.k, space.n_max + 1), space.k
    for n in ns:
        ks = [sizes] if sizes else range(2, n + 1)
        cands = [c for k in ks for c in combinations(range(n), k)]
        for es in combinations(cands, space.m):
            if nx_hypertree(n, es):
                out.append(Hypergraph(n, es))
    return out
