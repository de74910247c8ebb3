"""First and second Hyper-Zagreb indices.

HM1 sums, over edges, the square of the degree sum of the edge's vertices;
HM2 sums the square of the degree product. Both are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .core import Edge, Hypergraph


@dataclass(frozen=True)
class EdgeContribution:
    edge: Edge
    degree_sum: int
    degree_product: int


def edge_contributions(h: Hypergraph) -> list[EdgeContribution]:
    deg = h.degrees
    return [
        EdgeContribution(e, sum(deg[v] for v in e), prod(deg[v] for v in e))
        for e in h.edges
    ]


def hm1(h: Hypergraph) -> int:
    deg = h.degrees
    return sum(sum(deg[v] for v in e) ** 2 for e in h.edges)


def hm2(h: Hypergraph) -> int:
    deg = h.degrees
    return sum(prod(deg[v] for v in e) ** 2 for e in h.edges)


def indices(h: Hypergraph) -> tuple[int, int]:
    """``(hm1, hm2)`` in one pass over the edges."""
    total1 = total2 = 0
    for c in edge_contributions(h):
        total1 += c.degree_sum ** 2
        total2 += c.degree_product ** 2
    return total1, total2


def index_value(h: Hypergraph, index: str) -> int:
    if index == "hm1":
        return hm1(h)
    if index == "hm2":
        return hm2(h)
    raise ValueError(f"unknown index {index!r}; expected 'hm1' or 'hm2'")
