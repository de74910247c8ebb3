"""Exact Hyper-Zagreb indices of hypergraphs.

    >>> from hyperzagreb import build, hm1, hm2
    >>> h = build(3, [[0, 1], [0, 2], [1, 2], [0, 1, 2]])
    >>> hm1(h), hm2(h)
    (189, 972)
"""

from .core import (
    Bipartition,
    Hypergraph,
    build,
    degree,
    find_weak_bipartition,
    is_connected,
    is_hypertree,
    is_linear,
    is_weak_bipartite_with,
    pendents,
    uniformity,
)
from .families import closed_form, cross_check, generate, parse_family
from .indices import edge_contributions, hm1, hm2, indices
from .io import format_hg, parse_hg, parse_json, read_hypergraph

__all__ = [
    "Bipartition",
    "Hypergraph",
    "build",
    "closed_form",
    "cross_check",
    "degree",
    "edge_contributions",
    "find_weak_bipartition",
    "format_hg",
    "generate",
    "hm1",
    "hm2",
    "indices",
    "is_connected",
    "is_hypertree",
    "is_linear",
    "is_weak_bipartite_with",
    "parse_family",
    "parse_hg",
    "parse_json",
    "pendents",
    "read_hypergraph",
    "uniformity",
]
