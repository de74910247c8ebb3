"""Hypergraph representation, degrees and structural predicates.

Vertices are the dense integers ``0..n-1``. Edges are stored as ascending
tuples and the edge list is kept in canonical order (by size, then
lexicographically), so two hypergraphs are equal exactly when they have the
same ``n`` and the same edge set.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import (
    DuplicateEdge,
    EdgeTooSmall,
    EmptyVertexSet,
    HypergraphError,
    InvalidPartition,
    NoEdges,
    TooFewVertices,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


def edge_key(edge: Edge) -> tuple[int, Edge]:
    """Sort key giving the canonical edge order."""
    return (len(edge), edge)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members_of(mask: int) -> Edge:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _canonical_edge(raw: Iterable[int], n: int) -> Edge:
    members = [int(v) for v in raw]
    for v in members:
        if not 0 <= v < n:
            raise VertexOutOfRange(f"vertex {v} outside [0, {n})")
    edge = tuple(sorted(set(members)))
    if len(edge) < 2:
        raise EdgeTooSmall(f"edge {list(members)} has fewer than 2 distinct vertices")
    if len(edge) != len(members):
        raise HypergraphError(f"edge {list(members)} repeats a vertex")
    return edge


@dataclass(frozen=True)
class Hypergraph:
    """Finite labelled hypergraph on vertices ``0..n-1``.

    Construction validates and canonicalizes; an invalid input raises rather
    than being repaired. Instances are immutable and hashable.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise EmptyVertexSet("a hypergraph needs at least one vertex")
        canon = [_canonical_edge(e, self.n) for e in self.edges]
        canon.sort(key=edge_key)
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise DuplicateEdge(f"edge {list(a)} appears twice")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def sort_key(self) -> tuple:
        """Total order used to pick deterministic witnesses."""
        return (self.n, tuple(edge_key(e) for e in self.edges))

    def with_edge(self, edge: Iterable[int]) -> Hypergraph:
        return Hypergraph(self.n, self.edges + (tuple(edge),))

    def relabel(self, perm: Sequence[int]) -> Hypergraph:
        """Return the image under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise HypergraphError("relabelling must be a permutation of the vertices")
        return Hypergraph(self.n, tuple(tuple(perm[v] for v in e) for e in self.edges))


@dataclass(frozen=True)
class Bipartition:
    side1: frozenset[int]
    side2: frozenset[int]

    @classmethod
    def from_side(cls, n: int, side1: Iterable[int]) -> Bipartition:
        s1 = frozenset(side1)
        return cls(s1, frozenset(range(n)) - s1)

    def validate(self, n: int) -> None:
        if not self.side1 or not self.side2:
            raise InvalidPartition("both sides must be non-empty")
        if self.side1 & self.side2:
            raise InvalidPartition("sides overlap")
        if self.side1 | self.side2 != frozenset(range(n)):
            raise InvalidPartition(f"sides do not cover exactly [0, {n})")


def build(n: int, edge_lists: Iterable[Iterable[int]]) -> Hypergraph:
    return Hypergraph(n, tuple(tuple(e) for e in edge_lists))


def degree(h: Hypergraph, v: int) -> int:
    if not 0 <= v < h.n:
        raise VertexOutOfRange(f"vertex {v} outside [0, {h.n})")
    return h.degrees[v]


def connected_masks(n: int, masks: Iterable[int]) -> bool:
    """True iff the edges (as vertex bitmasks) connect all of ``0..n-1``."""
    if n == 1:
        return True
    full = (1 << n) - 1
    pending = list(masks)
    if not pending:
        return False
    reach = pending.pop()
    grew = True
    while grew and pending:
        grew = False
        rest = []
        for m in pending:
            if m & reach:
                reach |= m
                grew = True
            else:
                rest.append(m)
        pending = rest
    return reach == full


def is_connected(h: Hypergraph) -> bool:
    return connected_masks(h.n, h.edge_masks)


def hypertree_masks(n: int, masks: Sequence[int]) -> bool:
    """Connected, and dropping any single edge disconnects."""
    if not connected_masks(n, masks):
        return False
    for i in range(len(masks)):
        if connected_masks(n, masks[:i] + masks[i + 1:]):
            return False
    return True


def is_hypertree(h: Hypergraph) -> bool:
    return hypertree_masks(h.n, h.edge_masks)


def uniformity(h: Hypergraph) -> Optional[int]:
    if not h.edges:
        raise NoEdges("uniformity is undefined without edges")
    sizes = {len(e) for e in h.edges}
    return sizes.pop() if len(sizes) == 1 else None


def is_linear(h: Hypergraph) -> bool:
    masks = h.edge_masks
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if (a & b).bit_count() > 1:
                return False
    return True


def is_weak_bipartite_with(h: Hypergraph, b: Bipartition) -> bool:
    b.validate(h.n)
    s1, s2 = mask_of(b.side1), mask_of(b.side2)
    return all(m & s1 and m & s2 for m in h.edge_masks)


def find_weak_bipartition(h: Hypergraph) -> Optional[Bipartition]:
    """Search 2-colourings for one making every edge bichromatic.

    Candidate ``side1`` sets always contain vertex 0 and are tried in
    lexicographic order of their sorted member tuples, so the answer is the
    lexicographically smallest valid ``side1``.
    """
    if h.n < 2:
        raise TooFewVertices("a bipartition needs at least two vertices")
    full = h.full_mask
    masks = h.edge_masks

    def ok(side1: int) -> bool:
        side2 = full ^ side1
        return all(m & side1 and m & side2 for m in masks)

    # preorder DFS over ascending tuples starting at 0 == lexicographic order
    stack = [(1, 0)]
    while stack:
        side1, last = stack.pop()
        if side1 != full and ok(side1):
            return Bipartition.from_side(h.n, members_of(side1))
        for v in range(h.n - 1, last, -1):
            stack.append((side1 | (1 << v), v))
    return None


def pendents(h: Hypergraph) -> tuple[frozenset[int], tuple[Edge, ...]]:
    """Pendent vertices (degree 1) and pendent edges.

    An edge is pendent when exactly ``|e| - 1`` of its vertices are pendent,
    so a lone edge whose vertices are all pendent does not qualify.
    """
    deg = h.degrees
    verts = frozenset(v for v in range(h.n) if deg[v] == 1)
    edges = tuple(e for e in h.edges if sum(v in verts for v in e) == len(e) - 1)
    return verts, edges


def is_linear_hyperpath(h: Hypergraph) -> bool:
    """Hypertree whose edges form a chain with one shared vertex per link."""
    if h.m < 2 or not is_hypertree(h) or not is_linear(h):
        return False
    if max(h.degrees) > 2:
        return False
    masks = h.edge_masks
    adj = [sum(1 for j, b in enumerate(masks) if j != i and a & b) for i, a in enumerate(masks)]
    return all(c <= 2 for c in adj) and adj.count(1) == 2
