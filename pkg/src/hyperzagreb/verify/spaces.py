"""Search spaces of labelled hypergraphs and their exhaustive enumeration.

Two shapes of space exist:

* power-set spaces (``AllConnected``, ``UniformConnected``, ``WeakBipartite``)
  range over every subset of a fixed candidate edge list on ``n`` vertices and
  keep the connected ones;
* fixed-size spaces (``Hypertrees``, ``UniformHypertrees``) range over every
  ``m``-subset of the candidate edges for each admissible ``n`` and keep the
  hypertrees that leave no vertex isolated, so each object is counted once at
  the ``n`` equal to its support.

Candidate edges are listed in canonical edge order, which makes "bit ``j`` of
a subset mask" mean "the ``j``-th candidate" and lets the lexicographic order
of a subset's set-bit positions coincide with the hypergraph sort key.
"""

from __future__ import annotations

import re
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Union

from ..core import Edge, Hypergraph, connected_masks, edge_key, hypertree_masks, mask_of
from ..errors import InvalidSpaceParams, SpaceTooLarge, UnsupportedN

DEFAULT_CAP = 2**26
MAX_N = 64
# subset masks live in int64 arrays
MAX_POWERSET_CANDIDATES = 62


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidSpaceParams(msg)


@lru_cache(maxsize=None)
def subsets_at_least_two(n: int) -> tuple[Edge, ...]:
    edges = [c for i in range(2, n + 1) for c in combinations(range(n), i)]
    return tuple(sorted(edges, key=edge_key))


@lru_cache(maxsize=None)
def k_subsets(n: int, k: int) -> tuple[Edge, ...]:
    return tuple(combinations(range(n), k))


@dataclass(frozen=True)
class AllConnected:
    n: int

    def __post_init__(self):
        _need(self.n >= 2, f"AllConnected needs n >= 2, got {self.n}")

    def text(self) -> str:
        return f"connected:n={self.n}"

    def candidates(self) -> tuple[Edge, ...]:
        return subsets_at_least_two(self.n)


@dataclass(frozen=True)
class UniformConnected:
    n: int
    k: int

    def __post_init__(self):
        _need(2 <= self.k <= self.n, f"UniformConnected needs 2 <= k <= n, got n={self.n}, k={self.k}")

    def text(self) -> str:
        return f"uniform:n={self.n},k={self.k}"

    def candidates(self) -> tuple[Edge, ...]:
        return k_subsets(self.n, self.k)


@dataclass(frozen=True)
class WeakBipartite:
    """Connected hypergraphs whose edges all cross the split ``{0..p-1}`` / rest."""

    p: int
    q: int

    def __post_init__(self):
        _need(self.p >= 1 and self.q >= 1, f"WeakBipartite needs p, q >= 1, got p={self.p}, q={self.q}")

    @property
    def n(self) -> int:
        return self.p + self.q

    def text(self) -> str:
        return f"bipartite:p={self.p},q={self.q}"

    def candidates(self) -> tuple[Edge, ...]:
        return tuple(e for e in subsets_at_least_two(self.n) if e[0] < self.p <= e[-1])


@dataclass(frozen=True)
class Hypertrees:
    """Hypertrees with exactly ``m`` edges on ``n_min <= n <= n_max`` vertices."""

    n_max: int
    m: int
    n_min: int = 2

    def __post_init__(self):
        _need(self.m >= 1, f"Hypertrees needs m >= 1, got {self.m}")
        _need(2 <= self.n_min <= self.n_max, f"Hypertrees needs 2 <= n_min <= n_max, got {self.n_min}..{self.n_max}")

    def text(self) -> str:
        if self.n_min == 2:
            return f"hypertrees:n={self.n_max},m={self.m}"
        return f"hypertrees:n={self.n_max},m={self.m},nmin={self.n_min}"

    def layers(self) -> list[tuple[int, tuple[Edge, ...]]]:
        return [(n, subsets_at_least_two(n)) for n in range(self.n_min, self.n_max + 1)]


@dataclass(frozen=True)
class UniformHypertrees:
    """k-uniform hypertrees with ``m`` edges, any feasible vertex count."""

    k: int
    m: int

    def __post_init__(self):
        _need(self.k >= 2 and self.m >= 1, f"UniformHypertrees needs k >= 2, m >= 1, got k={self.k}, m={self.m}")

    @property
    def n_max(self) -> int:
        return self.m * (self.k - 1) + 1

    def text(self) -> str:
        return f"uniform-hypertrees:k={self.k},m={self.m}"

    def layers(self) -> list[tuple[int, tuple[Edge, ...]]]:
        return [(n, k_subsets(n, self.k)) for n in range(self.k, self.n_max + 1)]


PowersetSpace = Union[AllConnected, UniformConnected, WeakBipartite]
ChooseSpace = Union[Hypertrees, UniformHypertrees]
SearchSpace = Union[PowersetSpace, ChooseSpace]


def is_powerset(space: SearchSpace) -> bool:
    return isinstance(space, (AllConnected, UniformConnected, WeakBipartite))


def space_n_max(space: SearchSpace) -> int:
    return space.n if is_powerset(space) else space.n_max


def space_size(space: SearchSpace) -> int:
    """Number of candidate edge subsets the enumeration walks."""
    if is_powerset(space):
        return 2 ** len(space.candidates())
    return sum(comb(len(cands), space.m) for _, cands in space.layers())


def check_space(space: SearchSpace, cap: int = DEFAULT_CAP, override: bool = False) -> int:
    """Apply the size guard; return the space size."""
    if space_n_max(space) > MAX_N:
        raise UnsupportedN(f"{space.text()}: enumeration supports n <= {MAX_N}")
    size = space_size(space)
    if is_powerset(space) and len(space.candidates()) > MAX_POWERSET_CANDIDATES:
        raise SpaceTooLarge(f"{space.text()}: {len(space.candidates())} candidate edges cannot be enumerated")
    if size > cap and not override:
        raise SpaceTooLarge(
            f"{space.text()}: {size} candidate subsets exceeds the cap of {cap}; pass an override to proceed"
        )
    return size


def _masks_of_size(width: int, r: int) -> Iterator[int]:
    """All ``width``-bit integers with ``r`` set bits, in increasing order."""
    if r == 0:
        yield 0
        return
    if r > width:
        return
    x = (1 << r) - 1
    limit = 1 << width
    while x < limit:
        yield x
        # Gosper's hack: next integer with the same popcount
        low = x & -x
        ripple = x + low
        x = (((ripple ^ x) >> 2) // low) | ripple


def _selected(cands: tuple[Edge, ...], mask: int) -> list[Edge]:
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(cands[j])
        mask >>= 1
        j += 1
    return out


def enumerate_space(space: SearchSpace, cap: int = DEFAULT_CAP, override: bool = False) -> Iterator[Hypergraph]:
    """Yield every hypergraph of the space exactly once.

    Order: by vertex count (fixed-size spaces only), then by number of edges,
    then by increasing subset bitmask over the candidate list.
    """
    check_space(space, cap, override)
    if is_powerset(space):
        n = space.n
        cands = space.candidates()
        cmasks = [mask_of(e) for e in cands]
        for r in range(len(cands) + 1):
            for sub in _masks_of_size(len(cands), r):
                chosen = [cmasks[j] for j in range(len(cands)) if sub >> j & 1]
                if connected_masks(n, chosen):
                    yield Hypergraph(n, tuple(_selected(cands, sub)))
        return
    for n, cands in space.layers():
        full = (1 << n) - 1
        cmasks = [mask_of(e) for e in cands]
        for sub in _masks_of_size(len(cands), space.m):
            chosen = [cmasks[j] for j in range(len(cands)) if sub >> j & 1]
            union = 0
            for c in chosen:
                union |= c
            if union == full and hypertree_masks(n, chosen):
                yield Hypergraph(n, tuple(_selected(cands, sub)))


_SPACE_KINDS = {
    "connected": (AllConnected, {"n": "n"}),
    "uniform": (UniformConnected, {"n": "n", "k": "k"}),
    "bipartite": (WeakBipartite, {"p": "p", "q": "q"}),
    "hypertrees": (Hypertrees, {"n": "n_max", "m": "m", "nmin": "n_min"}),
    "uniform-hypertrees": (UniformHypertrees, {"k": "k", "m": "m"}),
}


def parse_space(text: str) -> SearchSpace:
    """Parse e.g. ``connected:n=4`` or ``uniform-hypertrees:k=3,m=3``."""
    kind, sep, rest = text.strip().partition(":")
    if not sep or kind not in _SPACE_KINDS:
        raise InvalidSpaceParams(f"unknown space {text!r}; kinds: {', '.join(_SPACE_KINDS)}")
    cls, keys = _SPACE_KINDS[kind]
    params = {}
    for item in filter(None, rest.split(",")):
        mt = re.fullmatch(r"\s*(\w+)\s*=\s*(-?\d+)\s*", item)
        if not mt or mt.group(1) not in keys:
            raise InvalidSpaceParams(f"bad parameter {item!r} for space kind {kind!r}")
        params[keys[mt.group(1)]] = int(mt.group(2))
    try:
        return cls(**params)
    except TypeError:
        raise InvalidSpaceParams(f"space {kind!r} takes parameters {', '.join(keys)}") from None
