"""Extremal hypergraph families and their closed-form index values.

Each family is a small frozen dataclass that validates its parameters,
builds a canonical labelled instance (``generate``) and evaluates every
published closed form for HM1/HM2 (``closed_form``). ``cross_check``
compares those formulas against the indices of the generated object, which
is the ground truth whenever formulas disagree with each other.

Vertex numbering is fixed so output files are stable:

* sunflowers put the seeds first (``0..p-1``) then the petal blocks in order;
* hyperpaths number vertices along the chain, edge ``i`` sharing its last
  vertex with the first vertex of edge ``i + 1``;
* complete weak bipartite hypergraphs use ``0..p-1`` as the first side.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Union

from .core import Bipartition, Hypergraph
from .errors import InvalidFamilyParams
from .indices import indices


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidFamilyParams(msg)


@dataclass(frozen=True)
class ClosedForm:
    hm1_variants: list[tuple[str, int]]
    hm2_variants: list[tuple[str, int]]


@dataclass(frozen=True)
class Complete:
    n: int

    def __post_init__(self):
        _need(self.n >= 2, f"complete hypergraph needs n >= 2, got {self.n}")

    def text(self) -> str:
        return f"complete:n={self.n}"

    def generate(self) -> Hypergraph:
        edges = [c for i in range(2, self.n + 1) for c in combinations(range(self.n), i)]
        return Hypergraph(self.n, tuple(edges))

    def closed_form(self) -> ClosedForm:
        n = self.n
        d = 2 ** (n - 1) - 1
        # 2**(n-2) * (n+1) written as (n+1) << (n-2) keeps n == 2 integral
        lemma1 = n * d**2 * (((n + 1) << (n - 2)) - 1)
        cor1 = n * ((n + 1) << (n - 2)) * d**2 - n * d**2
        sum1 = sum(comb(n, i) * (i * d) ** 2 for i in range(2, n + 1))
        closed2 = (1 + d**2) ** n - 1 - n * d**2
        sum2 = sum(comb(n, i) * d ** (2 * i) for i in range(2, n + 1))
        return ClosedForm(
            [("lemma", lemma1), ("corollary", cor1), ("binomial-sum", sum1)],
            [("lemma", closed2), ("binomial-sum", sum2)],
        )


@dataclass(frozen=True)
class CompleteUniform:
    n: int
    k: int

    def __post_init__(self):
        _need(2 <= self.k <= self.n, f"complete k-uniform needs 2 <= k <= n, got n={self.n}, k={self.k}")

    def text(self) -> str:
        return f"uniform:n={self.n},k={self.k}"

    def generate(self) -> Hypergraph:
        return Hypergraph(self.n, tuple(combinations(range(self.n), self.k)))

    def closed_form(self) -> ClosedForm:
        n, k = self.n, self.k
        d = comb(n - 1, k - 1)
        return ClosedForm(
            [("lemma", comb(n, k) * k**2 * d**2)],
            [("lemma", comb(n, k) * d ** (2 * k))],
        )


@dataclass(frozen=True)
class CompleteWeakBipartite:
    p: int
    q: int

    def __post_init__(self):
        _need(self.p >= 1 and self.q >= 1, f"weak bipartite sides must be non-empty, got p={self.p}, q={self.q}")

    def text(self) -> str:
        return f"bipartite:p={self.p},q={self.q}"

    def partition(self) -> Bipartition:
        return Bipartition.from_side(self.p + self.q, range(self.p))

    def generate(self) -> Hypergraph:
        n = self.p + self.q
        edges = [
            c
            for i in range(2, n + 1)
            for c in combinations(range(n), i)
            if c[0] < self.p <= c[-1]
        ]
        return Hypergraph(n, tuple(edges))

    def closed_form(self) -> ClosedForm:
        p, q = self.p, self.q
        d1 = 2 ** (p - 1) * (2**q - 1)
        d2 = 2 ** (q - 1) * (2**p - 1)
        s1 = s2 = 0
        for k in range(2, p + q + 1):
            for i in range(1, k):
                count = comb(p, i) * comb(q, k - i)
                s1 += count * (i * d1 + (k - i) * d2) ** 2
                s2 += count * d1 ** (2 * i) * d2 ** (2 * (k - i))
        return ClosedForm([("lemma", s1)], [("lemma", s2)])


@dataclass(frozen=True)
class Sunflower:
    m: int
    p: int
    k: int

    def __post_init__(self):
        _need(self.m >= 1, f"sunflower needs m >= 1, got {self.m}")
        _need(1 <= self.p < self.k, f"sunflower needs 1 <= p < k, got p={self.p}, k={self.k}")

    def text(self) -> str:
        return f"sunflower:m={self.m},p={self.p},k={self.k}"

    def generate(self) -> Hypergraph:
        m, p, k = self.m, self.p, self.k
        seeds = tuple(range(p))
        block = k - p
        edges = [seeds + tuple(range(p + i * block, p + (i + 1) * block)) for i in range(m)]
        return Hypergraph(p + m * block, tuple(edges))

    def closed_form(self) -> ClosedForm:
        m, p, k = self.m, self.p, self.k
        hm1 = [("lemma", m * (p * m + k - p) ** 2)]
        hm2 = [("lemma", m ** (2 * p + 1))]
        if p == k - 1:
            # the three hypertree theorems all name S(m, k-1, k) as their maximizer
            hm1 += [
                ("ktree-theorem", m * ((k - 1) * m + 1) ** 2),
                ("uniform-hypertree-theorem", m * ((k - 1) * m + k) ** 2),
                ("hypertree-theorem", m * (p * m + p + 1) ** 2),
            ]
            hm2 += [
                ("ktree-theorem", m ** (2 * k - 1)),
                ("uniform-hypertree-theorem", m ** (2 * k - 1)),
                ("hypertree-theorem", m ** (2 * p + 1)),
            ]
        return ClosedForm(hm1, hm2)


@dataclass(frozen=True)
class Hyperstar:
    m: int
    k: int

    def __post_init__(self):
        _need(self.m >= 2 and self.k >= 2, f"hyperstar needs m, k >= 2, got m={self.m}, k={self.k}")

    def text(self) -> str:
        return f"star:m={self.m},k={self.k}"

    def generate(self) -> Hypergraph:
        return Sunflower(self.m, 1, self.k).generate()

    def closed_form(self) -> ClosedForm:
        m, k = self.m, self.k
        return ClosedForm([("lemma", m * (m + k - 1) ** 2)], [("lemma", m**3)])


def _chain(sizes: list[int]) -> Hypergraph:
    edges, start = [], 0
    for s in sizes:
        edges.append(tuple(range(start, start + s)))
        start += s - 1
    return Hypergraph(start + 1, tuple(edges))


@dataclass(frozen=True)
class UniformHyperpath:
    m: int
    k: int

    def __post_init__(self):
        _need(self.m >= 2 and self.k >= 2, f"hyperpath needs m, k >= 2, got m={self.m}, k={self.k}")

    def text(self) -> str:
        return f"path:m={self.m},k={self.k}"

    def generate(self) -> Hypergraph:
        return _chain([self.k] * self.m)

    def closed_form(self) -> ClosedForm:
        m, k = self.m, self.k
        return ClosedForm(
            [
                ("corollary", 2 * (k + 1) ** 2 + (m - 2) * (k + 2) ** 2),
                ("lemma", 4 * k**2 * m - 8 * k + 2),
            ],
            [
                ("corollary", 16 * m - 24),
                ("lemma", 2 ** (2 * k - 1) * (2 * m - 3)),
            ],
        )


@dataclass(frozen=True)
class GeneralHyperpath:
    sizes: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        _need(len(self.sizes) >= 2, f"hyperpath needs at least 2 edges, got {len(self.sizes)}")
        _need(all(s >= 2 for s in self.sizes), f"hyperpath edge sizes must be >= 2, got {list(self.sizes)}")

    def text(self) -> str:
        return "path:sizes=" + ",".join(map(str, self.sizes))

    def generate(self) -> Hypergraph:
        return _chain(list(self.sizes))

    def closed_form(self) -> ClosedForm:
        s = self.sizes
        m = len(s)
        hm1 = (s[0] + 1) ** 2 + (s[-1] + 1) ** 2 + sum((x + 2) ** 2 for x in s[1:-1])
        return ClosedForm([("lemma-generalized", hm1)], [("lemma", 16 * m - 24)])


FamilySpec = Union[
    Complete,
    CompleteUniform,
    CompleteWeakBipartite,
    Sunflower,
    Hyperstar,
    UniformHyperpath,
    GeneralHyperpath,
]

_KINDS = {
    "complete": (Complete, ("n",)),
    "uniform": (CompleteUniform, ("n", "k")),
    "bipartite": (CompleteWeakBipartite, ("p", "q")),
    "sunflower": (Sunflower, ("m", "p", "k")),
    "star": (Hyperstar, ("m", "k")),
    "path": (UniformHyperpath, ("m", "k")),
}


def parse_family(text: str) -> FamilySpec:
    """Parse ``kind:key=value,...`` such as ``sunflower:m=3,p=2,k=3``."""
    kind, sep, rest = text.strip().partition(":")
    if not sep:
        raise InvalidFamilyParams(f"family spec {text!r} must look like kind:key=value,...")
    if kind == "path" and rest.startswith("sizes="):
        try:
            sizes = tuple(int(x) for x in rest[len("sizes="):].split(","))
        except ValueError:
            raise InvalidFamilyParams(f"bad size list in {text!r}") from None
        return GeneralHyperpath(sizes)
    if kind not in _KINDS:
        raise InvalidFamilyParams(f"unknown family {kind!r}; expected one of {', '.join(_KINDS)}")
    cls, keys = _KINDS[kind]
    params = {}
    for item in filter(None, rest.split(",")):
        m = re.fullmatch(r"\s*(\w+)\s*=\s*(-?\d+)\s*", item)
        if not m:
            raise InvalidFamilyParams(f"bad parameter {item!r} in {text!r}")
        params[m.group(1)] = int(m.group(2))
    if set(params) != set(keys):
        raise InvalidFamilyParams(f"{kind} takes parameters {', '.join(keys)}; got {', '.join(params) or 'none'}")
    return cls(**params)


def generate(spec: FamilySpec) -> Hypergraph:
    return spec.generate()


def closed_form(spec: FamilySpec) -> ClosedForm:
    return spec.closed_form()


@dataclass(frozen=True)
class Verdict:
    index: str
    label: str
    claimed: int
    match: bool


@dataclass(frozen=True)
class CrossCheckReport:
    spec: FamilySpec
    structural_hm1: int
    structural_hm2: int
    verdicts: list[Verdict]

    def matching(self, index: str) -> list[str]:
        return [v.label for v in self.verdicts if v.index == index and v.match]

    def verdict(self, index: str, label: str) -> Verdict:
        for v in self.verdicts:
            if v.index == index and v.label == label:
                return v
        raise KeyError((index, label))


def cross_check(spec: FamilySpec) -> CrossCheckReport:
    h1, h2 = indices(spec.generate())
    cf = spec.closed_form()
    verdicts = [Verdict("hm1", lab, val, val == h1) for lab, val in cf.hm1_variants]
    verdicts += [Verdict("hm2", lab, val, val == h2) for lab, val in cf.hm2_variants]
    return CrossCheckReport(spec, h1, h2, verdicts)
