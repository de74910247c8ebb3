"""Exhaustive min/max scans of HM1 and HM2 over a search space.

The subset space is cut into chunks that depend only on the space and the
chunk width, never on the worker count. Every chunk yields a partial result
(population plus, for each index and side, the extreme value, the number of
objects attaining it and the first few witnesses in sort-key order). Partial
results combine with an associative, commutative merge, so a scan returns the
same answer for any number of workers and any chunk width.

Power-set chunks fix the high bits of the subset mask and sweep the low
``chunk_bits`` bits as a numpy array. Degrees come from popcounts of the
subset mask against per-vertex incidence masks; connectivity comes either
from a lookup table over 2-section graphs (small ``n``) or from a vectorized
reachability closure. Arithmetic runs in int64 only when a static bound on
the largest possible index value fits; otherwise the same code runs on
Python-integer object arrays.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations
from math import prod
from typing import Optional

import numpy as np

from ..core import Hypergraph, hypertree_masks, mask_of
from .spaces import DEFAULT_CAP, SearchSpace, check_space, is_powerset

INDICES = ("hm1", "hm2")
DEFAULT_CHUNK_BITS = 20
DEFAULT_WITNESSES = 5
_INT64_LIMIT = 2**62
# 2-section lookup tables are used while n(n-1)/2 stays this small
_LUT_MAX_PAIRS = 15


def default_threads() -> int:
    env = os.environ.get("HZ_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class Extreme:
    value: int
    count: int
    witnesses: tuple[Hypergraph, ...]


def _merge_extreme(a: Optional[Extreme], b: Optional[Extreme], want_min: bool, keep: int) -> Optional[Extreme]:
    if a is None:
        return b
    if b is None:
        return a
    if a.value != b.value:
        return a if (a.value < b.value) == want_min else b
    ws = sorted(a.witnesses + b.witnesses, key=Hypergraph.sort_key)[:keep]
    return Extreme(a.value, a.count + b.count, tuple(ws))


@dataclass(frozen=True)
class Partial:
    population: int
    # keyed by (index, "min" | "max")
    extremes: dict


def merge_partials(a: Partial, b: Partial, keep: int = DEFAULT_WITNESSES) -> Partial:
    ext = {}
    for key in set(a.extremes) | set(b.extremes):
        ext[key] = _merge_extreme(a.extremes.get(key), b.extremes.get(key), key[1] == "min", keep)
    return Partial(a.population + b.population, ext)


@dataclass(frozen=True)
class ExtremalResult:
    space: SearchSpace
    index: str
    min_value: Optional[int]
    max_value: Optional[int]
    min_count: int
    max_count: int
    min_witnesses: tuple[Hypergraph, ...]
    max_witnesses: tuple[Hypergraph, ...]
    population: int


@dataclass(frozen=True)
class ScanResult:
    space: SearchSpace
    population: int
    extremes: dict

    def result(self, index: str) -> ExtremalResult:
        if index not in INDICES:
            raise ValueError(f"unknown index {index!r}; expected 'hm1' or 'hm2'")
        lo = self.extremes.get((index, "min"))
        hi = self.extremes.get((index, "max"))
        return ExtremalResult(
            self.space,
            index,
            lo.value if lo else None,
            hi.value if hi else None,
            lo.count if lo else 0,
            hi.count if hi else 0,
            lo.witnesses if lo else (),
            hi.witnesses if hi else (),
            self.population,
        )


# ---------------------------------------------------------------- power-set


@dataclass(frozen=True)
class _Prep:
    n: int
    cands: tuple
    cmasks: tuple
    low_bits: int
    low: np.ndarray
    vlow: tuple
    vhigh: tuple
    dtype: object
    pm_low: Optional[np.ndarray]
    pm_cands: tuple
    conn_lut: Optional[np.ndarray]


def _pairs(n: int) -> dict:
    return {pair: t for t, pair in enumerate(combinations(range(n), 2))}


def _graph_conn_lut(n: int) -> np.ndarray:
    """``lut[g]`` says whether graph ``g`` (bit per vertex pair) is connected."""
    pairs = list(_pairs(n))
    g = np.arange(1 << len(pairs), dtype=np.int64)
    reach = np.ones_like(g)
    for _ in range(n - 1):
        for t, (a, b) in enumerate(pairs):
            hit = ((g >> t) & 1) & (((reach >> a) | (reach >> b)) & 1)
            reach |= hit * ((1 << a) | (1 << b))
    return reach == (1 << n) - 1


def _value_bound(n: int, cands: tuple) -> int:
    deg = [sum(1 for e in cands if v in e) for v in range(n)]
    b1 = sum(sum(deg[v] for v in e) ** 2 for e in cands)
    b2 = sum(prod(deg[v] for v in e) ** 2 for e in cands)
    return max(b1, b2)


@lru_cache(maxsize=8)
def _prepare(space: SearchSpace, chunk_bits: int, connectivity: str) -> _Prep:
    n = space.n
    cands = space.candidates()
    cmasks = tuple(mask_of(e) for e in cands)
    C = len(cands)
    L = min(C, chunk_bits)
    low = np.arange(1 << L, dtype=np.int64)
    vlow = tuple(sum(1 << j for j in range(L) if v in cands[j]) for v in range(n))
    vhigh = tuple(sum(1 << (j - L) for j in range(L, C) if v in cands[j]) for v in range(n))
    dtype = np.int64 if _value_bound(n, cands) < _INT64_LIMIT else object

    use_lut = connectivity == "lut" or (connectivity == "auto" and n * (n - 1) // 2 <= _LUT_MAX_PAIRS)
    pm_low = conn_lut = None
    pm_cands: tuple = ()
    if use_lut:
        pidx = _pairs(n)
        pm_cands = tuple(sum(1 << pidx[pr] for pr in combinations(e, 2)) for e in cands)
        table = np.zeros(1, dtype=np.int64)
        for j in range(L):
            table = np.concatenate([table, table | pm_cands[j]])
        pm_low = table
        conn_lut = _graph_conn_lut(n)
    return _Prep(n, cands, cmasks, L, low, vlow, vhigh, dtype, pm_low, pm_cands, conn_lut)


def _connected_closure(P: _Prep, prefix: int) -> np.ndarray:
    n, L = P.n, P.low_bits
    full = (1 << n) - 1
    low = P.low
    reach = np.ones_like(low)
    for _ in range(n - 1):
        before = reach.copy()
        for j, cm in enumerate(P.cmasks):
            touch = (reach & cm) != 0
            if j < L:
                touch &= ((low >> j) & 1).astype(bool)
            elif not (prefix >> (j - L)) & 1:
                continue
            reach[touch] |= cm
        if np.array_equal(before, reach):
            break
    return reach == full


def _k_smallest_masks(masks: np.ndarray, width: int, keep: int) -> np.ndarray:
    """The ``keep`` masks whose ascending set-bit sequences are lexicographically smallest."""
    if masks.size <= 1:
        return masks
    lsb = np.bitwise_count((masks & -masks) - 1).astype(np.int64)
    if masks.size > keep:
        cut = np.partition(lsb, keep - 1)[keep - 1]
        masks = masks[lsb <= cut]
    cols = np.arange(width, dtype=np.int64)
    bits = ((masks[:, None] >> cols) & 1).astype(bool)
    pos = np.where(bits, cols, width)
    pos.sort(axis=1)
    # a proper prefix sorts first
    pos[pos == width] = -1
    order = np.lexsort(pos.T[::-1])
    return masks[order[:keep]]


def _powerset_chunk(space: SearchSpace, prefix: int, chunk_bits: int, keep: int, connectivity: str) -> Partial:
    P = _prepare(space, chunk_bits, connectivity)
    n, L = P.n, P.low_bits
    if P.conn_lut is not None:
        g = P.pm_low
        hi = 0
        for j in range(L, len(P.cands)):
            if (prefix >> (j - L)) & 1:
                hi |= P.pm_cands[j]
        conn = P.conn_lut[g | hi]
    else:
        conn = _connected_closure(P, prefix)
    sub = P.low[conn]
    if sub.size == 0:
        return Partial(0, {})

    deg = []
    for v in range(n):
        d = np.bitwise_count(sub & P.vlow[v]).astype(np.int64) + (prefix & P.vhigh[v]).bit_count()
        deg.append(d.astype(P.dtype) if P.dtype is object else d)
    hm1 = np.zeros(sub.size, dtype=P.dtype)
    hm2 = np.zeros(sub.size, dtype=P.dtype)
    for j, e in enumerate(P.cands):
        if j < L:
            has = (sub >> j) & 1
        elif (prefix >> (j - L)) & 1:
            has = None
        else:
            continue
        s = reduce(np.add, (deg[v] for v in e))
        pr = reduce(np.multiply, (deg[v] for v in e))
        if has is None:
            hm1 += s * s
            hm2 += pr * pr
        else:
            if P.dtype is object:
                has = has.astype(object)
            hm1 += has * (s * s)
            hm2 += has * (pr * pr)

    ext = {}
    base = prefix << L
    for name, vals in (("hm1", hm1), ("hm2", hm2)):
        for side, pick in (("min", min), ("max", max)):
            target = pick(vals) if P.dtype is object else (vals.min() if side == "min" else vals.max())
            hit = sub[vals == target] | base
            chosen = _k_smallest_masks(hit, len(P.cands), keep)
            ws = tuple(Hypergraph(n, tuple(P.cands[j] for j in range(len(P.cands)) if (int(mk) >> j) & 1)) for mk in chosen)
            ext[(name, side)] = Extreme(int(target), int(hit.size), ws)
    return Partial(int(sub.size), ext)


# ------------------------------------------------------------- fixed-size


def _choose_chunk(space: SearchSpace, layer: int, first: int, keep: int) -> Partial:
    n, cands = space.layers()[layer]
    full = (1 << n) - 1
    cmasks = [mask_of(e) for e in cands]
    m = space.m
    population = 0
    best: dict = {}
    for rest in combinations(range(first + 1, len(cands)), m - 1):
        idx = (first,) + rest
        chosen = [cmasks[j] for j in idx]
        union = 0
        for c in chosen:
            union |= c
        if union != full or not hypertree_masks(n, chosen):
            continue
        population += 1
        deg = [0] * n
        for j in idx:
            for v in cands[j]:
                deg[v] += 1
        v1 = sum(sum(deg[v] for v in cands[j]) ** 2 for j in idx)
        v2 = sum(prod(deg[v] for v in cands[j]) ** 2 for j in idx)
        for name, val in (("hm1", v1), ("hm2", v2)):
            for side in ("min", "max"):
                cur = best.get((name, side))
                if cur is None or (val < cur[0] if side == "min" else val > cur[0]):
                    best[(name, side)] = [val, 1, [idx]]
                elif val == cur[0]:
                    cur[1] += 1
                    # combinations arrive in lexicographic order, so the first few are the smallest
                    if len(cur[2]) < keep:
                        cur[2].append(idx)
    ext = {
        key: Extreme(val, count, tuple(Hypergraph(n, tuple(cands[j] for j in idx)) for idx in ws))
        for key, (val, count, ws) in best.items()
    }
    return Partial(population, ext)


# ------------------------------------------------------------------ driver


def chunk_plan(space: SearchSpace, chunk_bits: int = DEFAULT_CHUNK_BITS) -> list[tuple]:
    if is_powerset(space):
        C = len(space.candidates())
        high = max(0, C - chunk_bits)
        return [("p", prefix) for prefix in range(1 << high)]
    plan = []
    for li, (_, cands) in enumerate(space.layers()):
        plan.extend(("c", li, i) for i in range(len(cands) - space.m + 1))
    return plan


def _run_chunk(job: tuple) -> Partial:
    space, chunk, chunk_bits, keep, connectivity = job
    if chunk[0] == "p":
        return _powerset_chunk(space, chunk[1], chunk_bits, keep, connectivity)
    return _choose_chunk(space, chunk[1], chunk[2], keep)


def scan(
    space: SearchSpace,
    threads: int = 1,
    cap: int = DEFAULT_CAP,
    override: bool = False,
    witnesses: int = DEFAULT_WITNESSES,
    chunk_bits: int = DEFAULT_CHUNK_BITS,
    connectivity: str = "auto",
) -> ScanResult:
    """Scan both indices over ``space``; the result is independent of ``threads``.

    ``connectivity`` selects the power-set connectivity test: ``"lut"``,
    ``"closure"`` or ``"auto"``.
    """
    if connectivity not in ("auto", "lut", "closure"):
        raise ValueError(f"unknown connectivity method {connectivity!r}")
    if witnesses < 1:
        raise ValueError("witnesses must be at least 1")
    if not 1 <= chunk_bits <= 30:
        raise ValueError("chunk_bits must lie in 1..30")
    check_space(space, cap, override)
    jobs = [(space, chunk, chunk_bits, witnesses, connectivity) for chunk in chunk_plan(space, chunk_bits)]
    total = Partial(0, {})
    if threads <= 1 or len(jobs) <= 1:
        for job in jobs:
            total = merge_partials(total, _run_chunk(job), witnesses)
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            step = max(1, len(jobs) // (threads * 4))
            for part in pool.map(_run_chunk, jobs, chunksize=step):
                total = merge_partials(total, part, witnesses)
    return ScanResult(space, total.population, total.extremes)


def extremal_scan(space: SearchSpace, index: str, **kwargs) -> ExtremalResult:
    return scan(space, **kwargs).result(index)
