"""Registry of published bound claims and their mechanical adjudication.

Each claim names one side (lower or upper) of one bound for one index over
one class of hypergraphs. ``check_claim`` evaluates the claimed expression
exactly, scans the class exhaustively, and classifies the claim:

* ``holds-tight``: the bound equals the observed extremum;
* ``holds-slack``: the bound is valid but not attained;
* ``violated``: some enumerated hypergraph lies outside the bound.

It also evaluates the hypergraph the claim names as extremal, to record
whether that construction attains the observed extremum and whether it is
the unique labelled extremizer.

Where published formulas for the same quantity disagree, each formula is a
separate claim (``-lemma-variant`` / ``-corollary-variant``) so every one of
them gets its own verdict.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Optional

from ..core import Hypergraph
from ..errors import InvalidSpaceParams, UnknownClaim
from ..families import (
    Complete,
    CompleteUniform,
    CompleteWeakBipartite,
    FamilySpec,
    GeneralHyperpath,
    Sunflower,
    UniformHyperpath,
)
from ..indices import index_value
from .scan import DEFAULT_CHUNK_BITS, DEFAULT_WITNESSES, ScanResult, scan
from .spaces import (
    DEFAULT_CAP,
    AllConnected,
    Hypertrees,
    SearchSpace,
    UniformConnected,
    UniformHypertrees,
    WeakBipartite,
)

TIGHT, SLACK, VIOLATED = "holds-tight", "holds-slack", "violated"


@dataclass(frozen=True)
class Claim:
    claim_id: str
    source: str
    params: tuple[str, ...]
    index: str
    side: str
    expression: str
    bound: Callable[[dict], int]
    space: Callable[[dict], SearchSpace]
    extremal: Optional[Callable[[dict], FamilySpec]] = None
    unique: bool = False


def _k_m(p: dict) -> None:
    if p["k"] < 2 or p["m"] < 2:
        raise InvalidSpaceParams(f"hypertree claims need k, m >= 2, got k={p['k']}, m={p['m']}")


def _uniform_trees(p: dict) -> SearchSpace:
    _k_m(p)
    return UniformHypertrees(p["k"], p["m"])


def _trees_on_m_plus_p(p: dict) -> SearchSpace:
    if p["m"] < 2 or p["p"] < 1:
        raise InvalidSpaceParams(f"hypertree claims need m >= 2 and p >= 1, got m={p['m']}, p={p['p']}")
    n = p["m"] + p["p"]
    return Hypertrees(n, p["m"], n_min=n)


def _lemma(spec: FamilySpec, index: str) -> int:
    cf = spec.closed_form()
    return dict(cf.hm1_variants if index == "hm1" else cf.hm2_variants)["lemma"]


def _lower_path_hm1(p: dict) -> int:
    k, m = p["k"], p["m"]
    return 2 * (k + 1) ** 2 + (m - 2) * (k + 2) ** 2


def _registry() -> dict[str, Claim]:
    claims: list[Claim] = []
    add = claims.append
    general = "connected hypergraphs on n >= 2 vertices"

    add(Claim("general-lower-hm1", general, ("n",), "hm1", "lower", "n^2",
              lambda p: p["n"] ** 2, lambda p: AllConnected(p["n"]),
              lambda p: CompleteUniform(p["n"], p["n"])))
    add(Claim("general-lower-hm2", general, ("n",), "hm2", "lower", "1",
              lambda p: 1, lambda p: AllConnected(p["n"]),
              lambda p: CompleteUniform(p["n"], p["n"])))
    for ix, expr in (("hm1", "n(2^(n-1)-1)^2[(n+1)2^(n-2)-1]"),
                     ("hm2", "[1+(2^(n-1)-1)^2]^n - 1 - n(2^(n-1)-1)^2")):
        add(Claim(f"general-upper-{ix}", general, ("n",), ix, "upper", expr,
                  lambda p, ix=ix: _lemma(Complete(p["n"]), ix), lambda p: AllConnected(p["n"]),
                  lambda p: Complete(p["n"])))

    uniform = "connected k-uniform hypergraphs on n vertices (equality iff complete k-uniform)"
    for ix, expr in (("hm1", "C(n,k) k^2 C(n-1,k-1)^2"), ("hm2", "C(n,k) C(n-1,k-1)^(2k)")):
        add(Claim(f"uniform-upper-{ix}", uniform, ("n", "k"), ix, "upper", expr,
                  lambda p, ix=ix: _lemma(CompleteUniform(p["n"], p["k"]), ix),
                  lambda p: UniformConnected(p["n"], p["k"]),
                  lambda p: CompleteUniform(p["n"], p["k"]), unique=True))

    bip = "connected weak bipartite hypergraphs with sides {0..p-1} and the remaining q vertices"
    add(Claim("weak-bipartite-lower-hm1", bip, ("p", "q"), "hm1", "lower", "(p+q)^2",
              lambda p: (p["p"] + p["q"]) ** 2, lambda p: WeakBipartite(p["p"], p["q"]),
              lambda p: CompleteUniform(p["p"] + p["q"], p["p"] + p["q"])))
    add(Claim("weak-bipartite-lower-hm2", bip, ("p", "q"), "hm2", "lower", "1",
              lambda p: 1, lambda p: WeakBipartite(p["p"], p["q"]),
              lambda p: CompleteUniform(p["p"] + p["q"], p["p"] + p["q"])))
    for ix in ("hm1", "hm2"):
        add(Claim(f"weak-bipartite-upper-{ix}", bip, ("p", "q"), ix, "upper", f"{ix.upper()}(K_p,q) double sum",
                  lambda p, ix=ix: _lemma(CompleteWeakBipartite(p["p"], p["q"]), ix),
                  lambda p: WeakBipartite(p["p"], p["q"]),
                  lambda p: CompleteWeakBipartite(p["p"], p["q"])))

    ktree = "k-uniform hypertrees with m >= 2 edges"
    path = lambda p: UniformHyperpath(p["m"], p["k"])  # noqa: E731
    sun = lambda p: Sunflower(p["m"], p["k"] - 1, p["k"])  # noqa: E731
    add(Claim("ktree-lower-hm1-lemma-variant", ktree, ("k", "m"), "hm1", "lower", "4k^2 m - 8k + 2",
              lambda p: 4 * p["k"] ** 2 * p["m"] - 8 * p["k"] + 2, _uniform_trees, path))
    add(Claim("ktree-lower-hm2-lemma-variant", ktree, ("k", "m"), "hm2", "lower", "2^(2k-1)(2m-3)",
              lambda p: 2 ** (2 * p["k"] - 1) * (2 * p["m"] - 3), _uniform_trees, path))
    add(Claim("ktree-lower-hm1-corollary-variant", ktree, ("k", "m"), "hm1", "lower",
              "2(k+1)^2 + (m-2)(k+2)^2", _lower_path_hm1, _uniform_trees, path))
    add(Claim("ktree-lower-hm2-corollary-variant", ktree, ("k", "m"), "hm2", "lower", "16m - 24",
              lambda p: 16 * p["m"] - 24, _uniform_trees, path))
    add(Claim("ktree-upper-hm1", ktree, ("k", "m"), "hm1", "upper", "m[(k-1)m + 1]^2",
              lambda p: p["m"] * ((p["k"] - 1) * p["m"] + 1) ** 2, _uniform_trees, sun))
    add(Claim("ktree-upper-hm2", ktree, ("k", "m"), "hm2", "upper", "m^(2k-1)",
              lambda p: p["m"] ** (2 * p["k"] - 1), _uniform_trees, sun))

    add(Claim("uniform-hypertree-lower-hm1", ktree, ("k", "m"), "hm1", "lower", "2(k+1)^2 + (m-2)(k+2)^2",
              _lower_path_hm1, _uniform_trees, path))
    add(Claim("uniform-hypertree-lower-hm2", ktree, ("k", "m"), "hm2", "lower", "16m - 24",
              lambda p: 16 * p["m"] - 24, _uniform_trees, path))
    add(Claim("uniform-hypertree-upper-hm1", ktree, ("k", "m"), "hm1", "upper", "m((k-1)m + k)^2",
              lambda p: p["m"] * ((p["k"] - 1) * p["m"] + p["k"]) ** 2, _uniform_trees, sun))
    add(Claim("uniform-hypertree-upper-hm2", ktree, ("k", "m"), "hm2", "upper", "m^(2k-1)",
              lambda p: p["m"] ** (2 * p["k"] - 1), _uniform_trees, sun))

    trees = "hypertrees with m >= 2 edges on exactly n = m + p vertices"
    add(Claim("hypertree-upper-hm1", trees, ("m", "p"), "hm1", "upper", "m(pm + p + 1)^2",
              lambda p: p["m"] * (p["p"] * p["m"] + p["p"] + 1) ** 2, _trees_on_m_plus_p,
              lambda p: Sunflower(p["m"], p["p"], p["p"] + 1)))
    add(Claim("hypertree-upper-hm2", trees, ("m", "p"), "hm2", "upper", "m^(2p+1)",
              lambda p: p["m"] ** (2 * p["p"] + 1), _trees_on_m_plus_p,
              lambda p: Sunflower(p["m"], p["p"], p["p"] + 1)))
    add(Claim("hypertree-lower-hm2", trees, ("m", "p"), "hm2", "lower", "16m - 24",
              lambda p: 16 * p["m"] - 24, _trees_on_m_plus_p,
              lambda p: GeneralHyperpath((p["p"] + 1,) + (2,) * (p["m"] - 1))))
    # the published HM1 lower bound uses k, which only makes sense for k-uniform trees
    add(Claim("hypertree-lower-hm1", ktree, ("k", "m"), "hm1", "lower", "2(k+1)^2 + (m-2)(k+2)^2",
              _lower_path_hm1, _uniform_trees, path))
    return {c.claim_id: c for c in claims}


CLAIMS: dict[str, Claim] = _registry()


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaim(f"unknown claim {claim_id!r}; known: {', '.join(CLAIMS)}") from None


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    params: dict
    index: str
    side: str
    expression: str
    claimed: int
    observed: int
    status: str
    witnesses: tuple[Hypergraph, ...]
    witness_count: int
    population: int
    space: str
    extremal_family: Optional[str] = None
    extremal_value: Optional[int] = None
    extremal_attains: Optional[bool] = None
    extremal_unique: Optional[bool] = None
    expects_unique: bool = False
    elapsed: float = field(default=0.0, compare=False)


def classify(side: str, claimed: int, observed: int) -> str:
    if claimed == observed:
        return TIGHT
    if side == "upper":
        return SLACK if claimed > observed else VIOLATED
    return SLACK if claimed < observed else VIOLATED


def _params_for(claim: Claim, params: dict) -> dict:
    missing = [k for k in claim.params if params.get(k) is None]
    if missing:
        raise InvalidSpaceParams(f"claim {claim.claim_id} needs parameter(s) {', '.join(missing)}")
    return {k: int(params[k]) for k in claim.params}


def check_claim(
    claim_id: str,
    params: dict,
    threads: int = 1,
    cap: int = DEFAULT_CAP,
    override: bool = False,
    witnesses: int = DEFAULT_WITNESSES,
    chunk_bits: int = DEFAULT_CHUNK_BITS,
    _cache: Optional[dict] = None,
) -> VerificationReport:
    claim = get_claim(claim_id)
    p = _params_for(claim, params)
    space = claim.space(p)
    claimed = claim.bound(p)
    started = time.perf_counter()
    key = (space, witnesses)
    if _cache is not None and key in _cache:
        res: ScanResult = _cache[key]
    else:
        res = scan(space, threads=threads, cap=cap, override=override, witnesses=witnesses, chunk_bits=chunk_bits)
        if _cache is not None:
            _cache[key] = res
    elapsed = time.perf_counter() - started
    ext = res.result(claim.index)
    if ext.population == 0:
        raise InvalidSpaceParams(f"{space.text()} is empty; claim {claim_id} is vacuous for {p}")
    if claim.side == "lower":
        observed, ws, count = ext.min_value, ext.min_witnesses, ext.min_count
    else:
        observed, ws, count = ext.max_value, ext.max_witnesses, ext.max_count

    fam_text = fam_value = attains = unique = None
    if claim.extremal is not None:
        fam = claim.extremal(p)
        inst = fam.generate()
        fam_text = fam.text()
        fam_value = index_value(inst, claim.index)
        attains = fam_value == observed
        unique = count == 1 and ws[0] == inst
    return VerificationReport(
        claim_id=claim_id,
        params=p,
        index=claim.index,
        side=claim.side,
        expression=claim.expression,
        claimed=claimed,
        observed=observed,
        status=classify(claim.side, claimed, observed),
        witnesses=ws,
        witness_count=count,
        population=ext.population,
        space=space.text(),
        extremal_family=fam_text,
        extremal_value=fam_value,
        extremal_attains=attains,
        extremal_unique=unique,
        expects_unique=claim.unique,
        elapsed=elapsed,
    )


def default_battery() -> list[tuple[str, dict]]:
    """Desk-scale parameter sets covering every registered claim."""
    out: list[tuple[str, dict]] = []
    for cid, claim in CLAIMS.items():
        if claim.params == ("n",):
            out += [(cid, {"n": n}) for n in (2, 3, 4)]
        elif claim.params == ("n", "k"):
            out += [(cid, {"n": n, "k": k}) for n in range(2, 6) for k in range(2, n + 1)]
        elif claim.params == ("p", "q"):
            out += [(cid, {"p": a, "q": b}) for a in (1, 2) for b in (1, 2)]
        elif claim.params == ("k", "m"):
            out += [(cid, {"k": k, "m": m}) for k, m in ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2))]
        elif claim.params == ("m", "p"):
            out += [(cid, {"m": m, "p": q}) for m, q in ((2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 1))]
    return out


def check_claims(items: Iterable[tuple[str, dict]], **kwargs) -> list[VerificationReport]:
    """Check several claims, scanning each distinct space only once."""
    cache: dict = {}
    return [check_claim(cid, params, _cache=cache, **kwargs) for cid, params in items]
