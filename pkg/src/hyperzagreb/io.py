"""Text (.hg), JSON and one-line inline formats for hypergraphs.

``.hg`` layout::

    # comment lines and blank lines are ignored
    n m
    0 1 2
    2 3 4

Each edge line lists strictly ascending vertex indices. Parsers reject any
violation of the hypergraph invariants instead of repairing the input.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import Hypergraph
from .errors import FormatError


def _ints(tokens: list[str], where: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"{where}: expected integers, got {' '.join(tokens)!r}") from None


def _ascending(edge: list[int], where: str) -> None:
    if any(a >= b for a, b in zip(edge, edge[1:])):
        raise FormatError(f"{where}: edge {edge} is not strictly ascending")


def parse_hg(text: str) -> Hypergraph:
    lines = [
        (i, ln.strip())
        for i, ln in enumerate(text.splitlines(), 1)
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise FormatError("empty .hg input: missing 'n m' header")
    lineno, header = lines[0]
    head = _ints(header.split(), f"line {lineno}")
    if len(head) != 2:
        raise FormatError(f"line {lineno}: header must be 'n m'")
    n, m = head
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, ln in body:
        edge = _ints(ln.split(), f"line {lineno}")
        _ascending(edge, f"line {lineno}")
        edges.append(tuple(edge))
    return Hypergraph(n, tuple(edges))


def format_hg(h: Hypergraph) -> str:
    out = [f"{h.n} {h.m}"]
    out.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(out) + "\n"


def parse_json(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or set(data) != {"n", "edges"}:
        raise FormatError('JSON hypergraph must be an object with exactly "n" and "edges"')
    n, edges = data["n"], data["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise FormatError('"n" must be an integer and "edges" a list')
    for e in edges:
        if not isinstance(e, list) or not all(isinstance(v, int) for v in e):
            raise FormatError(f"edge {e!r} is not a list of integers")
        _ascending(e, "JSON")
    return Hypergraph(n, tuple(tuple(e) for e in edges))


def to_json_obj(h: Hypergraph) -> dict:
    return {"n": h.n, "edges": [list(e) for e in h.edges]}


def format_json(h: Hypergraph) -> str:
    return json.dumps(to_json_obj(h)) + "\n"


def format_inline(h: Hypergraph) -> str:
    """One-line form used for witnesses, e.g. ``4:0 1;1 2 3``."""
    return f"{h.n}:" + ";".join(" ".join(map(str, e)) for e in h.edges)


def parse_inline(text: str) -> Hypergraph:
    head, sep, rest = text.strip().partition(":")
    if not sep:
        raise FormatError(f"inline hypergraph {text!r} lacks 'n:' prefix")
    (n,) = _ints([head], "inline")
    edges = []
    for chunk in filter(None, rest.split(";")):
        edge = _ints(chunk.split(), "inline")
        _ascending(edge, "inline")
        edges.append(tuple(edge))
    return Hypergraph(n, tuple(edges))


def read_hypergraph(path: str | Path, fmt: str | None = None) -> Hypergraph:
    """Load a hypergraph, picking the format from the suffix unless given."""
    path = Path(path)
    text = path.read_text()
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "hg"
    if fmt == "json":
        return parse_json(text)
    if fmt == "hg":
        return parse_hg(text)
    raise FormatError(f"unknown format {fmt!r}")
