import json

import pytest
from hypothesis import given

from hyperzagreb.core import build
from hyperzagreb.errors import DuplicateEdge, EdgeTooSmall, FormatError, VertexOutOfRange
from hyperzagreb.io import (
    format_hg,
    format_inline,
    format_json,
    parse_hg,
    parse_inline,
    parse_json,
    read_hypergraph,
)

from .conftest import hypergraphs


def test_parse_hg_with_comments_and_blanks():
    text = "# a chain\n\n7 3\n0 1 2\n# middle\n2 3 4\n\n4 5 6\n"
    assert parse_hg(text) == build(7, [[0, 1, 2], [2, 3, 4], [4, 5, 6]])


def test_format_hg_exact_text():
    h = build(4, [[1, 2, 3], [0, 1]])
    assert format_hg(h) == "4 2\n0 1\n1 2 3\n"


@pytest.mark.parametrize(
    "text, exc",
    [
        ("", FormatError),
        ("3\n", FormatError),
        ("3 2\n0 1\n", FormatError),
        ("3 1\n1 0\n", FormatError),
        ("3 1\n0 x\n", FormatError),
        ("3 1\n0 3\n", VertexOutOfRange),
        ("3 1\n0\n", EdgeTooSmall),
        ("3 2\n0 1\n0 1\n", DuplicateEdge),
    ],
)
def test_parse_hg_rejects(text, exc):
    with pytest.raises(exc):
        parse_hg(text)


def test_json_shape():
    h = build(3, [[0, 1, 2]])
    assert json.loads(format_json(h)) == {"n": 3, "edges": [[0, 1, 2]]}


@pytest.mark.parametrize(
    "text",
    ['{"n": 3}', '{"n": 3, "edges": [[1, 0]]}', '{"n": "3", "edges": []}', "[1,2]", "{bad"],
)
def test_parse_json_rejects(text):
    with pytest.raises(FormatError):
        parse_json(text)


def test_inline_form():
    h = build(4, [[0, 1], [1, 2, 3]])
    assert format_inline(h) == "4:0 1;1 2 3"
    assert parse_inline("4:0 1;1 2 3") == h
    assert parse_inline("3:") == build(3, [])


@given(hypergraphs())
def test_round_trips(h):
    assert parse_hg(format_hg(h)) == h
    assert parse_json(format_json(h)) == h
    assert parse_inline(format_inline(h)) == h
    assert format_hg(parse_hg(format_hg(h))) == format_hg(h)


def test_read_hypergraph_by_suffix(tmp_path):
    h = build(3, [[0, 1], [1, 2]])
    (tmp_path / "a.hg").write_text(format_hg(h))
    (tmp_path / "a.json").write_text(format_json(h))
    assert read_hypergraph(tmp_path / "a.hg") == h
    assert read_hypergraph(tmp_path / "a.json") == h
    with pytest.raises(FileNotFoundError):
        read_hypergraph(tmp_path / "missing.hg")
