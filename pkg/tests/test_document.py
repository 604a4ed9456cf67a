from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie import zoo
from homlie.document import parse_algebra, parse_document, serialize, to_document
from homlie.errors import DocumentError
from homlie.exactmath import FieldSpec

QQ, GF5 = FieldSpec.rationals(), FieldSpec.gf(5)
ENTRIES = [("so3", (), QQ), ("heisenberg", (2,), GF5), ("a1", (), QQ), ("r_family", (3,), QQ),
           ("aff_plus_abelian", (1,), FieldSpec.gf(3)), ("abelian", (0,), QQ)]


def base_doc(**over):
    doc = {"field": "Q", "dim": 2, "brackets": [{"i": 0, "j": 1, "v": ["0", "1"]}]}
    doc.update(over)
    return doc


@pytest.mark.parametrize("name, params, f", ENTRIES)
def test_round_trip(name, params, f):
    entry = zoo.build(name, params, f)
    text = serialize(entry.algebra, entry.sigma)
    A, sigma = parse_algebra(text)
    assert A == entry.algebra and sigma == entry.sigma
    assert serialize(A, sigma) == text


def test_canonical_form():
    messy = {"dim": 3, "field": "Q", "brackets": [
        {"i": 1, "j": 2, "v": ["2/4", "0", "0"]},
        {"i": 0, "j": 1, "v": ["0", "0", "0"]},
        {"i": 0, "j": 2, "v": ["0", "6/2", "0"]},
    ]}
    A, _ = parse_document(messy)
    doc = to_document(A)
    assert doc["brackets"] == [{"i": 0, "j": 2, "v": ["0", "3", "0"]}, {"i": 1, "j": 2, "v": ["1/2", "0", "0"]}]


def test_gf_field():
    A, sigma = parse_document({"field": {"gf": 7}, "dim": 1, "sigma": [["3"]]})
    assert A.field == FieldSpec.gf(7) and sigma[0, 0] == 3


@given(st.integers(0, 4), st.data())
def test_round_trip_random(n, data):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    vals = st.lists(st.integers(-4, 4).map(str), min_size=n, max_size=n)
    doc = {"field": "Q", "dim": n, "brackets": [{"i": i, "j": j, "v": data.draw(vals)} for i, j in chosen]}
    A, _ = parse_document(doc)
    assert parse_algebra(serialize(A))[0] == A


@pytest.mark.parametrize("doc, path", [
    (base_doc(brackets=[{"i": 1, "j": 0, "v": ["0", "1"]}]), "brackets[0]"),
    (base_doc(brackets=[{"i": 1, "j": 1, "v": ["0", "1"]}]), "brackets[0]"),
    (base_doc(brackets=[{"i": 0, "j": 2, "v": ["0", "1"]}]), "brackets[0]"),
    (base_doc(brackets=[{"i": 0, "j": 1, "v": ["1"]}]), "brackets[0].v"),
    (base_doc(brackets=[{"i": 0, "j": 1, "v": ["0", "1"]}, {"i": 0, "j": 1, "v": ["0", "1"]}]), "brackets[1]"),
    (base_doc(brackets=[{"i": 0, "j": 1, "v": ["0", 1]}]), "brackets[0].v[1]"),
    (base_doc(brackets=[{"i": 0, "j": 1, "v": ["0", "1/0"]}]), "brackets[0].v[1]"),
    (base_doc(brackets=[{"i": "0", "j": 1, "v": ["0", "1"]}]), "brackets[0].i"),
    (base_doc(extra=1), "$"),
    (base_doc(field="R"), "field"),
    (base_doc(field={"gf": 4}), "field.gf"),
    (base_doc(field={"gf": 5}, brackets=[{"i": 0, "j": 1, "v": ["0", "7"]}]), "brackets[0].v[1]"),
    (base_doc(dim=-1), "dim"),
    (base_doc(sigma=[["1", "0"]]), "sigma"),
    (base_doc(sigma=[["1", "0"], ["0"]]), "sigma[1]"),
    ({"field": "Q"}, "dim"),
])
def test_errors_carry_path(doc, path):
    with pytest.raises(DocumentError) as info:
        parse_document(doc)
    assert info.value.path == path


def test_invalid_json():
    with pytest.raises(DocumentError) as info:
        parse_algebra("{not json")
    assert info.value.path == "$"
    with pytest.raises(DocumentError):
        parse_algebra(json.dumps([1, 2]))
