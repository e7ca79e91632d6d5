import json

import pytest

from conjalg.catalog import builtin
from conjalg.exact import RationalMatrix
from conjalg.fileformat import (
    FileFormatError,
    algebra_to_dict,
    dumps_matrix,
    load_algebra,
    loads_algebra,
    loads_matrix,
    save_algebra,
)


def _doc(**over):
    d = algebra_to_dict(builtin("complex").spec)
    d.update(over)
    return json.dumps(d)


def test_omitted_triples_are_zero():
    text = json.dumps({"name": "c", "dimension": 2, "basis": ["1", "i"], "constants": [
        {"i": 0, "j": 0, "k": 0, "value": "1"},
        {"i": 0, "j": 1, "k": 1, "value": "1"},
        {"i": 1, "j": 0, "k": 1, "value": "1"},
        {"i": 1, "j": 1, "k": 0, "value": "-1"},
    ]})
    spec = loads_algebra(text)
    assert spec.constants == builtin("complex").spec.constants


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    _doc(dimension=3),
    _doc(dimension=0),
    _doc(basis=["1", "1"]),
    _doc(constants=[{"i": 0, "j": 0, "k": 5, "value": "1"}]),
    _doc(constants=[{"i": 0, "j": 0, "k": 0, "value": "1.0"}]),
    _doc(constants=[{"i": 0, "j": 0, "k": 0, "value": "1/0"}]),
    _doc(constants=[{"i": 0, "j": 0, "k": 0, "value": "1"}, {"i": 0, "j": 0, "k": 0, "value": "1"}]),
    _doc(constants=[{"i": 0, "j": 0, "value": "1"}]),
    json.dumps({"name": "x", "dimension": 1, "basis": ["1"]}),
])
def test_malformed_algebra_files(text):
    with pytest.raises(FileFormatError):
        loads_algebra(text)


def test_file_round_trip(tmp_path):
    spec = builtin("octonion").spec
    path = tmp_path / "o.json"
    save_algebra(spec, path)
    assert load_algebra(path) == spec


def test_missing_file(tmp_path):
    with pytest.raises(FileFormatError):
        load_algebra(tmp_path / "nope.json")


def test_matrix_format():
    m = loads_matrix("1 0\n-1/2 3\n")
    assert m == RationalMatrix.from_rows([[1, 0], ["-1/2", 3]])
    assert dumps_matrix(m) == "1 0\n-1/2 3\n"


@pytest.mark.parametrize("text", ["", "1 2\n3\n", "1  2\n3 4\n", "a b\n"])
def test_malformed_matrix(text):
    with pytest.raises(FileFormatError):
        loads_matrix(text)
