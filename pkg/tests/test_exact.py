from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conjalg.exact import (
    RationalMatrix,
    format_rational,
    nullspace,
    parse_rational,
    rank,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


@pytest.mark.parametrize("text, expected", [
    ("3/6", Fraction(1, 2)),
    ("-2", Fraction(-2, 1)),
    ("0/5", Fraction(0, 1)),
    ("-4/6", Fraction(-2, 3)),
    ("12", Fraction(12)),
])
def test_parse_rational(text, expected):
    q = parse_rational(text)
    assert q == expected
    assert q.denominator > 0
    assert format_rational(q) == format_rational(expected)


def test_zero_canonical_form():
    assert format_rational(parse_rational("0/5")) == "0"
    assert parse_rational("0/5").denominator == 1


@pytest.mark.parametrize("text", ["", "1/", "/2", "1.5", "- 1", "1 /2", "+1", "a", "1/-2", "--1"])
def test_parse_rational_malformed(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


@given(rationals)
def test_format_parse_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if a != 0:
        assert a * (1 / a) == 1
    assert a + (-a) == 0


def _mat(rows):
    return RationalMatrix.from_rows(rows)


def test_nullspace_identity_is_trivial():
    assert nullspace(RationalMatrix.identity(2)) == []


def test_nullspace_single_row():
    assert nullspace(_mat([[1, -1]])) == [(1, 1)]


def test_nullspace_two_by_three():
    m = _mat([[1, 0, 1], [0, 1, 1]])
    (v,) = nullspace(m)
    assert v == (-1, -1, 1)
    assert m.matvec(v) == (0, 0)


def test_nullspace_order_follows_free_columns():
    m = _mat([[0, 1, 2, 0]])
    basis = nullspace(m)
    assert basis == [(1, 0, 0, 0), (0, -2, 1, 0), (0, 0, 0, 1)]


def test_nullspace_of_empty_rows():
    assert nullspace(RationalMatrix.zeros(0, 3)) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_matrix_shape_checks():
    with pytest.raises(ValueError):
        RationalMatrix(2, 2, (Fraction(1),))
    with pytest.raises(ValueError):
        _mat([[1, 2], [3]])
    with pytest.raises(TypeError):
        _mat([[0.5]])


small = st.integers(-4, 4).map(Fraction)


@settings(max_examples=60)
@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_nullspace_properties(r, c, data):
    rows = data.draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    m = _mat(rows)
    basis = nullspace(m)
    for v in basis:
        assert not any(m.matvec(v))
    assert rank(m) + len(basis) == c
    # independent oracle: sympy's exact rank
    assert rank(m) == sympy.Matrix(rows).rank()
    if basis:
        assert sympy.Matrix([list(v) for v in basis]).rank() == len(basis)


def test_matmul_and_identity():
    a = _mat([[1, 2], [3, 4]])
    assert a @ RationalMatrix.identity(2) == a
    assert (a @ a).to_rows() == [[7, 10], [15, 22]]
    assert (a - a).is_zero()
