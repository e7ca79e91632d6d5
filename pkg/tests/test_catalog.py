from fractions import Fraction
from itertools import product

import pytest

from conjalg.algebra import embed_scalar, validate_spec
from conjalg.catalog import (
    KEYS,
    builtin,
    cayley_dickson,
    complex_numbers,
    mat2_coords,
    mat2_matrix,
)
from conjalg.conjugation import norm_like
from conjalg.fileformat import dumps_algebra, loads_algebra

from helpers import complex_product, hamilton, matmul2, octonion_product, random_element


@pytest.mark.parametrize("key", KEYS)
def test_entries_validate_and_flags_match(key):
    entry = builtin(key)
    assert validate_spec(entry.spec) is entry.spec
    assert entry.recomputed_flags() == (entry.commutative, entry.associative, entry.conjugation_ok)
    assert entry.spec.name == key


@pytest.mark.parametrize("key, flags", [
    ("quaternion", (False, True, True)),
    ("octonion", (False, False, True)),
    ("idempotent", (True, True, False)),
    ("complex", (True, True, True)),
    ("split_complex", (True, True, True)),
    ("dual", (True, True, True)),
    ("mat2", (False, True, True)),
])
def test_expected_flags(key, flags):
    assert builtin(key).recomputed_flags() == flags


def test_unknown_key():
    with pytest.raises(KeyError):
        builtin("sedenion")


def _unit(n, m):
    return tuple(Fraction(int(t == m)) for t in range(n))


@pytest.mark.parametrize("key, oracle, n", [
    ("complex", complex_product, 2),
    ("quaternion", hamilton, 4),
    ("octonion", octonion_product, 8),
])
def test_tables_match_formula_oracles(key, oracle, n):
    spec = builtin(key).spec
    basis = spec.basis_elements()
    for a, b in product(range(n), repeat=2):
        assert (basis[a] * basis[b]).coords == oracle(_unit(n, a), _unit(n, b))


def test_small_tables():
    s = builtin("split_complex").spec
    assert s.basis(1) * s.basis(1) == s.one()
    d = builtin("dual").spec
    assert (d.basis(1) * d.basis(1)).is_zero()
    e = builtin("idempotent").spec
    assert e.basis(1) * e.basis(1) == e.basis(1)


def test_doubling_complex_gives_quaternions():
    doubled = cayley_dickson(complex_numbers(), "quaternion", ["1", "i", "j", "k"])
    assert doubled == builtin("quaternion").spec


def test_mat2_matches_matrix_product(rng):
    spec = builtin("mat2").spec
    for _ in range(30):
        x, y = random_element(spec, rng), random_element(spec, rng)
        expected = mat2_coords(matmul2(mat2_matrix(x.coords), mat2_matrix(y.coords)))
        assert (x * y).coords == expected


def test_mat2_norm_is_determinant(rng):
    spec = builtin("mat2").spec
    for _ in range(50):
        d = random_element(spec, rng)
        (a, b), (c, e) = mat2_matrix(d.coords)
        assert norm_like(d) == embed_scalar(a * e - b * c, spec)


def test_mat2_conjugation_is_adjugate(rng):
    spec = builtin("mat2").spec
    from conjalg.conjugation import conjugate
    for _ in range(10):
        d = random_element(spec, rng)
        (a, b), (c, e) = mat2_matrix(d.coords)
        assert conjugate(d).coords == mat2_coords(((e, -b), (-c, a)))


@pytest.mark.parametrize("key", KEYS)
def test_export_round_trip(key):
    spec = builtin(key).spec
    text = dumps_algebra(spec)
    assert loads_algebra(text) == spec
    assert dumps_algebra(loads_algebra(text)) == text
