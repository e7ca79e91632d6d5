"""Built-in algebras.

=============  ===================  ==========================================
key            basis                products (unit omitted)
=============  ===================  ==========================================
complex        1, i                 i*i = -1
split_complex  1, j                 j*j = 1
dual           1, eps               eps*eps = 0
quaternion     1, i, j, k           i*i = j*j = k*k = -1, ij = k, jk = i,
                                    ki = j, and the reversed products negate
octonion       1, e1 .. e7          Cayley-Dickson double of quaternion
mat2           1, h, s, t           real 2x2 matrices, see below
idempotent     1, e1                e1*e1 = e1
=============  ===================  ==========================================

The octonion basis is ``e_m = (e_m, 0)`` and ``e_{4+m} = (0, e_m)`` over the
quaternion basis ``(1, i, j, k)``, multiplied by
``(a, b)(c, d) = (ac - d* b, d a + b c*)``.  The resulting signed table
(row times column) is::

          e1    e2    e3    e4    e5    e6    e7
    e1    -1    e3   -e2    e5   -e4   -e7    e6
    e2   -e3    -1    e1    e6    e7   -e4   -e5
    e3    e2   -e1    -1    e7   -e6    e5   -e4
    e4   -e5   -e6   -e7    -1    e1    e2    e3
    e5    e4   -e7    e6   -e1    -1   -e3    e2
    e6    e7    e4   -e5   -e2    e3    -1   -e1
    e7   -e6    e5    e4   -e3   -e2    e1    -1

``mat2`` uses ``h = E11 - E22``, ``s = E12 + E21``, ``t = E12 - E21`` so that
``trace(d) 1 - d`` is the coordinate conjugation; its constants are computed
by multiplying the actual matrices.

``idempotent`` exists only as a negative fixture: its conjugation does not
reverse products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraSpec, Element, is_associative, is_commutative, mul, validate_spec
from .conjugation import check_conjugation_algebra, conjugate


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    spec: AlgebraSpec
    commutative: bool
    associative: bool
    conjugation_ok: bool
    notes: str

    def recomputed_flags(self) -> tuple[bool, bool, bool]:
        return (
            is_commutative(self.spec)[0],
            is_associative(self.spec)[0],
            check_conjugation_algebra(self.spec).passed,
        )


def _table(name, names, products):
    """``products`` maps (name, name) to {name: value}; unit rows are filled in."""
    idx = {nm: i for i, nm in enumerate(names)}
    full = {}
    for i in range(len(names)):
        full[(0, i)] = {i: 1}
        full[(i, 0)] = {i: 1}
    for (a, b), out in products.items():
        full[(idx[a], idx[b])] = {idx[k]: v for k, v in out.items()}
    return validate_spec(AlgebraSpec.from_products(name, names, full))


def complex_numbers() -> AlgebraSpec:
    return _table("complex", ["1", "i"], {("i", "i"): {"1": -1}})


def split_complex() -> AlgebraSpec:
    return _table("split_complex", ["1", "j"], {("j", "j"): {"1": 1}})


def dual_numbers() -> AlgebraSpec:
    return _table("dual", ["1", "eps"], {})


def quaternions() -> AlgebraSpec:
    products = {("i", "i"): {"1": -1}, ("j", "j"): {"1": -1}, ("k", "k"): {"1": -1}}
    for a, b, c in (("i", "j", "k"), ("j", "k", "i"), ("k", "i", "j")):
        products[(a, b)] = {c: 1}
        products[(b, a)] = {c: -1}
    return _table("quaternion", ["1", "i", "j", "k"], products)


def idempotent() -> AlgebraSpec:
    return _table("idempotent", ["1", "e1"], {("e1", "e1"): {"e1": 1}})


def cayley_dickson(base: AlgebraSpec, name: str, names) -> AlgebraSpec:
    """Double ``base`` with ``(a, b)(c, d) = (ac - d* b, d a + b c*)``."""
    n = base.dim
    if len(names) != 2 * n:
        raise ValueError(f"need {2 * n} basis names")
    zero = base.zero()

    def pair(i):
        return (base.basis(i), zero) if i < n else (zero, base.basis(i - n))

    products = {}
    for p in range(2 * n):
        a, b = pair(p)
        for q in range(2 * n):
            c, d = pair(q)
            first = mul(a, c) - mul(conjugate(d), b)
            second = mul(d, a) + mul(b, conjugate(c))
            coords = first.coords + second.coords
            products[(p, q)] = {k: v for k, v in enumerate(coords) if v}
    return validate_spec(AlgebraSpec.from_products(name, names, products))


def octonions() -> AlgebraSpec:
    return cayley_dickson(quaternions(), "octonion", ["1"] + [f"e{m}" for m in range(1, 8)])


_MAT2_BASIS = (
    ((1, 0), (0, 1)),    # 1
    ((1, 0), (0, -1)),   # h = E11 - E22
    ((0, 1), (1, 0)),    # s = E12 + E21
    ((0, 1), (-1, 0)),   # t = E12 - E21
)


def mat2_coords(m) -> tuple[Fraction, ...]:
    """Coordinates of a 2x2 matrix ``((a, b), (c, d))`` in the mat2 basis."""
    (a, b), (c, d) = m
    half = Fraction(1, 2)
    return (half * (a + d), half * (a - d), half * (b + c), half * (b - c))


def mat2_matrix(coords) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    x0, x1, x2, x3 = coords
    return ((x0 + x1, x2 + x3), (x2 - x3, x0 - x1))


def _matmul2(p, q):
    return tuple(
        tuple(sum(p[r][t] * q[t][c] for t in range(2)) for c in range(2)) for r in range(2)
    )


def mat2() -> AlgebraSpec:
    products = {}
    for i, p in enumerate(_MAT2_BASIS):
        for j, q in enumerate(_MAT2_BASIS):
            products[(i, j)] = {k: v for k, v in enumerate(mat2_coords(_matmul2(p, q))) if v}
    return validate_spec(AlgebraSpec.from_products("mat2", ["1", "h", "s", "t"], products))


_BUILDERS = {
    "complex": (complex_numbers, True, True, True, "i*i = -1; worked example of conjugation"),
    "split_complex": (split_complex, True, True, True, "j*j = +1"),
    "dual": (dual_numbers, True, True, True, "eps*eps = 0"),
    "quaternion": (quaternions, False, True, True, "Hamilton table; worked example of conjugation"),
    "octonion": (octonions, False, False, True, "Cayley-Dickson double of quaternion"),
    "mat2": (mat2, False, True, True, "2x2 matrices in basis 1, E11-E22, E12+E21, E12-E21"),
    "idempotent": (idempotent, True, True, False, "e1*e1 = e1; conjugation fails (negative fixture)"),
}

KEYS = tuple(_BUILDERS)

_cache: dict[str, CatalogEntry] = {}


def builtin(key: str) -> CatalogEntry:
    try:
        build, comm, assoc, conj, notes = _BUILDERS[key]
    except KeyError:
        raise KeyError(f"unknown catalog algebra {key!r}; known: {', '.join(KEYS)}") from None
    if key not in _cache:
        _cache[key] = CatalogEntry(key, build(), comm, assoc, conj, notes)
    return _cache[key]


def element(key: str, *coords) -> Element:
    """Shorthand for an element of a catalog algebra."""
    return builtin(key).spec.element(coords)
