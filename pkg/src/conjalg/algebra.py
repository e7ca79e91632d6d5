"""Finite-dimensional unital algebras given by structural constants.

``constants[i][j][k]`` is the coefficient of ``e_k`` in the product
``e_i * e_j``.  Basis index 0 is always the unit.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Optional, Sequence

from .exact import as_rational, format_rational, nullspace, stack

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_UNIT_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|1")


class AlgebraError(ValueError):
    pass


class SpecError(AlgebraError):
    """Malformed algebra definition (shape, names, indices)."""


class UnitAxiomError(AlgebraError):
    def __init__(self, i: int, j: int, k: int, value: Fraction, expected: Fraction):
        self.triple = (i, j, k)
        self.value = value
        self.expected = expected
        super().__init__(
            f"unit axiom violated at (i={i},j={j},k={k}): "
            f"constant {format_rational(value)}, expected {format_rational(expected)}"
        )


class SpecMismatchError(AlgebraError):
    pass


@dataclass(frozen=True)
class AlgebraSpec:
    name: str
    basis_names: tuple[str, ...]
    constants: tuple[tuple[tuple[Fraction, ...], ...], ...]
    _terms: tuple = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.basis_names)
        if n < 1:
            raise SpecError("an algebra needs at least one basis element")
        if len(set(self.basis_names)) != n:
            raise SpecError(f"basis names are not distinct: {list(self.basis_names)}")
        if _UNIT_NAME_RE.fullmatch(self.basis_names[0]) is None:
            raise SpecError(f"invalid unit name {self.basis_names[0]!r}")
        for nm in self.basis_names[1:]:
            if _NAME_RE.fullmatch(nm) is None:
                raise SpecError(f"invalid basis name {nm!r}")
        if len(self.constants) != n or any(
            len(row) != n or any(len(cell) != n for cell in row) for row in self.constants
        ):
            raise SpecError(f"constants tensor must be {n}x{n}x{n}")
        terms = tuple(
            (i, j, k, c)
            for i in range(n) for j in range(n)
            for k, c in enumerate(self.constants[i][j]) if c
        )
        object.__setattr__(self, "_terms", terms)

    @classmethod
    def from_products(cls, name: str, basis_names: Sequence[str],
                      products: dict[tuple[int, int], dict[int, object]]) -> "AlgebraSpec":
        """Build from sparse ``{(i, j): {k: value}}``; missing entries are zero."""
        n = len(basis_names)
        table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (i, j), coeffs in products.items():
            for k, v in coeffs.items():
                if not all(0 <= t < n for t in (i, j, k)):
                    raise SpecError(f"index out of range: ({i},{j},{k})")
                table[i][j][k] = as_rational(v)
        return cls(name, tuple(basis_names), _freeze(table))

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def constant(self, i: int, j: int, k: int) -> Fraction:
        return self.constants[i][j][k]

    def nonzero_constants(self) -> tuple[tuple[int, int, int, Fraction], ...]:
        return self._terms

    def basis(self, i: int) -> "Element":
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(1)
        return Element(self, tuple(coords))

    def basis_elements(self) -> list["Element"]:
        return [self.basis(i) for i in range(self.dim)]

    def zero(self) -> "Element":
        return Element(self, (Fraction(0),) * self.dim)

    def one(self) -> "Element":
        return self.basis(0)

    def element(self, coords: Iterable) -> "Element":
        return Element(self, tuple(as_rational(c) for c in coords))

    def index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise KeyError(f"unknown basis symbol {name!r} in algebra {self.name!r}") from None


def _freeze(table) -> tuple:
    return tuple(tuple(tuple(cell) for cell in row) for row in table)


def validate_spec(spec: AlgebraSpec) -> AlgebraSpec:
    """Check ``e_0 e_j = e_j e_0 = e_j``; raise on the first violating ``(i, j, k)``."""
    n = spec.dim
    for i, j, k in product(range(n), repeat=3):
        if i == 0:
            expected = Fraction(int(k == j))
        elif j == 0:
            expected = Fraction(int(k == i))
        else:
            continue
        value = spec.constants[i][j][k]
        if value != expected:
            raise UnitAxiomError(i, j, k, value, expected)
    return spec


@dataclass(frozen=True, eq=False)
class Element:
    spec: AlgebraSpec
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.spec.dim:
            raise SpecError(
                f"element has {len(self.coords)} coordinates, algebra has dimension {self.spec.dim}"
            )

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.spec is not self.spec and other.spec != self.spec:
            raise SpecMismatchError(
                f"elements of different algebras: {self.spec.name!r} vs {other.spec.name!r}"
            )

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (self.spec is other.spec or self.spec == other.spec) and self.coords == other.coords

    def __hash__(self):
        return hash((self.spec.name, self.coords))

    def __add__(self, other: "Element") -> "Element":
        return add(self, other)

    def __sub__(self, other: "Element") -> "Element":
        return sub(self, other)

    def __neg__(self) -> "Element":
        return Element(self.spec, tuple(-c for c in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        return scale(other, self)

    def __rmul__(self, other):
        return scale(other, self)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        body = ", ".join(format_rational(c) for c in self.coords)
        return f"Element({self.spec.name}: {body})"


def add(x: Element, y: Element) -> Element:
    x._check(y)
    return Element(x.spec, tuple(a + b for a, b in zip(x.coords, y.coords)))


def sub(x: Element, y: Element) -> Element:
    x._check(y)
    return Element(x.spec, tuple(a - b for a, b in zip(x.coords, y.coords)))


def scale(c, x: Element) -> Element:
    c = as_rational(c)
    return Element(x.spec, tuple(c * a for a in x.coords))


def mul(x: Element, y: Element) -> Element:
    x._check(y)
    out = [Fraction(0)] * x.spec.dim
    xc, yc = x.coords, y.coords
    for i, j, k, c in x.spec.nonzero_constants():
        if xc[i] and yc[j]:
            out[k] += xc[i] * yc[j] * c
    return Element(x.spec, tuple(out))


def embed_scalar(c, spec: AlgebraSpec) -> Element:
    """The element ``c * 1``; scalars sit inside the center."""
    coords = [Fraction(0)] * spec.dim
    coords[0] = as_rational(c)
    return Element(spec, tuple(coords))


def commutator(x: Element, y: Element) -> Element:
    return mul(x, y) - mul(y, x)


def associator(x: Element, y: Element, z: Element) -> Element:
    return mul(mul(x, y), z) - mul(x, mul(y, z))


def is_commutative(spec: AlgebraSpec) -> tuple[bool, Optional[tuple[int, int]]]:
    basis = spec.basis_elements()
    for i, j in product(range(spec.dim), repeat=2):
        if not commutator(basis[i], basis[j]).is_zero():
            return False, (i, j)
    return True, None


def is_associative(spec: AlgebraSpec) -> tuple[bool, Optional[tuple[int, int, int]]]:
    basis = spec.basis_elements()
    for i, j, k in product(range(spec.dim), repeat=3):
        if not associator(basis[i], basis[j], basis[k]).is_zero():
            return False, (i, j, k)
    return True, None


def _constraint_rows(spec: AlgebraSpec, fns: Iterable[Callable[[Element], Element]]):
    # each fn is linear in its argument; its matrix has columns fn(e_a)
    basis = spec.basis_elements()
    for fn in fns:
        cols = [fn(e).coords for e in basis]
        yield [[cols[a][k] for a in range(spec.dim)] for k in range(spec.dim)]


def _nucleus_conditions(spec: AlgebraSpec):
    basis = spec.basis_elements()
    for ei, ej in product(basis, repeat=2):
        yield lambda x, ei=ei, ej=ej: associator(x, ei, ej)
        yield lambda x, ei=ei, ej=ej: associator(ei, x, ej)
        yield lambda x, ei=ei, ej=ej: associator(ei, ej, x)


def _solve(spec: AlgebraSpec, conditions) -> list[Element]:
    m = stack(_constraint_rows(spec, conditions), spec.dim)
    return [Element(spec, v) for v in nullspace(m)]


def nucleus_basis(spec: AlgebraSpec) -> list[Element]:
    return _solve(spec, _nucleus_conditions(spec))


def center_basis(spec: AlgebraSpec) -> list[Element]:
    def conditions():
        for ei in spec.basis_elements():
            yield lambda x, ei=ei: commutator(x, ei)
        yield from _nucleus_conditions(spec)

    return _solve(spec, conditions())


def random_rational(rng: random.Random, bound: int = 9, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_element(spec: AlgebraSpec, rng: random.Random) -> Element:
    return Element(spec, tuple(random_rational(rng) for _ in range(spec.dim)))
