"""Scalar-linear self-maps of an algebra and their normal forms.

A map is an n x n rational matrix whose column ``l`` holds the coordinates of
``f(e_l)``.  ``side`` names where the algebra element ``a`` acts:

============  ================================  ==================
side          linear condition                  normal form
============  ================================  ==================
``"left"``    ``f(a x) = a f(x)``               ``f(x) = x b``
``"right"``   ``f(x a) = f(x) a``               ``f(x) = b x``
============  ================================  ==================

and for antilinear maps

============  ================================  ==================
``"left"``    ``f(x a) = a* f(x)``              ``f(x) = x* b``
``"right"``   ``f(a x) = f(x) a*``              ``f(x) = b x*``
============  ================================  ==================

In all cases ``b = f(1)``.  Classification needs an associative algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Optional

from .algebra import AlgebraError, AlgebraSpec, Element, SpecMismatchError, is_associative, mul
from .conjugation import conjugate, conjugation_matrix, require_conjugation
from .exact import RationalMatrix

Side = Literal["left", "right"]

DEFAULT_SIDE: Side = "left"


class NotAssociativeError(AlgebraError):
    pass


@dataclass(frozen=True)
class LinearMap:
    spec: AlgebraSpec
    matrix: RationalMatrix

    def __post_init__(self):
        n = self.spec.dim
        if (self.matrix.rows, self.matrix.cols) != (n, n):
            raise SpecMismatchError(
                f"map matrix is {self.matrix.rows}x{self.matrix.cols}, algebra has dimension {n}"
            )

    def __call__(self, x: Element) -> Element:
        return apply(self, x)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self after other``."""
        return LinearMap(self.spec, self.matrix @ other.matrix)


def _check_side(side: str) -> None:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def apply(M: LinearMap, x: Element) -> Element:
    if x.spec is not M.spec and x.spec != M.spec:
        raise SpecMismatchError(f"element of {x.spec.name!r} given to a map on {M.spec.name!r}")
    return Element(M.spec, M.matrix.matvec(x.coords))


def from_function(spec: AlgebraSpec, fn) -> LinearMap:
    return LinearMap(spec, RationalMatrix.from_columns([fn(e).coords for e in spec.basis_elements()]))


def identity(spec: AlgebraSpec) -> LinearMap:
    return LinearMap(spec, RationalMatrix.identity(spec.dim))


def conjugation_map(spec: AlgebraSpec) -> LinearMap:
    return LinearMap(spec, conjugation_matrix(spec))


def left_mult(a: Element) -> LinearMap:
    """``x -> a x``."""
    return from_function(a.spec, lambda e: mul(a, e))


def right_mult(a: Element) -> LinearMap:
    """``x -> x a``."""
    return from_function(a.spec, lambda e: mul(e, a))


def linear_coords(b: Element, side: Side = DEFAULT_SIDE) -> LinearMap:
    """Matrix of ``x -> x b`` (left) or ``x -> b x`` (right) from the constants."""
    _check_side(side)
    spec = b.spec
    n = spec.dim
    C = spec.constants
    rows = []
    for k in range(n):
        row = []
        for l in range(n):
            if side == "left":
                row.append(sum((C[l][j][k] * b.coords[j] for j in range(n)), Fraction(0)))
            else:
                row.append(sum((C[j][l][k] * b.coords[j] for j in range(n)), Fraction(0)))
        rows.append(row)
    return LinearMap(spec, RationalMatrix.from_rows(rows))


def antilinear_coords(b: Element, side: Side = DEFAULT_SIDE) -> LinearMap:
    """Matrix of ``x -> x* b`` (left) or ``x -> b x*`` (right)."""
    _check_side(side)
    spec = b.spec
    require_conjugation(spec)
    n = spec.dim
    C = spec.constants
    sign = [Fraction(1)] + [Fraction(-1)] * (n - 1)  # diagonal of the conjugation matrix
    rows = []
    for k in range(n):
        row = []
        for l in range(n):
            if side == "left":
                s = sum((C[l][j][k] * b.coords[j] for j in range(n)), Fraction(0))
            else:
                s = sum((C[j][l][k] * b.coords[j] for j in range(n)), Fraction(0))
            row.append(sign[l] * s)
        rows.append(row)
    return LinearMap(spec, RationalMatrix.from_rows(rows))


@dataclass(frozen=True)
class MapWitness:
    a: int          # basis index of the acting element
    x: int          # basis index of the argument
    lhs: Element
    rhs: Element
    lhs_text: str   # e.g. "f(j*1)"
    rhs_text: str   # e.g. "j*f(1)"


@dataclass(frozen=True)
class Classification:
    side: str
    antilinear: bool
    generator: Optional[Element] = None
    witness: Optional[MapWitness] = None

    @property
    def accepted(self) -> bool:
        return self.generator is not None


@lru_cache(maxsize=128)
def _associative(spec: AlgebraSpec) -> bool:
    return is_associative(spec)[0]


def require_associative(spec: AlgebraSpec) -> None:
    if not _associative(spec):
        raise NotAssociativeError(
            f"classification requires associative algebra; {spec.name!r} is not associative"
        )


def _scan(M: LinearMap, lhs_fn, rhs_fn, describe) -> Optional[MapWitness]:
    basis = M.spec.basis_elements()
    for a in range(M.spec.dim):
        for x in range(M.spec.dim):
            lhs = lhs_fn(basis[a], basis[x])
            rhs = rhs_fn(basis[a], basis[x])
            if lhs != rhs:
                return MapWitness(a, x, lhs, rhs, *describe(M.spec.basis_names[a], M.spec.basis_names[x]))
    return None


def classify_linear(M: LinearMap, side: Side = DEFAULT_SIDE) -> Classification:
    _check_side(side)
    require_associative(M.spec)
    f = M.__call__
    if side == "left":
        witness = _scan(M, lambda a, x: f(mul(a, x)), lambda a, x: mul(a, f(x)),
                        lambda a, x: (f"f({a}*{x})", f"{a}*f({x})"))
    else:
        witness = _scan(M, lambda a, x: f(mul(x, a)), lambda a, x: mul(f(x), a),
                        lambda a, x: (f"f({x}*{a})", f"f({x})*{a}"))
    if witness is not None:
        return Classification(side, False, witness=witness)
    b = f(M.spec.one())
    expected = right_mult(b) if side == "left" else left_mult(b)
    if expected.matrix != M.matrix:
        raise AssertionError(f"accepted map is not the {side} normal form of b = {b!r}")
    return Classification(side, False, generator=b)


def classify_antilinear(M: LinearMap, side: Side = DEFAULT_SIDE) -> Classification:
    _check_side(side)
    require_associative(M.spec)
    require_conjugation(M.spec)
    f = M.__call__
    if side == "left":
        witness = _scan(M, lambda a, x: f(mul(x, a)), lambda a, x: mul(conjugate(a), f(x)),
                        lambda a, x: (f"f({x}*{a})", f"conj({a})*f({x})"))
    else:
        witness = _scan(M, lambda a, x: f(mul(a, x)), lambda a, x: mul(f(x), conjugate(a)),
                        lambda a, x: (f"f({a}*{x})", f"f({x})*conj({a})"))
    if witness is not None:
        return Classification(side, True, witness=witness)
    b = f(M.spec.one())
    if antilinear_coords(b, side).matrix != M.matrix:
        raise AssertionError(f"accepted map is not the {side} antilinear normal form of b = {b!r}")
    return Classification(side, True, generator=b)
