"""Independent oracles and generators shared by the test modules.

Nothing here reads structural constants: products are computed from the
textbook formulas on plain tuples.
"""

import random
from fractions import Fraction
from itertools import product

import sympy

from conjalg.algebra import AlgebraSpec, Element, random_element, random_rational


def hamilton(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def qconj(p):
    return (p[0], -p[1], -p[2], -p[3])


def _qadd(p, q):
    return tuple(x + y for x, y in zip(p, q))


def _qsub(p, q):
    return tuple(x - y for x, y in zip(p, q))


def octonion_product(x, y):
    """(a, b)(c, d) = (ac - d* b, d a + b c*) over Hamilton quaternions."""
    a, b = tuple(x[:4]), tuple(x[4:])
    c, d = tuple(y[:4]), tuple(y[4:])
    first = _qsub(hamilton(a, c), hamilton(qconj(d), b))
    second = _qadd(hamilton(d, a), hamilton(b, qconj(c)))
    return first + second


def complex_product(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def matmul2(p, q):
    return tuple(tuple(sum(p[r][t] * q[t][c] for t in range(2)) for c in range(2)) for r in range(2))


def random_unital_spec(rng: random.Random, n: int, values=(-1, 0, 1), name="random") -> AlgebraSpec:
    """Constants drawn from ``values`` with the unit row and column forced."""
    table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j in product(range(n), repeat=2):
        for k in range(n):
            if i == 0:
                table[i][j][k] = Fraction(int(k == j))
            elif j == 0:
                table[i][j][k] = Fraction(int(k == i))
            else:
                table[i][j][k] = Fraction(rng.choice(values))
    names = ["1"] + [f"e{m}" for m in range(1, n)]
    return AlgebraSpec(name, tuple(names), tuple(tuple(tuple(c) for c in row) for row in table))


def random_conjugation_spec(rng: random.Random, n: int, values=(-1, 0, 1)) -> AlgebraSpec:
    """Random unital spec forced into the symmetric/antisymmetric constants form."""
    spec = random_unital_spec(rng, n, values)
    table = [[list(cell) for cell in row] for row in spec.constants]
    for k in range(1, n):
        for l in range(k, n):
            for m in range(n):
                if m == 0:
                    table[l][k][0] = table[k][l][0]
                elif k == l:
                    table[k][k][m] = Fraction(0)
                else:
                    table[l][k][m] = -table[k][l][m]
    return AlgebraSpec("random_conj", spec.basis_names,
                       tuple(tuple(tuple(c) for c in row) for row in table))


def sympy_subspace_dim(spec, with_commutator):
    """Dimension of the nucleus/center from the definition, solved by sympy."""
    xs = sympy.symbols(f"x0:{spec.dim}")
    basis = [tuple(int(t == m) for t in range(spec.dim)) for m in range(spec.dim)]

    def prod(u, v):
        out = [0] * spec.dim
        for i, j, k, c in spec.nonzero_constants():
            out[k] += u[i] * v[j] * sympy.Rational(c.numerator, c.denominator)
        return out

    def assoc(u, v, w):
        return [sympy.expand(a - b) for a, b in zip(prod(prod(u, v), w), prod(u, prod(v, w)))]

    eqs = []
    for ei, ej in product(basis, repeat=2):
        eqs += assoc(xs, ei, ej) + assoc(ei, xs, ej) + assoc(ei, ej, xs)
    if with_commutator:
        for ei in basis:
            eqs += [sympy.expand(a - b) for a, b in zip(prod(xs, ei), prod(ei, xs))]
    eqs = [e for e in eqs if e != 0]
    if not eqs:
        return spec.dim
    A, _ = sympy.linear_eq_to_matrix(eqs, xs)
    return spec.dim - A.rank()


__all__ = [
    "Element",
    "complex_product",
    "hamilton",
    "matmul2",
    "octonion_product",
    "qconj",
    "random_conjugation_spec",
    "random_element",
    "random_rational",
    "random_unital_spec",
    "sympy_subspace_dim",
]
