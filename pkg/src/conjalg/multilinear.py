"""p-linear maps ``A x ... x A -> A`` stored as basis-value tensors.

A map of arity p is fixed by its values on basis tuples, so it is stored as
``values[(i1, ..., ip)] = coords of F(e_i1, ..., e_ip)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Optional, Sequence

from .algebra import (
    AlgebraSpec,
    Element,
    SpecMismatchError,
    random_element,
    random_rational,
)


class ArityError(ValueError):
    pass


@dataclass(frozen=True)
class MultiMap:
    spec: AlgebraSpec
    arity: int
    values: dict = field(compare=False, repr=False)

    def __post_init__(self):
        n = self.spec.dim
        if self.arity < 1:
            raise ArityError("arity must be at least 1")
        if len(self.values) != n ** self.arity:
            raise ArityError(f"expected {n ** self.arity} basis tuples, got {len(self.values)}")
        for key, out in self.values.items():
            if len(key) != self.arity or len(out) != n:
                raise ArityError(f"bad tensor entry at {key}")

    def coefficient(self, k: int, *indices: int) -> Fraction:
        """Tensor entry ``F^k_{i1...ip}``."""
        return self.values[tuple(indices)][k]

    def __eq__(self, other):
        if not isinstance(other, MultiMap):
            return NotImplemented
        return (self.arity == other.arity and self.spec == other.spec
                and self.values == other.values)

    def __call__(self, *args: Element) -> Element:
        return evaluate(self, list(args))


def from_function(spec: AlgebraSpec, arity: int, fn: Callable[..., Element]) -> MultiMap:
    """Tabulate a multilinear callable on all basis tuples."""
    basis = spec.basis_elements()
    values = {
        idx: fn(*(basis[i] for i in idx)).coords
        for idx in product(range(spec.dim), repeat=arity)
    }
    return MultiMap(spec, arity, values)


def evaluate(F: MultiMap, args: Sequence[Element]) -> Element:
    if len(args) != F.arity:
        raise ArityError(f"map has arity {F.arity}, got {len(args)} arguments")
    for a in args:
        if a.spec is not F.spec and a.spec != F.spec:
            raise SpecMismatchError(f"argument from algebra {a.spec.name!r}, map over {F.spec.name!r}")
    n = F.spec.dim
    out = [Fraction(0)] * n
    supports = [[(i, c) for i, c in enumerate(a.coords) if c] for a in args]
    for combo in product(*supports):
        weight = Fraction(1)
        for _, c in combo:
            weight *= c
        vals = F.values[tuple(i for i, _ in combo)]
        for k in range(n):
            if vals[k]:
                out[k] += weight * vals[k]
    return Element(F.spec, tuple(out))


def product_map(spec: AlgebraSpec) -> MultiMap:
    n = spec.dim
    values = {(i, j): spec.constants[i][j] for i in range(n) for j in range(n)}
    return MultiMap(spec, 2, values)


def identity_map(spec: AlgebraSpec) -> MultiMap:
    return MultiMap(spec, 1, {(i,): e.coords for i, e in enumerate(spec.basis_elements())})


def zero_map(spec: AlgebraSpec, arity: int) -> MultiMap:
    zero = (Fraction(0),) * spec.dim
    return MultiMap(spec, arity, {idx: zero for idx in product(range(spec.dim), repeat=arity)})


def permute_args(F: MultiMap, perm: Sequence[int]) -> MultiMap:
    """``G(x_0, ..., x_{p-1}) = F(x_perm[0], ..., x_perm[p-1])``."""
    if sorted(perm) != list(range(F.arity)):
        raise ArityError(f"not a permutation of {F.arity} slots: {perm}")
    values = {idx: F.values[tuple(idx[p] for p in perm)] for idx in F.values}
    return MultiMap(F.spec, F.arity, values)


def _same_shape(F: MultiMap, G: MultiMap) -> None:
    if F.arity != G.arity:
        raise ArityError(f"arity mismatch: {F.arity} vs {G.arity}")
    if F.spec is not G.spec and F.spec != G.spec:
        raise SpecMismatchError("maps over different algebras")


def map_sub(F: MultiMap, G: MultiMap) -> MultiMap:
    _same_shape(F, G)
    values = {
        idx: tuple(a - b for a, b in zip(F.values[idx], G.values[idx])) for idx in F.values
    }
    return MultiMap(F.spec, F.arity, values)


def map_add(F: MultiMap, G: MultiMap) -> MultiMap:
    _same_shape(F, G)
    values = {
        idx: tuple(a + b for a, b in zip(F.values[idx], G.values[idx])) for idx in F.values
    }
    return MultiMap(F.spec, F.arity, values)


def substitute(f: MultiMap, g: MultiMap, slot: int) -> MultiMap:
    """Plug ``g`` into argument ``slot`` (1-based) of ``f``.

    The result has arity ``f.arity + g.arity - 1`` and takes g's arguments
    contiguously at position ``slot``::

        h(x1..x_{slot-1}, y1..ym, x_{slot+1}..xn) = f(x1, .., g(y1..ym), .., xn)
    """
    if f.spec is not g.spec and f.spec != g.spec:
        raise SpecMismatchError("maps over different algebras")
    if not 1 <= slot <= f.arity:
        raise ArityError(f"slot {slot} out of range 1..{f.arity}")
    n = f.spec.dim
    m = g.arity
    s = slot - 1
    values = {}
    for idx in product(range(n), repeat=f.arity + m - 1):
        head, ys, tail = idx[:s], idx[s:s + m], idx[s + m:]
        inner = g.values[ys]
        out = [Fraction(0)] * n
        for t, c in enumerate(inner):
            if not c:
                continue
            vals = f.values[head + (t,) + tail]
            for k in range(n):
                if vals[k]:
                    out[k] += c * vals[k]
        values[idx] = tuple(out)
    return MultiMap(f.spec, f.arity + m - 1, values)


def commutator_map(spec: AlgebraSpec) -> MultiMap:
    p = product_map(spec)
    return map_sub(p, permute_args(p, (1, 0)))


def associator_map(spec: AlgebraSpec) -> MultiMap:
    p = product_map(spec)
    return map_sub(substitute(p, p, 1), substitute(p, p, 2))


@dataclass
class Violation:
    slot: int  # 1-based
    kind: str  # "additivity" or "homogeneity"
    args: tuple
    scalar: Optional[Fraction] = None


@dataclass
class MultilinearityReport:
    arity: int
    trials: int
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def violating_slots(self) -> list[int]:
        return sorted({v.slot for v in self.violations})


def check_multilinearity(F: MultiMap, trials: int = 100, seed: int = 0,
                         evaluate_fn: Optional[Callable[..., Element]] = None) -> MultilinearityReport:
    """Randomized exact test of additivity and homogeneity in every slot.

    ``evaluate_fn`` replaces tensor evaluation, so arbitrary callables (or a
    deliberately corrupted evaluator) can be checked against the same harness.
    At most one violation per (slot, kind) is recorded.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    fn = evaluate_fn or (lambda *xs: evaluate(F, list(xs)))
    rng = random.Random(seed)
    report = MultilinearityReport(F.arity, trials)
    seen = set()
    for _ in range(trials):
        for s in range(F.arity):
            args = [random_element(F.spec, rng) for _ in range(F.arity)]
            u, v = random_element(F.spec, rng), random_element(F.spec, rng)
            a = random_rational(rng)

            def at(x):
                return fn(*(args[:s] + [x] + args[s + 1:]))

            if (s, "additivity") not in seen and at(u + v) != at(u) + at(v):
                seen.add((s, "additivity"))
                report.violations.append(Violation(s + 1, "additivity", tuple(args[:s] + [(u, v)] + args[s + 1:])))
            if (s, "homogeneity") not in seen and at(a * u) != a * at(u):
                seen.add((s, "homogeneity"))
                report.violations.append(Violation(s + 1, "homogeneity", tuple(args[:s] + [u] + args[s + 1:]), a))
    return report
