"""Scalar/vector split and the conjugation ``d* = re d - im d``.

Conjugation is defined on every unital algebra coordinate-wise.  Whether it
reverses products, ``(ab)* = b* a*``, depends on the structural constants and
is decided by :func:`check_conjugation_algebra`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional

from .algebra import AlgebraError, AlgebraSpec, Element, embed_scalar, mul
from .exact import RationalMatrix


class ConjugationError(AlgebraError):
    """Operation needs an algebra whose conjugation reverses products."""


class CriteriaDisagreement(AssertionError):
    pass


def re_part(d: Element) -> Fraction:
    return d.coords[0]


def im_part(d: Element) -> Element:
    return Element(d.spec, (Fraction(0),) + d.coords[1:])


def decompose(d: Element) -> tuple[Fraction, Element]:
    return re_part(d), im_part(d)


def conjugate(d: Element) -> Element:
    return Element(d.spec, (d.coords[0],) + tuple(-c for c in d.coords[1:]))


def conjugation_matrix(spec: AlgebraSpec) -> RationalMatrix:
    n = spec.dim
    return RationalMatrix(
        n, n,
        tuple(Fraction(0 if r != c else (1 if r == 0 else -1)) for r in range(n) for c in range(n)),
    )


def is_in_re(d: Element) -> bool:
    return not any(d.coords[1:])


def is_in_im(d: Element) -> bool:
    return d.coords[0] == 0


def sum_with_conjugate(d: Element) -> Element:
    out = d + conjugate(d)
    assert out == embed_scalar(2 * re_part(d), d.spec)
    return out


def diff_with_conjugate(d: Element) -> Element:
    out = d - conjugate(d)
    assert out == 2 * im_part(d)
    return out


@dataclass(frozen=True)
class AntihomWitness:
    k: int
    l: int
    left: Element   # (e_k e_l)*
    right: Element  # e_l* e_k*


@dataclass(frozen=True)
class ConstantsWitness:
    k: int
    l: int
    m: int
    value: Fraction      # C^m_{kl}
    mirrored: Fraction   # C^m_{lk}
    # m == 0 needs C^0_{kl} == C^0_{lk}; m >= 1 needs C^m_{kl} == -C^m_{lk}


@dataclass
class ConjugationReport:
    antihom_witness: Optional[AntihomWitness] = None
    constants_witness: Optional[ConstantsWitness] = None
    pairs_checked: int = 0
    constants_checked: int = 0
    antihom_failures: int = 0
    constants_failures: int = 0

    @property
    def antihom_ok(self) -> bool:
        return self.antihom_witness is None

    @property
    def constants_ok(self) -> bool:
        return self.constants_witness is None

    @property
    def passed(self) -> bool:
        return self.antihom_ok and self.constants_ok


def _antihomomorphism_scan(spec: AlgebraSpec, report: ConjugationReport) -> None:
    basis = spec.basis_elements()
    for k, l in product(range(spec.dim), repeat=2):
        report.pairs_checked += 1
        left = conjugate(mul(basis[k], basis[l]))
        right = mul(conjugate(basis[l]), conjugate(basis[k]))
        if left != right:
            report.antihom_failures += 1
            if report.antihom_witness is None:
                report.antihom_witness = AntihomWitness(k, l, left, right)


def _constants_scan(spec: AlgebraSpec, report: ConjugationReport) -> None:
    C = spec.constants
    n = spec.dim
    for k, l, m in product(range(1, n), range(1, n), range(n)):
        report.constants_checked += 1
        a, b = C[k][l][m], C[l][k][m]
        ok = a == b if m == 0 else a == -b
        if not ok:
            report.constants_failures += 1
            if report.constants_witness is None:
                report.constants_witness = ConstantsWitness(k, l, m, a, b)


def antihomomorphism_witness(spec: AlgebraSpec) -> Optional[AntihomWitness]:
    """First basis pair with ``(e_k e_l)* != e_l* e_k*``, or None."""
    report = ConjugationReport()
    _antihomomorphism_scan(spec, report)
    return report.antihom_witness


def constants_witness(spec: AlgebraSpec) -> Optional[ConstantsWitness]:
    """First constant breaking the symmetric/antisymmetric form, or None."""
    report = ConjugationReport()
    _constants_scan(spec, report)
    return report.constants_witness


def check_conjugation_algebra(spec: AlgebraSpec) -> ConjugationReport:
    """Decide whether conjugation reverses products on ``spec``.

    Two independent criteria are evaluated: the product-reversal law on all
    basis pairs, and the constants form (for k, l >= 1: ``C^0_{kl}``
    symmetric, ``C^m_{kl}`` antisymmetric for m >= 1).  They must agree;
    a disagreement raises :class:`CriteriaDisagreement`.
    """
    report = ConjugationReport()
    _antihomomorphism_scan(spec, report)
    _constants_scan(spec, report)
    if report.antihom_ok != report.constants_ok:
        raise CriteriaDisagreement(
            f"{spec.name}: product-reversal check {'passed' if report.antihom_ok else 'failed'} "
            f"but constants check {'passed' if report.constants_ok else 'failed'}"
        )
    return report


@lru_cache(maxsize=128)
def has_conjugation(spec: AlgebraSpec) -> bool:
    return check_conjugation_algebra(spec).passed


def require_conjugation(spec: AlgebraSpec) -> None:
    if not has_conjugation(spec):
        raise ConjugationError(f"algebra {spec.name!r} is not an algebra with conjugation")


def norm_like(d: Element) -> Element:
    """``d d*``, which lies in the scalar part when conjugation reverses products."""
    require_conjugation(d.spec)
    out = mul(d, conjugate(d))
    if not is_in_re(out):
        raise AssertionError(f"d d* = {out!r} is not a scalar")
    if out != mul(conjugate(d), d):
        raise AssertionError("d d* != d* d")
    return out
