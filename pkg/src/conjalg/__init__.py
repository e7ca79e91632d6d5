"""Exact arithmetic for finite-dimensional unital algebras with conjugation."""

from .algebra import (
    AlgebraError,
    AlgebraSpec,
    Element,
    SpecError,
    SpecMismatchError,
    UnitAxiomError,
    add,
    associator,
    center_basis,
    commutator,
    embed_scalar,
    is_associative,
    is_commutative,
    mul,
    nucleus_basis,
    scale,
    sub,
    validate_spec,
)
from .catalog import CatalogEntry, builtin
from .conjugation import (
    ConjugationError,
    ConjugationReport,
    check_conjugation_algebra,
    conjugate,
    conjugation_matrix,
    decompose,
    diff_with_conjugate,
    im_part,
    is_in_im,
    is_in_re,
    norm_like,
    re_part,
    sum_with_conjugate,
)
from .exact import RationalMatrix, nullspace, parse_rational, rank
from .expr import eval_ast, parse, parse_element, render
from .mappings import (
    LinearMap,
    NotAssociativeError,
    antilinear_coords,
    apply,
    classify_antilinear,
    classify_linear,
    left_mult,
    linear_coords,
    right_mult,
)
from .multilinear import (
    MultiMap,
    check_multilinearity,
    evaluate,
    map_sub,
    product_map,
    substitute,
)

__version__ = "0.1.0"
