"""Command-line interface.

Exit codes: 0 ok, 1 parse/IO error, 2 unit axiom violated, 3 check failed,
4 precondition unmet.

The ``ALGEBRA`` argument is a path to an algebra file or, when no such file
exists, the key of a built-in algebra.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog
from .algebra import (
    AlgebraSpec,
    SpecMismatchError,
    UnitAxiomError,
    center_basis,
    is_associative,
    is_commutative,
    nucleus_basis,
    validate_spec,
)
from .conjugation import ConjugationError, CriteriaDisagreement, check_conjugation_algebra
from .exact import format_rational
from .expr import ExprError, evaluate, parse, render, uses_conjugation
from .fileformat import FileFormatError, dumps_algebra, dumps_matrix, load_algebra, load_matrix
from .mappings import (
    DEFAULT_SIDE,
    LinearMap,
    NotAssociativeError,
    classify_antilinear,
    classify_linear,
    conjugation_map,
    identity,
    left_mult,
    right_mult,
)

EXIT_OK, EXIT_PARSE, EXIT_UNIT, EXIT_CHECK, EXIT_PRECONDITION = 0, 1, 2, 3, 4


class CliExit(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code = code
        self.message = message
        super().__init__(message)


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _err(line: str) -> None:
    sys.stderr.write(line + "\n")


def read_spec(source: str) -> AlgebraSpec:
    """Load without validating the unit axiom."""
    if not Path(source).exists() and source in catalog.KEYS:
        return catalog.builtin(source).spec
    try:
        return load_algebra(source)
    except FileFormatError as exc:
        raise CliExit(EXIT_PARSE, f"error: {exc}") from None


def load_valid(source: str) -> AlgebraSpec:
    spec = read_spec(source)
    try:
        return validate_spec(spec)
    except UnitAxiomError as exc:
        raise CliExit(EXIT_UNIT, str(exc)) from None


def _names(spec: AlgebraSpec, idx) -> str:
    return "(" + ",".join(spec.basis_names[i] for i in idx) + ")"


def cmd_validate(args) -> int:
    spec = read_spec(args.algebra)
    _out(f"algebra: {spec.name}")
    _out(f"dimension: {spec.dim}")
    _out(f"basis: {' '.join(spec.basis_names)}")
    try:
        validate_spec(spec)
    except UnitAxiomError as exc:
        _out(str(exc))
        return EXIT_UNIT
    _out("unit: ok")
    comm, cw = is_commutative(spec)
    _out("commutative: yes" if comm else f"commutative: no {_names(spec, cw)}")
    assoc, aw = is_associative(spec)
    _out("associative: yes" if assoc else f"associative: no {_names(spec, aw)}")
    return EXIT_OK


def cmd_table(args) -> int:
    spec = load_valid(args.algebra)
    basis = spec.basis_elements()
    rows = [["*"] + list(spec.basis_names)]
    for i, ei in enumerate(basis):
        rows.append([spec.basis_names[i]] + [render(ei * ej) for ej in basis])
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    for r in rows:
        _out("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip())
    return EXIT_OK


def cmd_check_conjugation(args) -> int:
    spec = load_valid(args.algebra)
    try:
        report = check_conjugation_algebra(spec)
    except CriteriaDisagreement as exc:
        _out(f"algebra: {spec.name}")
        _out(f"criteria agree: NO ({exc})")
        return EXIT_CHECK
    names = spec.basis_names
    _out(f"algebra: {spec.name}")
    if report.antihom_ok:
        _out(f"antihomomorphism: PASS ({report.pairs_checked} basis pairs)")
    else:
        w = report.antihom_witness
        k, l = names[w.k], names[w.l]
        _out(f"antihomomorphism: FAIL ({k}*{l})* = {render(w.left)} but "
             f"{l}* * {k}* = {render(w.right)}")
    if report.constants_ok:
        _out(f"constants: PASS ({report.constants_checked} constants)")
    else:
        w = report.constants_witness
        rule = "C^0_kl = C^0_lk" if w.m == 0 else "C^m_kl = -C^m_lk"
        _out(f"constants: FAIL at (k={w.k},l={w.l},m={w.m}): "
             f"C^m_kl = {format_rational(w.value)}, C^m_lk = {format_rational(w.mirrored)}, "
             f"required {rule}")
    _out("criteria agree: yes")
    _out(f"verdict: {'PASS' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_CHECK


def _print_subspace(label: str, spec: AlgebraSpec, basis) -> int:
    _out(f"{label} of {spec.name}:")
    for v in basis:
        _out(render(v))
    _out(f"dimension: {len(basis)}")
    return EXIT_OK


def cmd_center(args) -> int:
    spec = load_valid(args.algebra)
    return _print_subspace("center", spec, center_basis(spec))


def cmd_nucleus(args) -> int:
    spec = load_valid(args.algebra)
    return _print_subspace("nucleus", spec, nucleus_basis(spec))


_FORMS = {
    (False, "left"): "f(x) = x*b",
    (False, "right"): "f(x) = b*x",
    (True, "left"): "f(x) = conj(x)*b",
    (True, "right"): "f(x) = b*conj(x)",
}


def cmd_classify_map(args) -> int:
    spec = load_valid(args.algebra)
    try:
        matrix = load_matrix(args.matrix)
    except FileFormatError as exc:
        raise CliExit(EXIT_PARSE, f"error: {exc}") from None
    try:
        M = LinearMap(spec, matrix)
    except SpecMismatchError as exc:
        raise CliExit(EXIT_PRECONDITION, f"error: {exc}") from None
    try:
        result = (classify_antilinear if args.anti else classify_linear)(M, args.side)
    except NotAssociativeError:
        raise CliExit(EXIT_PRECONDITION, f"error: requires associative algebra ({spec.name} is not associative)") from None
    except ConjugationError:
        raise CliExit(EXIT_PRECONDITION, f"error: requires algebra with conjugation ({spec.name} fails the conjugation check)") from None
    kind = "antilinear" if args.anti else "linear"
    if result.accepted:
        _out(f"{kind} ({args.side}): {_FORMS[(args.anti, args.side)]} with b = {render(result.generator)}")
        return EXIT_OK
    w = result.witness
    _out(f"not A★-{kind} ({args.side}): witness {w.lhs_text} = {render(w.lhs)} "
         f"but {w.rhs_text} = {render(w.rhs)}")
    return EXIT_CHECK


def cmd_eval(args) -> int:
    spec = load_valid(args.algebra)
    text = args.expr if args.expr is not None else args.expression
    if text is None:
        raise CliExit(EXIT_PARSE, "error: no expression given")
    try:
        ast = parse(text, spec)
    except ExprError as exc:
        raise CliExit(EXIT_PARSE, f"error: {exc}") from None
    if uses_conjugation(ast) and args.force_conjugation and not check_conjugation_algebra(spec).passed:
        _err(f"warning: {spec.name} is not an algebra with conjugation; conj/re/im forced")
    try:
        value = evaluate(text, spec, force_conjugation=args.force_conjugation)
    except ConjugationError as exc:
        raise CliExit(EXIT_CHECK, f"error: {exc} (use --force-conjugation)") from None
    _out(render(value))
    return EXIT_OK


def cmd_matrix(args) -> int:
    spec = load_valid(args.algebra)
    try:
        if args.left_mult is not None:
            M = left_mult(evaluate(args.left_mult, spec))
        elif args.right_mult is not None:
            M = right_mult(evaluate(args.right_mult, spec))
        elif args.conjugation:
            M = conjugation_map(spec)
        else:
            M = identity(spec)
    except ExprError as exc:
        raise CliExit(EXIT_PARSE, f"error: {exc}") from None
    except ConjugationError as exc:
        raise CliExit(EXIT_CHECK, f"error: {exc}") from None
    sys.stdout.write(dumps_matrix(M.matrix))
    return EXIT_OK


def cmd_export(args) -> int:
    try:
        spec = catalog.builtin(args.key).spec
    except KeyError as exc:
        raise CliExit(EXIT_PARSE, f"error: {exc.args[0]}") from None
    text = dumps_algebra(spec)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_list(args) -> int:
    for key in catalog.KEYS:
        e = catalog.builtin(key)
        flags = ", ".join([
            "commutative" if e.commutative else "noncommutative",
            "associative" if e.associative else "nonassociative",
            "conjugation ok" if e.conjugation_ok else "conjugation fails",
        ])
        _out(f"{key}: dim {e.spec.dim}; {flags}")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors share the parse/IO exit code; argparse's default 2 is taken
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="conjalg", description="Exact algebras with conjugation.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_algebra(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("algebra", help="algebra file or built-in key")
        sp.set_defaults(func=fn)
        return sp

    with_algebra("validate", cmd_validate, "check the unit axiom and report flags")
    with_algebra("table", cmd_table, "print the multiplication table")
    with_algebra("check-conjugation", cmd_check_conjugation, "decide whether conjugation reverses products")
    with_algebra("center", cmd_center, "basis of the center")
    with_algebra("nucleus", cmd_nucleus, "basis of the nucleus")

    sp = with_algebra("classify-map", cmd_classify_map, "classify a linear map given as a matrix")
    sp.add_argument("--matrix", required=True, help="matrix file (column l = image of e_l)")
    sp.add_argument("--side", choices=("left", "right"), default=DEFAULT_SIDE)
    sp.add_argument("--anti", action="store_true", help="classify as antilinear")

    sp = with_algebra("eval", cmd_eval, "evaluate an expression")
    sp.add_argument("expression", nargs="?")
    sp.add_argument("--expr", help="expression (alternative to the positional form)")
    sp.add_argument("--force-conjugation", action="store_true",
                    help="allow conj/re/im on algebras failing the conjugation check")

    sp = with_algebra("matrix", cmd_matrix, "print the matrix of a standard map")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--left-mult", metavar="EXPR", help="x -> a*x")
    group.add_argument("--right-mult", metavar="EXPR", help="x -> x*a")
    group.add_argument("--conjugation", action="store_true", help="x -> conj(x)")

    sp = sub.add_parser("export", help="write a built-in algebra as an algebra file")
    sp.add_argument("key", help=f"one of: {', '.join(catalog.KEYS)}")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("list", help="list built-in algebras")
    sp.set_defaults(func=cmd_list)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliExit as exc:
        if exc.message:
            _err(exc.message)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
