"""Element expressions over a chosen algebra.

Grammar (lowest to highest precedence)::

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | primary
    primary := rational | symbol | call | '(' expr ')'
    call    := name '(' expr (',' expr)* ')'

Rationals are ``p`` or ``p/q``.  Symbols are basis names.  ``*`` is always
required ("2i" is rejected) and chains associate to the left, so on a
non-associative algebra ``a*b*c`` means ``(a*b)*c``.

Calls: ``conj(x)``, ``re(x)``, ``im(x)``, ``comm(x, y)``, ``assoc(x, y, z)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .algebra import AlgebraSpec, Element, associator, commutator, embed_scalar, mul
from .conjugation import ConjugationError, conjugate, has_conjugation, im_part, re_part
from .exact import format_rational, parse_rational

CALL_ARITY = {"conj": 1, "re": 1, "im": 1, "comm": 2, "assoc": 3}
CONJUGATION_CALLS = frozenset({"conj", "re", "im"})


class ExprError(ValueError):
    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class ExprSyntaxError(ExprError):
    pass


class UnknownSymbolError(ExprError):
    pass


class CallArityError(ExprError):
    pass


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Ast"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Ast", ...]


Ast = Union[Num, Sym, Neg, BinOp, Call]

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*(),]))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, spec: Optional[AlgebraSpec]):
        self.tokens = tokenize(text)
        self.i = 0
        self.spec = spec

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.advance()
        if val != value or kind != "op":
            found = "end of input" if kind == "end" else repr(val)
            raise ExprSyntaxError(f"expected {value!r}, found {found}", pos)

    def parse(self) -> Ast:
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            hint = "; use '*' for multiplication" if kind in ("name", "num") or val == "(" else ""
            raise ExprSyntaxError(f"unexpected {val!r}{hint}", pos)
        return node

    def expr(self) -> Ast:
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.advance()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Ast:
        node = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.advance()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Ast:
        if self.peek()[:2] == ("op", "-"):
            self.advance()
            return Neg(self.factor())
        return self.primary()

    def primary(self) -> Ast:
        kind, val, pos = self.advance()
        if kind == "num":
            try:
                return Num(parse_rational(val))
            except ZeroDivisionError:
                raise ExprSyntaxError(f"zero denominator in {val!r}", pos) from None
        if kind == "name":
            if self.peek()[:2] == ("op", "("):
                return self.call(val, pos)
            if self.spec is not None and val not in self.spec.basis_names:
                raise UnknownSymbolError(f"unknown symbol {val!r}", pos)
            return Sym(val, pos)
        if (kind, val) == ("op", "("):
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(val)
        raise ExprSyntaxError(f"unexpected {found}", pos)

    def call(self, name: str, pos: int) -> Call:
        if name not in CALL_ARITY:
            raise ExprSyntaxError(f"unknown function {name!r}", pos)
        self.expect("(")
        args = [self.expr()]
        while self.peek()[:2] == ("op", ","):
            self.advance()
            args.append(self.expr())
        self.expect(")")
        if len(args) != CALL_ARITY[name]:
            raise CallArityError(
                f"{name} takes {CALL_ARITY[name]} argument(s), got {len(args)}", pos
            )
        return Call(name, tuple(args))


def parse(text: str, spec: Optional[AlgebraSpec] = None) -> Ast:
    """Parse ``text``; with ``spec`` given, symbols are checked against its basis."""
    return _Parser(text, spec).parse()


def uses_conjugation(ast: Ast) -> bool:
    if isinstance(ast, Call):
        return ast.name in CONJUGATION_CALLS or any(uses_conjugation(a) for a in ast.args)
    if isinstance(ast, Neg):
        return uses_conjugation(ast.operand)
    if isinstance(ast, BinOp):
        return uses_conjugation(ast.left) or uses_conjugation(ast.right)
    return False


def eval_ast(ast: Ast, spec: AlgebraSpec, *, force_conjugation: bool = False) -> Element:
    """Evaluate exactly.  conj/re/im need an algebra with conjugation unless forced."""
    if not force_conjugation and uses_conjugation(ast) and not has_conjugation(spec):
        raise ConjugationError(
            f"conj/re/im used on {spec.name!r}, which is not an algebra with conjugation"
        )
    return _eval(ast, spec)


def _eval(ast: Ast, spec: AlgebraSpec) -> Element:
    if isinstance(ast, Num):
        return embed_scalar(ast.value, spec)
    if isinstance(ast, Sym):
        if ast.name not in spec.basis_names:
            raise UnknownSymbolError(f"unknown symbol {ast.name!r}", ast.pos)
        return spec.basis(spec.index(ast.name))
    if isinstance(ast, Neg):
        return -_eval(ast.operand, spec)
    if isinstance(ast, BinOp):
        left, right = _eval(ast.left, spec), _eval(ast.right, spec)
        if ast.op == "+":
            return left + right
        if ast.op == "-":
            return left - right
        return mul(left, right)
    if isinstance(ast, Call):
        args = [_eval(a, spec) for a in ast.args]
        if ast.name == "conj":
            return conjugate(args[0])
        if ast.name == "re":
            return embed_scalar(re_part(args[0]), spec)
        if ast.name == "im":
            return im_part(args[0])
        if ast.name == "comm":
            return commutator(*args)
        return associator(*args)
    raise TypeError(f"not an expression node: {ast!r}")


def evaluate(text: str, spec: AlgebraSpec, *, force_conjugation: bool = False) -> Element:
    return eval_ast(parse(text, spec), spec, force_conjugation=force_conjugation)


def render(x: Element, *, explicit_mul: bool = False) -> str:
    """Canonical text of an element, e.g. ``1 - 2i - 3j - 4k`` or ``1/2 + e1``.

    Terms follow basis order; the unit term is the bare rational; coefficient
    1 is dropped on other terms.  ``explicit_mul`` writes ``2*i`` so that the
    output is also a valid expression.
    """
    parts: list[tuple[bool, str]] = []
    for idx, c in enumerate(x.coords):
        if c == 0:
            continue
        mag = abs(c)
        if idx == 0:
            body = format_rational(mag)
        elif mag == 1:
            body = x.spec.basis_names[idx]
        else:
            sep = "*" if explicit_mul else ""
            body = f"{format_rational(mag)}{sep}{x.spec.basis_names[idx]}"
        parts.append((c < 0, body))
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


_CANON_TERM = re.compile(r"(\d+(?:/\d+)?)?([A-Za-z_][A-Za-z0-9_]*)?")


def parse_element(text: str, spec: AlgebraSpec) -> Element:
    """Inverse of :func:`render` (canonical form, no ``*``)."""
    s = text.strip()
    if s == "0":
        return spec.zero()
    coords = [Fraction(0)] * spec.dim
    pieces = re.split(r" ([+-]) ", s)
    signs = ["+"] + pieces[1::2]
    terms = pieces[0::2]
    if terms[0].startswith("-"):
        signs[0] = "-"
        terms[0] = terms[0][1:]
    for sign, term in zip(signs, terms):
        m = _CANON_TERM.fullmatch(term)
        if m is None or not term:
            raise ExprSyntaxError(f"malformed term {term!r} in {text!r}")
        num, name = m.groups()
        coeff = parse_rational(num) if num else Fraction(1)
        if sign == "-":
            coeff = -coeff
        idx = 0 if name is None else spec.index(name)
        coords[idx] += coeff
    return Element(spec, tuple(coords))
