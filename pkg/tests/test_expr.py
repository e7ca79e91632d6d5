from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjalg.algebra import associator, mul
from conjalg.catalog import KEYS, builtin
from conjalg.conjugation import ConjugationError
from conjalg.expr import (
    BinOp,
    Call,
    CallArityError,
    ExprSyntaxError,
    Neg,
    Num,
    Sym,
    UnknownSymbolError,
    eval_ast,
    evaluate,
    parse,
    parse_element,
    render,
)


def test_parse_shapes():
    ast = parse("1 + 2*i - 3*j")
    assert ast == BinOp("-", BinOp("+", Num(Fraction(1)), BinOp("*", Num(Fraction(2)), Sym("i", 6))),
                        BinOp("*", Num(Fraction(3)), Sym("j", 12)))
    assert parse("conj(i*j)") == Call("conj", (BinOp("*", Sym("i", 5), Sym("j", 7)),))
    assert parse("--i") == Neg(Neg(Sym("i", 2)))
    assert parse(" 1/2 ") == Num(Fraction(1, 2))


def test_precedence():
    assert parse("1 + 2*3") == BinOp("+", Num(Fraction(1)), BinOp("*", Num(Fraction(2)), Num(Fraction(3))))
    assert parse("-i*j") == BinOp("*", Neg(Sym("i", 1)), Sym("j", 3))


def test_arity_error():
    with pytest.raises(CallArityError):
        parse("assoc(i, j)")
    with pytest.raises(CallArityError):
        parse("conj(i, j)")


@pytest.mark.parametrize("text", ["2i", "i j", "(1 + i", "1 +", "", "1 ** 2", "foo(i)", "1.5", "i)", ",", "1/0"])
def test_syntax_errors(text):
    with pytest.raises(ExprSyntaxError):
        parse(text)


def test_syntax_error_position():
    with pytest.raises(ExprSyntaxError) as info:
        parse("1 + 2i")
    assert info.value.position == 5


def test_unknown_symbol(H):
    with pytest.raises(UnknownSymbolError):
        parse("x + 1", H)
    with pytest.raises(UnknownSymbolError):
        eval_ast(parse("x"), H)


def test_eval_examples(H, O):
    assert evaluate("comm(i, j)", H) == 2 * H.basis(3)
    assert evaluate("conj(1 + 2*i + 3*j + 4*k)", H) == H.element([1, -2, -3, -4])
    e = O.basis_elements()
    assert evaluate("assoc(e1, e2, e4)", O) == associator(e[1], e[2], e[4])
    assert evaluate("0*i", H).is_zero()
    assert evaluate("re(3 + i)", H) == H.element([3, 0, 0, 0])
    assert evaluate("im(3 + i)", H) == H.basis(1)


def test_left_association_on_octonions(O):
    e = O.basis_elements()
    assert evaluate("e1*e2*e4", O) == mul(mul(e[1], e[2]), e[4])
    assert evaluate("e1*e2*e4", O) != evaluate("e1*(e2*e4)", O)


def test_conjugation_guard():
    spec = builtin("idempotent").spec
    with pytest.raises(ConjugationError):
        evaluate("conj(e1)", spec)
    with pytest.raises(ConjugationError):
        evaluate("1 + re(e1)", spec)
    assert evaluate("conj(e1)", spec, force_conjugation=True) == -spec.basis(1)
    assert evaluate("comm(e1, e1)", spec).is_zero()


def test_render_examples(H, O):
    assert render(H.element([1, -2, -3, -4])) == "1 - 2i - 3j - 4k"
    assert render(H.zero()) == "0"
    assert render(H.element([0, 0, 0, 2])) == "2k"
    assert render(H.element([0, -1, 0, 0])) == "-i"
    assert render(H.element([Fraction(-1, 2), 1, 0, Fraction(3, 4)])) == "-1/2 + i + 3/4k"
    assert render(O.element([0, 0, 0, 0, 0, 0, 0, 2])) == "2e7"
    assert render(H.element([1, -2, 0, 1]), explicit_mul=True) == "1 - 2*i + k"


coords = st.fractions(max_denominator=12).filter(lambda q: abs(q.numerator) < 1000)


@settings(max_examples=60)
@given(st.sampled_from(KEYS), st.data())
def test_render_round_trips(key, data):
    spec = builtin(key).spec
    x = spec.element(data.draw(st.lists(coords, min_size=spec.dim, max_size=spec.dim)))
    assert parse_element(render(x), spec) == x
    assert evaluate(render(x, explicit_mul=True), spec) == x
