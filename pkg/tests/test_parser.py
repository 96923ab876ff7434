import pytest

from src.catalog import named_covariant
from src.covariants import GenericCovariant, Covariant, i5, linear_form, pluecker, transvectant, universal_sextic
from src.errors import ExpressionError
from src.parser import evaluate, format_expression, parse, read_expression_file, same_structure, tokenize

GAMMA2_W_TEXT = "50*T(T(f5,f5,4), l^2, 1) with f5=l1*l2*l3*l4*l5, l=l6"
CANONICAL = "50*T(T(f5, f5, 4), l^2, 1) with f5=l1*l2*l3*l4*l5, l=l6"


def test_canonical_format():
    expression = parse(GAMMA2_W_TEXT)
    assert format_expression(expression) == CANONICAL
    assert expression.binding_map == {"f5": (1, 2, 3, 4, 5), "l": (6,)}


@pytest.mark.parametrize("text", [
    "p12*l3 - l1*(p23 + p45*0)",
    "l1 - (l2 - l3)",
    "-p12^2 + 1/2*p12*p12",
    "(p12 + p34)^2",
    "T(q1, q1, 2) with q1=l1^2",
])
def test_format_round_trip(text):
    expression = parse(text)
    assert same_structure(parse(format_expression(expression)), expression)


def test_tokens_carry_positions():
    tokens = list(tokenize("T(l1, 3/2)"))
    assert [t.kind for t in tokens] == ["name", "lpar", "name", "comma", "number", "rpar", "end"]
    assert tokens[4].position == 6


@pytest.mark.parametrize("text,position,kind", [
    ("p12 +", 5, "syntax"),
    ("l1 $ l2", 3, "syntax"),
    ("T(l1, l2)", 8, "syntax"),
    ("q7 * l1", 0, "identifier"),
    ("T(l1, l2, 2)", 0, "arity"),
    ("T(q1, q1, 2) with f7=l1", 18, "identifier"),
    ("T(q1, q1, 2) with q1=l1*x1", 24, "identifier"),
    ("p12 l3", 4, "syntax"),
])
def test_error_positions(text, position, kind):
    with pytest.raises(ExpressionError) as info:
        parse(text)
    assert info.value.position == position
    assert info.value.kind == kind


def test_identifiers_resolve():
    assert evaluate("p12") == pluecker(1, 2)
    assert evaluate("p21") == -pluecker(1, 2)
    assert evaluate("T(l1, l2, 1)") == pluecker(1, 2)
    assert evaluate("C1_6") == universal_sextic()
    assert evaluate("I5*C1_4") == i5() * named_covariant("C1_4")


def test_with_clause_specialises():
    assert evaluate("-2*T(q1, q1, 2) with q1=l1*l2") == pluecker(1, 2) ** 2
    generic = evaluate("T(q1, q1, 2)")
    assert isinstance(generic, GenericCovariant)


def test_evaluation_errors():
    with pytest.raises(ExpressionError) as info:
        evaluate("p11")
    assert info.value.kind == "identifier"
    with pytest.raises(ExpressionError):
        evaluate("q1 + l1")
    with pytest.raises(ExpressionError):
        evaluate("p12 with q1=l1*l2")


def test_numbers_scale():
    value = evaluate("3/2*p12 - 1/2*p12")
    assert isinstance(value, Covariant)
    assert value == pluecker(1, 2)
    assert evaluate("2") == Covariant.one().scale(2)


def test_named_values():
    value = evaluate("a*l1", {"a": pluecker(2, 3)})
    assert value == pluecker(2, 3) * linear_form(1)


def test_named_values_take_part_in_order_checks():
    names = {"a": linear_form(2)}
    assert parse("T(a, l1, 1)", names).bindings == ()
    assert evaluate("T(a, l1, 1)", names) == transvectant(linear_form(2), linear_form(1), 1)
    with pytest.raises(ExpressionError):
        evaluate("T(a, l1, 2)", names)
    with pytest.raises(ExpressionError):
        parse("T(a, l1, 1)")


def test_read_expression_file(tmp_path):
    path = tmp_path / "wedge.expr"
    path.write_text("# first transvectant\nT(l1,\n  l2, 1)  # of two linear forms\n", encoding="utf-8")
    text = read_expression_file(str(path))
    assert text == "T(l1, l2, 1)"
    assert evaluate(text) == pluecker(1, 2)
    with pytest.raises(FileNotFoundError):
        read_expression_file(str(tmp_path / "missing.expr"))
