"""
Expression Parser
Reads covariant expressions such as "50*T(T(f5,f5,4), l^2, 1) with f5=l1*l2*l3*l4*l5, l=l6".
"""

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple, Union

from .catalog import catalog_names, named_covariant
from .covariants import (
    Covariant,
    GenericCovariant,
    dual_variable,
    linear_form,
    pluecker,
    specialize_form,
    transvectant,
)
from .errors import ExpressionError
from .exact_core import GENERIC_FORMS

Value = Union[Fraction, Covariant, GenericCovariant]

_TOKENS = {
    "name": r"[A-Za-z_][A-Za-z0-9_]*",
    "number": r"\d+(?:/\d+)?",
    "lpar": r"\(",
    "rpar": r"\)",
    "comma": r",",
    "plus": r"\+",
    "minus": r"-",
    "star": r"\*",
    "caret": r"\^",
    "equal": r"=",
    "skip": r"\s+",
    "error": r".",
}
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{text})" for name, text in _TOKENS.items()))
_LINEAR = re.compile(r"l([1-6])")
_PLUECKER = re.compile(r"p([1-6])([1-6])")
_DUAL = re.compile(r"x([12])")


class Token(NamedTuple):
    kind: str
    value: str
    position: int


def tokenize(source: str) -> Iterator[Token]:
    """
    Split source into tokens, dropping whitespace.

    Raises:
        ExpressionError: On a character outside the language
    """
    for match in _TOKEN_RE.finditer(source):
        kind = str(match.lastgroup)
        if kind == "skip":
            continue
        if kind == "error":
            raise ExpressionError(f"unexpected character '{match.group()}'", match.start())
        yield Token(kind, match.group(), match.start())
    yield Token("end", "", len(source))


# ---------------------------------------------------------------------------
# Syntax tree


@dataclass(frozen=True)
class Name:
    ident: str
    position: int = 0


@dataclass(frozen=True)
class Number:
    value: Fraction
    position: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    position: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    position: int = 0


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int
    position: int = 0


@dataclass(frozen=True)
class Transvect:
    left: "Node"
    right: "Node"
    index: int
    position: int = 0


Node = Union[Name, Number, Neg, BinOp, Power, Transvect]


@dataclass(frozen=True)
class Expression:
    """A parsed expression and the generic forms bound by its 'with' clause."""
    body: Node
    bindings: Tuple[Tuple[str, Tuple[int, ...]], ...] = ()

    @property
    def binding_map(self) -> Dict[str, Tuple[int, ...]]:
        return dict(self.bindings)


def _strip_positions(node: Node) -> Node:
    if isinstance(node, Name):
        return Name(node.ident)
    if isinstance(node, Number):
        return Number(node.value)
    if isinstance(node, Neg):
        return Neg(_strip_positions(node.operand))
    if isinstance(node, BinOp):
        return BinOp(node.op, _strip_positions(node.left), _strip_positions(node.right))
    if isinstance(node, Power):
        return Power(_strip_positions(node.base), node.exponent)
    return Transvect(_strip_positions(node.left), _strip_positions(node.right), node.index)


def same_structure(a: Expression, b: Expression) -> bool:
    """Equality of trees ignoring source positions."""
    return (_strip_positions(a.body) == _strip_positions(b.body)) and a.bindings == b.bindings


# ---------------------------------------------------------------------------
# Recursive descent


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens: List[Token] = list(tokenize(source))
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self, kind: Optional[str] = None) -> Token:
        token = self.current
        if kind is not None and token.kind != kind:
            found = token.value or "end of input"
            raise ExpressionError(f"expected {kind}, found '{found}'", token.position)
        self.index += 1
        return token

    def natural(self) -> int:
        token = self.advance("number")
        if "/" in token.value:
            raise ExpressionError("expected a natural number", token.position)
        return int(token.value)

    def parse(self) -> Expression:
        body = self.sum()
        bindings: List[Tuple[str, Tuple[int, ...]]] = []
        if self.current.kind == "name" and self.current.value == "with":
            self.advance()
            bindings.append(self.binding())
            while self.current.kind == "comma":
                self.advance()
                bindings.append(self.binding())
        if self.current.kind != "end":
            raise ExpressionError(f"unexpected '{self.current.value}'", self.current.position)
        return Expression(body, tuple(bindings))

    def sum(self) -> Node:
        node = self.product()
        while self.current.kind in ("plus", "minus"):
            token = self.advance()
            node = BinOp("+" if token.kind == "plus" else "-", node, self.product(), token.position)
        return node

    def product(self) -> Node:
        node = self.factor()
        while self.current.kind == "star":
            token = self.advance()
            node = BinOp("*", node, self.factor(), token.position)
        return node

    def factor(self) -> Node:
        if self.current.kind == "minus":
            token = self.advance()
            return Neg(self.factor(), token.position)
        node = self.atom()
        if self.current.kind == "caret":
            token = self.advance()
            node = Power(node, self.natural(), token.position)
        return node

    def atom(self) -> Node:
        token = self.current
        if token.kind == "number":
            self.advance()
            return Number(Fraction(token.value), token.position)
        if token.kind == "lpar":
            self.advance()
            node = self.sum()
            self.advance("rpar")
            return node
        if token.kind == "name" and token.value != "with":
            self.advance()
            if token.value == "T" and self.current.kind == "lpar":
                self.advance()
                left = self.sum()
                self.advance("comma")
                right = self.sum()
                self.advance("comma")
                index = self.natural()
                self.advance("rpar")
                return Transvect(left, right, index, token.position)
            return Name(token.value, token.position)
        found = token.value or "end of input"
        raise ExpressionError(f"unexpected '{found}'", token.position)

    def binding(self) -> Tuple[str, Tuple[int, ...]]:
        name_token = self.advance("name")
        if name_token.value not in GENERIC_FORMS:
            raise ExpressionError(f"'{name_token.value}' is not a generic form", name_token.position,
                                  kind="identifier")
        self.advance("equal")
        indices: List[int] = []
        while True:
            token = self.advance("name")
            match = _LINEAR.fullmatch(token.value)
            if not match:
                raise ExpressionError(f"'{token.value}' is not a linear form", token.position,
                                      kind="identifier")
            power = 1
            if self.current.kind == "caret":
                self.advance()
                power = self.natural()
            indices += [int(match.group(1))] * power
            if self.current.kind != "star":
                break
            self.advance()
        return name_token.value, tuple(indices)


def parse(source: str, names: Optional[Dict[str, Value]] = None) -> Expression:
    """
    Parse a covariant expression.

    Args:
        source: Expression text
        names: Extra identifiers the expression may use, as passed to evaluate

    Raises:
        ExpressionError: With the character position of the first problem
    """
    expression = _Parser(source).parse()
    check_orders(expression, names)
    return expression


def read_expression_file(file_path: str) -> str:
    """
    Read an expression from a text file, joining lines and dropping '#' comments.

    Raises:
        FileNotFoundError: If the file does not exist
    """
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"File not found: {file_path}")
    with open(file_path, 'r', encoding='utf-8') as f:
        lines = [line.split("#", 1)[0].strip() for line in f]
    return " ".join(line for line in lines if line)


# ---------------------------------------------------------------------------
# Static checks


def _name_order(node: Name, names: Optional[Dict[str, Value]]) -> int:
    ident = node.ident
    if names and ident in names:
        value = names[ident]
        return 0 if isinstance(value, Fraction) else value.order
    if _LINEAR.fullmatch(ident) or _DUAL.fullmatch(ident):
        return 1
    if _PLUECKER.fullmatch(ident):
        return 0
    if ident in GENERIC_FORMS:
        return GENERIC_FORMS[ident]
    if ident in catalog_names():
        return named_covariant(ident).order
    raise ExpressionError(f"unknown identifier '{ident}'", node.position, kind="identifier")


def infer_order(node: Node, names: Optional[Dict[str, Value]] = None) -> int:
    """
    Order in x of the value of a node, without evaluating it.

    Raises:
        ExpressionError: For unknown identifiers and transvectant indices above an operand order
    """
    if isinstance(node, Name):
        return _name_order(node, names)
    if isinstance(node, Number):
        return 0
    if isinstance(node, Neg):
        return infer_order(node.operand, names)
    if isinstance(node, Power):
        return infer_order(node.base, names) * node.exponent
    if isinstance(node, BinOp):
        left = infer_order(node.left, names)
        right = infer_order(node.right, names)
        return left + right if node.op == "*" else max(left, right)
    left = infer_order(node.left, names)
    right = infer_order(node.right, names)
    if node.index > min(left, right):
        raise ExpressionError(
            f"transvectant index {node.index} exceeds operand orders {left} and {right}",
            node.position, kind="arity")
    return left + right - 2 * node.index


def check_orders(expression: Expression, names: Optional[Dict[str, Value]] = None) -> int:
    return infer_order(expression.body, names)


# ---------------------------------------------------------------------------
# Printing


_PRECEDENCE = {"+": 1, "-": 1, "*": 2}


def _format_number(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _format(node: Node, context: int) -> str:
    if isinstance(node, Name):
        return node.ident
    if isinstance(node, Number):
        return _format_number(node.value)
    if isinstance(node, Transvect):
        return f"T({_format(node.left, 0)}, {_format(node.right, 0)}, {node.index})"
    if isinstance(node, Power):
        return f"{_format(node.base, 4)}^{node.exponent}"
    if isinstance(node, Neg):
        text = "-" + _format(node.operand, 3)
        return f"({text})" if context > 3 else text
    level = _PRECEDENCE[node.op]
    left = _format(node.left, level)
    right = _format(node.right, level + 1)
    text = f"{left}*{right}" if node.op == "*" else f"{left} {node.op} {right}"
    return f"({text})" if context > level else text


def format_expression(expression: Expression) -> str:
    """Canonical text; parsing it gives back the same tree."""
    text = _format(expression.body, 0)
    if expression.bindings:
        parts = []
        for name, indices in expression.bindings:
            parts.append(f"{name}=" + "*".join(f"l{i}" for i in indices))
        text += " with " + ", ".join(parts)
    return text


# ---------------------------------------------------------------------------
# Evaluation


def _lookup(node: Name, names: Optional[Dict[str, Value]]) -> Value:
    ident = node.ident
    if names and ident in names:
        return names[ident]
    match = _LINEAR.fullmatch(ident)
    if match:
        return linear_form(int(match.group(1)))
    match = _PLUECKER.fullmatch(ident)
    if match:
        i, j = int(match.group(1)), int(match.group(2))
        if i == j:
            raise ExpressionError(f"'{ident}' needs distinct indices", node.position, kind="identifier")
        return pluecker(i, j)
    match = _DUAL.fullmatch(ident)
    if match:
        return dual_variable(int(match.group(1)))
    if ident in GENERIC_FORMS:
        return GenericCovariant.form(ident)
    try:
        return named_covariant(ident)
    except KeyError:
        raise ExpressionError(f"unknown identifier '{ident}'", node.position, kind="identifier")


def _promote(value: Value, generic: bool) -> Union[Covariant, GenericCovariant]:
    if not isinstance(value, Fraction):
        return value
    if generic:
        return GenericCovariant.constant(value)
    return Covariant.one().scale(value)


def _is_generic(value: Value) -> bool:
    return isinstance(value, GenericCovariant)


def _evaluate(node: Node, names: Optional[Dict[str, Value]]) -> Value:
    if isinstance(node, Name):
        return _lookup(node, names)
    if isinstance(node, Number):
        return node.value
    if isinstance(node, Neg):
        value = _evaluate(node.operand, names)
        return -value if isinstance(value, Fraction) else value * -1
    if isinstance(node, Power):
        return _evaluate(node.base, names) ** node.exponent
    left = _evaluate(node.left, names)
    right = _evaluate(node.right, names)
    if isinstance(node, BinOp) and isinstance(left, Fraction) and isinstance(right, Fraction):
        return {"+": left + right, "-": left - right, "*": left * right}[node.op]
    kinds = {_is_generic(v) for v in (left, right) if not isinstance(v, Fraction)}
    if len(kinds) > 1:
        raise ExpressionError("generic forms cannot be combined with linear forms before 'with'",
                              node.position, kind="identifier")
    generic = kinds.pop() if kinds else False
    if isinstance(node, BinOp) and node.op == "*":
        if isinstance(left, Fraction):
            return right * left
        if isinstance(right, Fraction):
            return left * right
        return left * right
    left, right = _promote(left, generic), _promote(right, generic)
    if isinstance(node, Transvect):
        return transvectant(left, right, node.index)
    return left + right if node.op == "+" else left - right


def evaluate(expression: Union[Expression, str],
             names: Optional[Dict[str, Value]] = None) -> Union[Covariant, GenericCovariant]:
    """
    Evaluate an expression to a covariant.

    Generic forms are evaluated symbolically and specialised through the 'with'
    clause; without one the generic covariant is returned.

    Raises:
        ExpressionError: On syntax, identifier or arity problems
        DegreeMismatch: When a sum mixes gradings
    """
    if isinstance(expression, str):
        expression = parse(expression, names)
    else:
        check_orders(expression, names)
    value = _promote(_evaluate(expression.body, names), False)
    if isinstance(value, GenericCovariant) and expression.bindings:
        return specialize_form(value, expression.binding_map)
    if isinstance(value, Covariant) and expression.bindings:
        raise ExpressionError("'with' clause given but the expression has no generic forms",
                              kind="identifier")
    return value
