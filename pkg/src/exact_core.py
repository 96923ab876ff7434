"""
Exact Core
Gaussian rationals, the coordinate and generic-coefficient polynomial rings, and exact division.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import Dict, List, Tuple, Union

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from .errors import NotDivisible

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, "GaussRat"]

# Elements of Q(i); arithmetic is exact, there is no ordering.
GaussRat = QQ_I.dtype

LINEAR_FORMS = (1, 2, 3, 4, 5, 6)

# Coordinates of the six linear forms l_i = l_{i1} x1 + l_{i2} x2, then the dual
# variables, then the auxiliary variable used by the valuation substitutions.
COORDINATE_NAMES: Tuple[str, ...] = tuple(
    f"l{i}{k}" for i in LINEAR_FORMS for k in (1, 2)
) + ("x1", "x2", "t")

COV_RING = PolyRing(",".join(COORDINATE_NAMES), QQ)
X1_INDEX = 12
X2_INDEX = 13
T_INDEX = 14

# Generic binary forms: name -> order. Coefficients are named <form>_<j> and
# multiply x1^(n-j) x2^j.
GENERIC_FORMS: Dict[str, int] = {
    "f6": 6,
    "f5": 5,
    "l": 1,
    "q1": 2,
    "q2": 2,
    "q3": 2,
}

GENERIC_NAMES: Tuple[str, ...] = tuple(
    f"{name}_{j}" for name, order in GENERIC_FORMS.items() for j in range(order + 1)
) + ("x1", "x2")

GENERIC_RING = PolyRing(",".join(GENERIC_NAMES), QQ)
GENERIC_X1_INDEX = len(GENERIC_NAMES) - 2
GENERIC_X2_INDEX = len(GENERIC_NAMES) - 1


def l_index(i: int, k: int) -> int:
    """Position of the coordinate l_{ik} in COV_RING exponent tuples."""
    if i not in LINEAR_FORMS or k not in (1, 2):
        raise ValueError(f"No coordinate l{i}{k}")
    return 2 * (i - 1) + (k - 1)


def generic_index(form: str, j: int) -> int:
    """Position of the coefficient <form>_<j> in GENERIC_RING exponent tuples."""
    return GENERIC_NAMES.index(f"{form}_{j}")


def coordinate(i: int, k: int) -> PolyElement:
    return COV_RING.gens[l_index(i, k)]


def linear_form_poly(i: int) -> PolyElement:
    """The polynomial l_{i1} x1 + l_{i2} x2."""
    x1, x2 = COV_RING.gens[X1_INDEX], COV_RING.gens[X2_INDEX]
    return coordinate(i, 1) * x1 + coordinate(i, 2) * x2


def generic_form_poly(form: str) -> PolyElement:
    """The generic form sum_j <form>_j x1^(n-j) x2^j in GENERIC_RING."""
    if form not in GENERIC_FORMS:
        raise ValueError(f"Unknown generic form: {form}")
    n = GENERIC_FORMS[form]
    x1 = GENERIC_RING.gens[GENERIC_X1_INDEX]
    x2 = GENERIC_RING.gens[GENERIC_X2_INDEX]
    result = GENERIC_RING.zero
    for j in range(n + 1):
        result += GENERIC_RING.gens[generic_index(form, j)] * x1 ** (n - j) * x2 ** j
    return result


# ---------------------------------------------------------------------------
# Gaussian rationals


def to_rational(value: Union[int, Fraction]) -> "QQ.dtype":
    """Convert an int or Fraction into a QQ element."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ(int(value))


def gauss(re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0) -> GaussRat:
    """Build re + i*im as an exact Gaussian rational."""
    return QQ_I(to_rational(re), to_rational(im))


def as_gauss(value: Scalar) -> GaussRat:
    """Coerce int, Fraction, QQ or Gaussian rational input."""
    if isinstance(value, GaussRat):
        return value
    if isinstance(value, (int, Fraction)):
        return gauss(value)
    return QQ_I.convert(value)


def gauss_parts(value: GaussRat) -> Tuple[Fraction, Fraction]:
    """Real and imaginary parts as Fractions."""
    return (Fraction(int(value.x.numerator), int(value.x.denominator)),
            Fraction(int(value.y.numerator), int(value.y.denominator)))


def gauss_is_zero(value: GaussRat) -> bool:
    return value.x == 0 and value.y == 0


def gauss_to_str(value: GaussRat) -> str:
    """Human readable form such as 3/2, -i or 1+2i."""
    re, im = gauss_parts(value)
    if im == 0:
        return str(re)
    im_text = "" if abs(im) == 1 else str(abs(im))
    if re == 0:
        return f"{'-' if im < 0 else ''}{im_text}i"
    return f"{re}{'-' if im < 0 else '+'}{im_text}i"


def common_denominator(values: List[GaussRat]) -> int:
    """Least common denominator of all real and imaginary parts."""
    den = 1
    for value in values:
        den = lcm(den, int(value.x.denominator), int(value.y.denominator))
    return den


# ---------------------------------------------------------------------------
# Polynomials


def poly_arith(a: PolyElement, b: PolyElement, op: str) -> PolyElement:
    """
    Ring operation on sparse polynomials over the same variable set.

    Args:
        a: Left operand
        b: Right operand
        op: One of 'add', 'sub', 'mul'

    Returns:
        Result polynomial, zero terms removed

    Raises:
        ValueError: If the operands live in different rings or op is unknown
    """
    if a.ring != b.ring:
        raise ValueError("Polynomials over incompatible variable sets")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"Unknown polynomial operation: {op}")


def poly_exact_div(a: PolyElement, b: PolyElement) -> PolyElement:
    """
    Exact polynomial division a / b.

    Raises:
        NotDivisible: If b does not divide a
        ValueError: If b is zero or the rings differ
    """
    if a.ring != b.ring:
        raise ValueError("Polynomials over incompatible variable sets")
    if not b:
        raise ValueError("Division by the zero polynomial")
    try:
        return a.exquo(b)
    except ExactQuotientFailed as exc:
        raise NotDivisible(f"{b.as_expr()} does not divide {a.as_expr()}") from exc


def poly_from_terms(ring: PolyRing, terms: Dict[Tuple[int, ...], Union[int, Fraction]]) -> PolyElement:
    """Build a polynomial from an exponent -> coefficient mapping."""
    return ring.from_dict({exp: to_rational(c) for exp, c in terms.items() if c != 0})
