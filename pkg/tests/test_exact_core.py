from fractions import Fraction

import pytest
from sympy.polys.domains import QQ

from src.errors import NotDivisible
from src.exact_core import (
    COV_RING,
    GENERIC_RING,
    GENERIC_X1_INDEX,
    GENERIC_X2_INDEX,
    as_gauss,
    common_denominator,
    coordinate,
    gauss,
    gauss_is_zero,
    gauss_parts,
    gauss_to_str,
    generic_form_poly,
    generic_index,
    l_index,
    poly_arith,
    poly_exact_div,
    poly_from_terms,
)


@pytest.mark.parametrize("value, text", [
    (gauss(3), "3"),
    (gauss(0, -1), "-i"),
    (gauss(0, 2), "2i"),
    (gauss(1, 2), "1+2i"),
    (gauss(Fraction(1, 2), -3), "1/2-3i"),
])
def test_gauss_to_str(value, text):
    assert gauss_to_str(value) == text


def test_gauss_parts_and_zero():
    assert gauss_parts(gauss(Fraction(-2, 3), 5)) == (Fraction(-2, 3), Fraction(5))
    assert gauss_is_zero(gauss())
    assert not gauss_is_zero(gauss(0, 1))


def test_as_gauss_accepts_plain_numbers():
    assert as_gauss(4) == gauss(4)
    assert as_gauss(Fraction(1, 3)) == gauss(Fraction(1, 3))
    value = gauss(1, 1)
    assert as_gauss(value) is value


def test_i_squared_is_minus_one():
    assert gauss(0, 1) * gauss(0, 1) == gauss(-1)


def test_common_denominator():
    assert common_denominator([gauss(Fraction(1, 2)), gauss(0, Fraction(1, 3))]) == 6
    assert common_denominator([]) == 1


def test_coordinate_positions():
    assert l_index(1, 1) == 0
    assert l_index(6, 2) == 11
    with pytest.raises(ValueError):
        l_index(7, 1)
    with pytest.raises(ValueError):
        l_index(1, 3)


def test_exact_division():
    a, b = coordinate(1, 1), coordinate(1, 2)
    assert poly_exact_div(a ** 2 - b ** 2, a - b) == a + b


def test_division_with_remainder_raises():
    a, b = coordinate(1, 1), coordinate(1, 2)
    with pytest.raises(NotDivisible):
        poly_exact_div(a ** 2 + b ** 2, a - b)
    with pytest.raises(ValueError):
        poly_exact_div(a, COV_RING.zero)


def test_poly_arith_checks_rings_and_ops():
    a, b = coordinate(2, 1), coordinate(3, 2)
    assert poly_arith(a, b, "mul") == a * b
    assert poly_arith(a, b, "sub") == a - b
    with pytest.raises(ValueError):
        poly_arith(a, b, "div")
    with pytest.raises(ValueError):
        poly_arith(a, GENERIC_RING.gens[0], "add")


def test_generic_linear_form():
    x1 = GENERIC_RING.gens[GENERIC_X1_INDEX]
    x2 = GENERIC_RING.gens[GENERIC_X2_INDEX]
    l0 = GENERIC_RING.gens[generic_index("l", 0)]
    l1 = GENERIC_RING.gens[generic_index("l", 1)]
    assert generic_form_poly("l") == l0 * x1 + l1 * x2
    with pytest.raises(ValueError):
        generic_form_poly("f7")


def test_poly_from_terms_drops_zeros():
    exponent = (1,) + (0,) * (len(COV_RING.gens) - 1)
    zero_exponent = (0,) * len(COV_RING.gens)
    poly = poly_from_terms(COV_RING, {exponent: Fraction(1, 2), zero_exponent: 0})
    assert len(poly) == 1
    assert poly == coordinate(1, 1) * QQ(1, 2)
