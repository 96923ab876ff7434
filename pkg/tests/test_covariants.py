from fractions import Fraction

import pytest
from sympy.combinatorics import Permutation

from src.covariants import (
    Covariant,
    GenericCovariant,
    compose,
    dual_variable,
    i5,
    linear_form,
    orbit,
    pluecker,
    s6_act,
    specialize_form,
    transvectant,
    universal_sextic,
)
from src.errors import DegreeMismatch, IdenticalIndices, NonUniformDegree, OrderTooSmall
from src.exact_core import GENERIC_RING, generic_index


def f6_coefficient(j):
    return GENERIC_RING.gens[generic_index("f6", j)]


def test_first_transvectant_of_linear_forms_is_pluecker():
    assert transvectant(linear_form(1), linear_form(2), 1) == pluecker(1, 2)
    assert transvectant(linear_form(4), linear_form(3), 1) == pluecker(4, 3)


def test_pluecker_antisymmetry():
    assert pluecker(2, 1) == -pluecker(1, 2)
    with pytest.raises(IdenticalIndices):
        pluecker(3, 3)
    with pytest.raises(ValueError):
        pluecker(0, 3)


def test_pluecker_relation():
    relation = pluecker(1, 2) * pluecker(3, 4) - pluecker(1, 3) * pluecker(2, 4) + pluecker(1, 4) * pluecker(2, 3)
    assert relation.has_generators
    assert relation.is_zero()


def test_gradings():
    assert i5().grading == ((5,) * 6, 0)
    assert universal_sextic().grading == ((1,) * 6, 6)
    assert (pluecker(1, 2) * linear_form(3)).grading == ((1, 1, 1, 0, 0, 0), 1)
    assert universal_sextic().degree == 1


def test_non_uniform_degree():
    with pytest.raises(NonUniformDegree):
        linear_form(1).degree


def test_sum_of_different_gradings_fails():
    with pytest.raises(DegreeMismatch):
        linear_form(1) + linear_form(2)
    zero = Covariant.zero((1, 0, 0, 0, 0, 0), 1)
    assert linear_form(1) + zero == linear_form(1)


def test_transvectant_order_check():
    with pytest.raises(OrderTooSmall):
        transvectant(linear_form(1), linear_form(2), 2)
    with pytest.raises(ValueError):
        transvectant(linear_form(1), GenericCovariant.form("l"), 1)


def test_products_keep_generator_forms():
    product = i5() * universal_sextic()
    assert product.has_generators
    assert not product.is_materialized
    m, cofactor = product.i5_split()
    assert m == 1
    assert cofactor == universal_sextic()


def test_i5_split_without_factor():
    m, cofactor = universal_sextic().i5_split()
    assert m == 0
    assert cofactor is not None


def test_coefficients_of_linear_form():
    l1 = linear_form(1)
    P0, P1 = l1.coefficients()
    x1 = dual_variable(1).poly
    x2 = dual_variable(2).poly
    assert P0 * x1 + P1 * x2 == l1.poly


def test_sextic_fourth_transvectant_leading_coefficient():
    f6 = GenericCovariant.form("f6")
    C = transvectant(f6, f6, 4) * 75
    leading = C.coefficients()[0]
    a = f6_coefficient
    assert leading == 10 * a(0) * a(4) - 5 * a(1) * a(3) + 2 * a(2) ** 2


def test_quadric_discriminant():
    q = GenericCovariant.form("q1")
    a0, a1, a2 = (GENERIC_RING.gens[generic_index("q1", j)] for j in range(3))
    assert (transvectant(q, q, 2) * -2).poly == a1 ** 2 - 4 * a0 * a2


def test_specialize_binds_generic_forms():
    l = GenericCovariant.form("l")
    assert specialize_form(l, {"l": (3,)}) == linear_form(3)
    with pytest.raises(ValueError):
        specialize_form(l, {})
    with pytest.raises(DegreeMismatch):
        specialize_form(l, {"l": (1, 2)})


def test_specialized_quadric_transvectant():
    q = GenericCovariant.form("q1")
    specialized = specialize_form(transvectant(q, q, 2) * -2, {"q1": (1, 2)})
    assert specialized == pluecker(1, 2) ** 2


def test_s6_action_is_a_left_action():
    sigma = (2, 3, 1, 4, 6, 5)
    tau = (6, 5, 4, 3, 2, 1)
    C = pluecker(1, 4) * linear_form(2) * linear_form(6)
    assert s6_act(compose(sigma, tau), C) == s6_act(sigma, s6_act(tau, C))


def test_s6_action_on_coordinates_matches_generators():
    C = pluecker(1, 2) * linear_form(3)
    expanded = Covariant.from_poly(C.poly)
    sigma = (3, 1, 2, 4, 5, 6)
    assert s6_act(sigma, expanded).poly == s6_act(sigma, C).poly


def test_s6_action_accepts_sympy_permutations():
    swap = Permutation(0, 1, size=6)
    assert s6_act(swap, pluecker(1, 2)) == -pluecker(1, 2)
    with pytest.raises(ValueError):
        s6_act((1, 1, 2, 3, 4, 5), pluecker(1, 2))


def test_i5_is_alternating():
    assert s6_act((2, 1, 3, 4, 5, 6), i5()) == -i5()
    assert s6_act((2, 3, 1, 4, 5, 6), i5()) == i5()


def test_orbit_of_a_pluecker_coordinate():
    group = [(1, 2, 3, 4, 5, 6), (2, 1, 3, 4, 5, 6), (3, 2, 1, 4, 5, 6), (4, 2, 3, 1, 5, 6)]
    # the transposition only flips the sign of p12
    assert len(orbit(pluecker(1, 2), group)) == 3


def test_scalars_and_powers():
    p = pluecker(1, 2)
    assert (p * 2 - p) == p
    assert p ** 0 == Covariant.one()
    assert (p * Fraction(1, 2)).scale(2) == p
    with pytest.raises(ValueError):
        p ** -1
    assert "p12" in (p ** 2).to_text()
