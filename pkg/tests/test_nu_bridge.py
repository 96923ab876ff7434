from fractions import Fraction

import pytest

from src.catalog import gamma2_w_generic
from src.covariants import GenericCovariant, i5, linear_form, universal_sextic
from src.errors import FractionalResidue, NonUniformDegree, OutOfBox
from src.exact_core import gauss
from src.nu_bridge import (
    DISCRIMINANT_SCALE,
    FourierIndex,
    forms_proportional,
    fourier_coefficient,
    match_coefficients,
    mero_mul,
    nu_eval,
    profile_eval,
    proportionality_constant,
    reduce,
    symmetric_product,
)
from src.theta import gradient

N = 4


@pytest.fixture(scope="module")
def sextic_form():
    return nu_eval(universal_sextic(), N, "C1_6")


@pytest.fixture(scope="module")
def reduced_i5_sextic():
    return reduce(nu_eval(i5() * universal_sextic(), N), 6)


def test_fourier_index_parsing():
    index = FourierIndex.parse("1/2,1,3/2")
    assert index.exponent == (2, 2, 6)
    assert FourierIndex.from_exponent((4, 2, 4)) == FourierIndex.of(1, 1, 1)
    assert str(FourierIndex.of(1, 1, 1)) == "(1,1,1)"
    with pytest.raises(ValueError):
        FourierIndex.parse("1,2")
    with pytest.raises(ValueError):
        FourierIndex.of(Fraction(1, 3), 0, 0).exponent


def test_fourier_index_semipositivity():
    assert FourierIndex.of(1, 1, 1).semipositive
    assert FourierIndex.of(1, 2, 1).semipositive
    assert not FourierIndex.of(0, 1, 0).semipositive


def test_sextic_weight(sextic_form):
    assert sextic_form.weight == (6, -2)
    assert sextic_form.chi5_exponent == 1
    assert sextic_form.chi5_numerator_power == 0
    assert sextic_form.order == 6
    assert sextic_form.box == N


def test_i5_factor_stays_symbolic():
    F = nu_eval(i5() * universal_sextic(), N)
    assert F.weight == (6, 3)
    assert F.chi5_exponent == 6
    assert F.chi5_numerator_power == 6
    assert F.is_holomorphic_candidate()


def test_reduced_i5_sextic_is_a_symmetric_product(reduced_i5_sextic):
    expected = symmetric_product([gradient(i, N) for i in range(1, 7)], N)
    assert reduced_i5_sextic.chi5_exponent == 0
    assert reduced_i5_sextic.chi5_numerator_power == 0
    for component, value in zip(reduced_i5_sextic.components, expected):
        assert component == value.scale(DISCRIMINANT_SCALE)


def test_fourier_coefficients(reduced_i5_sextic, sextic_form):
    vector = fourier_coefficient(reduced_i5_sextic, FourierIndex.of(1, 1, 1))
    assert len(vector) == 7
    with pytest.raises(OutOfBox):
        fourier_coefficient(reduced_i5_sextic, FourierIndex.of(2, 0, 1))
    with pytest.raises(ValueError):
        fourier_coefficient(sextic_form, FourierIndex.of(1, 1, 1))


def test_reduce_bounds(sextic_form):
    with pytest.raises(ValueError):
        reduce(sextic_form, 2)
    with pytest.raises(ValueError):
        reduce(sextic_form, -1)
    assert reduce(sextic_form, 0).chi5_exponent == 1


def test_nu_requires_uniform_degree():
    with pytest.raises(NonUniformDegree):
        nu_eval(linear_form(1), N)


def test_products_add_weights(sextic_form):
    square = mero_mul(sextic_form, sextic_form)
    assert square.weight == (12, -4)
    assert square.chi5_exponent == 2
    assert square.order == 12


def test_proportionality(sextic_form):
    assert forms_proportional(sextic_form, sextic_form.scale(3)) == gauss(Fraction(1, 3))
    a = list(sextic_form.components)
    assert proportionality_constant(a, [c.scale(gauss(0, 2)) for c in a]) == gauss(0, Fraction(-1, 2))
    assert proportionality_constant(a, a[:2]) is None


def test_match_against_own_coefficients(reduced_i5_sextic):
    index = FourierIndex.of(1, 1, 1)
    targets = {index: fourier_coefficient(reduced_i5_sextic, index)}
    match = match_coefficients([reduced_i5_sextic], targets)
    assert match.matched
    assert match.to_dict()['matched'] is True
    with pytest.raises(ValueError):
        match_coefficients([], targets)


def test_profile_needs_integral_chi5_exponent():
    with pytest.raises(FractionalResidue):
        profile_eval("gamma2_w", GenericCovariant.form("f5"), N)


def test_profile_errors():
    with pytest.raises(ValueError):
        profile_eval("gamma5", GenericCovariant.form("f5"), N)
    with pytest.raises(ValueError):
        profile_eval("gamma2_w", GenericCovariant.form("q1"), N)


def test_gamma2_w_profile_exponent():
    F = profile_eval("gamma2_w", gamma2_w_generic(), N)
    assert F.chi5_exponent == 2
    assert F.order == 2
