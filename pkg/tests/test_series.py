from fractions import Fraction

import pytest

from src.errors import CacheFormatError, LeadingSliceNotInvertible, NotDivisibleInBox
from src.exact_core import gauss
from src.series import FourierSeries, laurent_divide, series_div, series_mul, series_product
from src.theta import chi5, even_theta, gradient


def monomial(e, c=1, box=4):
    return FourierSeries.monomial(e, c, box)


def test_from_terms_normalises_denominator():
    s = FourierSeries.from_terms({(0, 0, 0): Fraction(1, 2), (1, 0, 0): Fraction(3, 4)}, 2)
    assert s.coefficient((0, 0, 0)) == gauss(Fraction(1, 2))
    assert s.coefficient((1, 0, 0)) == gauss(Fraction(3, 4))
    assert s.int_parts()[2] == 4


def test_terms_outside_box_are_dropped():
    s = FourierSeries.from_terms({(0, 0, 0): 1, (3, 0, 0): 1, (0, 5, 1): 2}, 2)
    assert s.support() == [(0, 0, 0), (0, 5, 1)]
    assert len(s) == 2


def test_product_is_truncated():
    one_plus = FourierSeries.one(4) + monomial((1, 0, 0))
    one_minus = FourierSeries.one(4) - monomial((1, 0, 0))
    assert one_plus * one_minus == FourierSeries.one(4) - monomial((2, 0, 0))
    assert (monomial((3, 0, 0)) * monomial((2, 0, 0))).is_zero()


def test_power_matches_repeated_product():
    s = FourierSeries.one(4) + monomial((1, 1, 1))
    assert s ** 3 == series_product([s, s, s], 4)
    with pytest.raises(ValueError):
        s ** -1


def test_gaussian_scaling():
    s = FourierSeries.one(2).scale(gauss(0, 1))
    assert s.coefficient((0, 0, 0)) == gauss(0, 1)
    assert not s.is_real()
    assert (s * s).coefficient((0, 0, 0)) == gauss(-1)


def test_negative_floor_shrinks_product_box():
    low = FourierSeries.from_terms({(-1, 0, 0): 1}, 4)
    assert low.floor == (-1, 0)
    assert series_mul(low, FourierSeries.one(4)).box == 3


def test_restrict_and_agreement():
    theta = even_theta(1, 9)
    assert theta.restrict(4) == even_theta(1, 4)
    assert theta.agrees_with(even_theta(1, 4))
    with pytest.raises(ValueError):
        even_theta(1, 4).restrict(9)


def test_semipositivity():
    assert even_theta(3, 9).semipositive()
    assert not monomial((1, 2, 1)).semipositive()
    assert monomial((1, 1, 1)).semipositive()
    assert not monomial((1, 1, 1)).semipositive(strict=True)


def test_laurent_division():
    numerator = {3: gauss(1), -1: gauss(-1)}
    divisor = {2: gauss(1), -2: gauss(-1)}
    assert laurent_divide(numerator, divisor) == {1: gauss(1)}
    with pytest.raises(NotDivisibleInBox):
        laurent_divide({0: gauss(1)}, divisor)


def test_division_round_trip():
    a = series_mul(even_theta(2, 8), even_theta(5, 8))
    b = even_theta(1, 8)
    assert series_div(series_mul(a, b), b).agrees_with(a)


def test_division_by_chi5_loses_corner():
    a = series_mul(even_theta(4, 8), gradient(2, 8)[0])
    quotient = series_div(series_mul(a, chi5(8)), chi5(8))
    assert quotient.box == 4
    assert quotient.agrees_with(a)


def test_division_with_pole_fails():
    with pytest.raises(NotDivisibleInBox):
        series_div(FourierSeries.one(8), chi5(8))


def test_division_by_zero_series():
    with pytest.raises(LeadingSliceNotInvertible):
        series_div(FourierSeries.one(4), FourierSeries.zero(4))


def test_cache_text_round_trip():
    s = gradient(3, 4)[1].scale(Fraction(1, 3)) + FourierSeries.one(4)
    name, loaded = FourierSeries.from_cache_text(s.to_cache_text("G3.2"))
    assert name == "G3.2"
    assert loaded == s


def test_cache_text_header_line():
    lines = chi5(4).to_cache_text("chi5").splitlines()
    assert lines[0] == "TAUT1 chi5 N=4 floor=0,0"
    exponents = [tuple(int(v) for v in line.split()[:3]) for line in lines[1:]]
    assert exponents == sorted(exponents)
    assert all(len(line.split()) == 5 for line in lines[1:])


def test_cache_text_negative_floor():
    low = FourierSeries.from_terms({(-1, 0, 0): 1}, 4)
    text = low.to_cache_text("low")
    assert text.splitlines()[0] == "TAUT1 low N=4 floor=-1,0"
    assert FourierSeries.from_cache_text(text) == ("low", low)


def test_reads_hand_written_cache_text():
    name, s = FourierSeries.from_cache_text("TAUT1 x N=2 floor=0,0\n0 0 0 1/2 -3/4\n1 0 1 2/1 0/1\n")
    assert name == "x"
    assert s.box == 2
    assert s.coefficient((0, 0, 0)) == gauss(Fraction(1, 2), Fraction(-3, 4))
    assert s.coefficient((1, 0, 1)) == gauss(2)


def test_cache_names_must_be_one_token():
    with pytest.raises(ValueError):
        FourierSeries.one(2).to_cache_text("two words")


@pytest.mark.parametrize("text", [
    "",
    "# taut-series v1\nname x\nbox 1\nfloor 0 0\n",
    "TAUT1 x N=1\n",
    "TAUT1 x N=one floor=0,0\n",
    "TAUT1 x N=1 floor=0,0\n0 0 0 1/1\n",
    "TAUT1 x N=1 floor=0,0\n0 0 0 1/0 0/1\n",
])
def test_malformed_cache_text(text):
    with pytest.raises(CacheFormatError):
        FourierSeries.from_cache_text(text)
