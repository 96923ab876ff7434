import math

import pytest

from src.catalog import named_covariant, theta4
from src.covariants import i5, linear_form
from src.errors import NonUniformDegree
from src.exact_core import T_INDEX
from src.theta import Partition6, all_partitions
from src.valuation import (
    ValuationReport,
    is_holomorphic,
    materialized_i5,
    needed_chi5_power,
    substitute,
    top_t_degree,
    v_pi,
    valuation_table,
)

SPLIT = Partition6.of((1, 2, 3), (4, 5, 6))


def test_sextic_vector_is_the_same_everywhere():
    for report in valuation_table(named_covariant("C1_6")):
        assert report.values == [2, 1, 0, -1, 0, 1, 2]
        assert report.aggregate == -1
        assert report.triples_agree


def test_gamma2_w_covariant_has_a_double_pole_everywhere():
    C = named_covariant("C2_2")
    reports = valuation_table(C)
    assert len(reports) == 10
    for report in reports:
        assert report.values == [-1, -2, -1]
        assert report.aggregate == -2
    assert needed_chi5_power(C) == 2
    assert is_holomorphic(i5() ** 2 * C)


def test_i5_factor_counts_once():
    assert all(report.values == [1] for report in valuation_table(i5()))


def test_i5_shifts_every_coefficient():
    C = named_covariant("C1_4")
    for plain, shifted in zip(valuation_table(C), valuation_table(i5() * C)):
        assert shifted.values == [v + 1 for v in plain.values]


def test_theta4_vanishes_on_its_own_divisor():
    for source in all_partitions():
        C = theta4(source)
        for target in all_partitions():
            assert v_pi(C, target).values == [4 if source == target else 0]


def test_needed_powers():
    sextic = named_covariant("C1_6")
    assert needed_chi5_power(sextic) == 1
    assert needed_chi5_power(i5() * sextic) == 0
    assert is_holomorphic(i5() * sextic)
    assert not is_holomorphic(sextic)


def test_non_uniform_degree():
    with pytest.raises(NonUniformDegree):
        v_pi(linear_form(1), SPLIT)


@pytest.mark.parametrize("primed", [False, True])
def test_top_degree_matches_substitution(primed):
    P = named_covariant("C1_6").coefficients()[3]
    substituted = substitute(P, (1, 2, 3), primed)
    expected = max(exp[T_INDEX] for exp in substituted.keys())
    assert top_t_degree(P, (1, 2, 3), primed) == expected


def test_top_degree_of_zero():
    P = named_covariant("C1_6").coefficients()[0] * 0
    assert top_t_degree(P, (1, 2, 3), False) == -math.inf


def test_report_rendering():
    report = ValuationReport(SPLIT, [math.inf, 1])
    assert report.aggregate == 1
    assert report.to_dict() == {'partition': "(123)(456)", 'values': ["inf", 1], 'aggregate': 1}


@pytest.mark.slow
def test_expanded_i5():
    assert all(report.values == [1] for report in valuation_table(materialized_i5()))
