from fractions import Fraction

import pytest

from src.divisors import (
    PAIRS,
    DivisorClass,
    class_H,
    class_W,
    delta0,
    delta1,
    divisor_to_form,
    effective_class,
    parse_divisor_request,
    weight_from_class,
)
from src.theta import Partition6, all_partitions

APART_FROM_12 = ["(146)(235)", "(136)(245)", "(135)(246)", "(145)(236)", "(134)(256)", "(156)(234)"]


def test_sum_of_w_classes():
    total = DivisorClass()
    for i in range(1, 7):
        total = total + class_W(i)
    assert total == DivisorClass.build(6, 3) - delta0()


def test_w_class_boundary():
    W1 = class_W(1)
    assert W1.d(2, 3) == Fraction(-1, 4)
    assert W1.d(3, 2) == Fraction(-1, 4)
    assert W1.d(1, 2) == 0
    with pytest.raises(ValueError):
        class_W(7)
    with pytest.raises(ValueError):
        W1.d(2, 2)


def test_h_classes():
    partition = Partition6.of((1, 2, 3), (4, 5, 6))
    H = class_H(partition)
    assert H.lam == Fraction(1, 2)
    assert H.d(1, 2) == Fraction(-1, 4)
    assert H.d(1, 4) == 0
    assert sum((4 * class_H(p).d(1, 2) for p in all_partitions()), Fraction(0)) == -4


def test_boundary_adds_up_to_five_lambda():
    assert delta0() + delta1() == DivisorClass.build(0, 5)


def test_first_example():
    c, d = parse_divisor_request({'c': {label: 1 for label in APART_FROM_12}, 'd': [1, 1, 0, 0, 0, 0]})
    weight = divisor_to_form(c, d)
    assert (weight.j, weight.k) == (2, 4)
    assert weight.r[(1, 2)] == 0
    assert all(v == 1 for pair, v in weight.r.items() if pair != (1, 2))
    assert weight.admissible


def test_second_example():
    c, d = parse_divisor_request({'c': {"(123)(456)": 2}, 'd': [2, 2, 2, 0, 0, 0]})
    weight = divisor_to_form(c, d)
    assert (weight.j, weight.k) == (6, 4)
    assert weight.r == {pair: (2 if set(pair) <= {4, 5, 6} else 1) for pair in PAIRS}


def test_all_w():
    weight = divisor_to_form([0] * 10, [1] * 6)
    assert (weight.j, weight.k) == (6, 3)
    assert set(weight.r.values()) == {1}


def test_class_and_weight_agree():
    c, d = [1] * 10, [0, 1, 0, 2, 0, 1]
    from_class = weight_from_class(effective_class(c, d))
    direct = divisor_to_form(c, d)
    assert (from_class.j, from_class.k, from_class.r) == (direct.j, direct.k, direct.r)


def test_fractional_weight_is_not_admissible():
    weight = divisor_to_form([0] * 10, [1, 0, 0, 0, 0, 0])
    assert weight.k == Fraction(1, 2)
    assert not weight.admissible
    assert weight.to_dict()['k'] == "1/2"


def test_dict_coefficients():
    partition = all_partitions()[0]
    by_dict = divisor_to_form({partition: 2}, [0] * 6)
    by_list = divisor_to_form([2] + [0] * 9, [0] * 6)
    assert by_dict == by_list


@pytest.mark.parametrize("c,d", [
    ([0] * 9, [0] * 6),
    ([0] * 10, [0] * 5),
    ([-1] + [0] * 9, [0] * 6),
    ([0] * 10, [0, 0, 0, 0, 0, -2]),
])
def test_invalid_divisors(c, d):
    with pytest.raises(ValueError):
        divisor_to_form(c, d)


def test_parse_divisor_request():
    c, d = parse_divisor_request({'d': ["1/2", 0, 0, 0, 0, 1]})
    assert c == [0] * 10
    assert d[0] == Fraction(1, 2)
    with pytest.raises(ValueError):
        parse_divisor_request({'c': {"(12)(3456)": 1}})
    with pytest.raises(ValueError):
        parse_divisor_request({'d': [1, 2]})
