from collections import Counter
from itertools import combinations
from math import prod

import pytest

from src.errors import IdenticalIndices
from src.exact_core import gauss
from src.theta import (
    EVEN_CHARACTERISTICS,
    ODD_CHARACTERISTICS,
    Partition6,
    all_partitions,
    char_partition_table,
    chi5,
    even_theta,
    gradient,
    partition_index,
    pluecker_sign_table,
    pluecker_theta_sign,
    pluecker_tilde,
    quadruple_for_pair,
)
from src.series import series_product


def test_characteristic_parities():
    assert len(EVEN_CHARACTERISTICS) == 10
    assert len(ODD_CHARACTERISTICS) == 6
    assert all(c.parity == 0 for c in EVEN_CHARACTERISTICS)
    assert all(c.parity == 1 for c in ODD_CHARACTERISTICS)


def test_first_theta_constant():
    theta = even_theta(1, 4)
    assert theta.terms == {
        (0, 0, 0): gauss(1),
        (4, 0, 0): gauss(2),
        (0, 0, 4): gauss(2),
        (4, 4, 4): gauss(2),
        (4, -4, 4): gauss(2),
    }


def test_gradient_components_are_imaginary():
    g1, g2 = gradient(1, 4)
    assert g2.coefficient((0, 0, 1)) == gauss(0, 2)
    assert not g2.is_real()
    assert g1.coefficient((0, 0, 1)) == gauss(0)


@pytest.mark.parametrize("call", [
    lambda: even_theta(0, 4),
    lambda: even_theta(11, 4),
    lambda: even_theta(1, -1),
    lambda: gradient(7, 4),
])
def test_invalid_arguments(call):
    with pytest.raises(ValueError):
        call()


def test_wedge_needs_distinct_indices():
    with pytest.raises(IdenticalIndices):
        pluecker_tilde(2, 2, 4)
    with pytest.raises(IdenticalIndices):
        quadruple_for_pair(3, 3)


def test_wedge_is_antisymmetric():
    assert pluecker_tilde(2, 5, 6) == -pluecker_tilde(5, 2, 6)


def test_chi5_leading_slice():
    corner, lead = chi5(8).lowest_slice()
    assert corner == (4, 4)
    assert lead == {2: gauss(1), -2: gauss(-1)}
    assert chi5(8).is_real()


def test_chi5_is_cuspidal():
    assert chi5(12).semipositive(strict=True)


def test_partition_table():
    table = char_partition_table()
    assert len(set(table.values())) == 10
    assert table[7].label == "(123)(456)"
    for index, partition in table.items():
        assert partition_index(partition) == index


def test_every_pair_lies_in_four_partitions():
    for a, b in combinations(range(1, 7), 2):
        assert len(quadruple_for_pair(a, b)) == 4
    assert quadruple_for_pair(1, 2) == (7, 8, 9, 10)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition6.of((1, 2, 3), (3, 4, 5))
    p = Partition6.from_triple((4, 5, 6))
    assert p == Partition6.of((1, 2, 3), (4, 5, 6))
    assert p.same_triple(5, 6) and not p.same_triple(3, 4)
    assert len(all_partitions()) == 10


@pytest.mark.slow
def test_wedges_are_theta_quadruples():
    for a, b in combinations(range(1, 7), 2):
        assert pluecker_theta_sign(a, b, 8) != 0


def test_each_theta_sits_in_six_quadruples():
    counts = Counter(i for a, b in combinations(range(1, 7), 2) for i in quadruple_for_pair(a, b))
    assert counts == {i: 6 for i in range(1, 11)}


@pytest.mark.slow
def test_sign_table_over_all_pairs():
    table = pluecker_sign_table(8)
    assert len(table) == 15
    assert set(table.values()) <= {1, -1}
    assert table[(1, 2)] == 1
    # with chi5 = -2^-6 * prod theta this is the whole wedge-product identity
    assert prod(table.values()) == -1


@pytest.mark.stretch
def test_wedge_product_is_chi5_sixth_power():
    N = 28
    product = series_product((pluecker_tilde(a, b, N) for a, b in combinations(range(1, 7), 2)), N)
    expected = (chi5(N) ** 6).scale(-(2 ** 36))
    assert not expected.is_zero()
    assert product.agrees_with(expected)
