from fractions import Fraction

import pytest
from sympy.combinatorics import Permutation

from src.catalog import w_space_28
from src.covariants import i5, pluecker
from src.errors import NotClosedUnderAction
from src.spaces import graded_space
from src.symmetry import (
    DecompositionEntry,
    all_permutations,
    character,
    character_table,
    class_representative,
    class_size,
    cycle_type_of,
    decompose,
    format_decomposition,
    gamma0_dimension_from_multiplicities,
    invariant_character,
    isotypic_project,
    multiplicities_of,
    parse_partition,
    partition_label,
    partitions_of,
    project,
    symmetric_orbit_span,
)


def test_partitions_of_six():
    partitions = partitions_of(6)
    assert len(partitions) == 11
    assert partitions[0] == (6,)
    assert partitions[-1] == (1,) * 6


@pytest.mark.parametrize("partition,cycle_type,expected", [
    ((5, 1), (2, 1, 1, 1, 1), 3),
    ((5, 1), (6,), -1),
    ((1, 1, 1, 1, 1, 1), (2, 1, 1, 1, 1), -1),
    ((3, 3), (1, 1, 1, 1, 1, 1), 5),
    ((6,), (3, 2, 1), 1),
])
def test_character_values(partition, cycle_type, expected):
    assert character(partition, cycle_type) == expected


def test_character_table():
    table = character_table()
    assert table.orthogonality_holds()
    assert sum(table.dimension(p) ** 2 for p in table.partitions) == 720
    assert sum(class_size(c) for c in table.classes) == 720
    assert table.to_dict()['partitions'][0] == "s[6]"


def test_partition_labels():
    assert partition_label((4, 1, 1)) == "s[4,1,1]"
    assert parse_partition("s[4,1,1]") == (4, 1, 1)
    assert parse_partition("3, 3") == (3, 3)
    with pytest.raises(ValueError):
        parse_partition("s[4,1]")
    with pytest.raises(ValueError):
        parse_partition("1,5")


def test_cycle_types():
    assert cycle_type_of((2, 3, 1, 4, 5, 6)) == (3, 1, 1, 1)
    assert cycle_type_of(Permutation(0, 1, size=6)) == (2, 1, 1, 1, 1)
    for cycle_type in partitions_of(6):
        assert cycle_type_of(class_representative(cycle_type)) == cycle_type
    assert len(all_permutations()) == 720


def test_invariant_characters():
    assert multiplicities_of(invariant_character(1)) == {(3, 3): 1}
    assert invariant_character(0)[(1,) * 6] == Fraction(1)
    assert invariant_character(2)[(1,) * 6] == 15
    assert invariant_character(3)[(1,) * 6] == 34


def test_decompose_invariants_of_degree_one():
    entries = decompose(graded_space(1, 0))
    assert entries == [DecompositionEntry((3, 3), 1, 5)]


def test_decompose_order_two():
    entries = decompose(graded_space(1, 2))
    assert [(e.partition, e.multiplicity) for e in entries] == [((4, 2), 1)]


@pytest.mark.slow
@pytest.mark.parametrize("grading, expected, dimension", [
    ((2, 4), {(6,): 1, (5, 1): 1, (4, 2): 2, (3, 2, 1): 1}, 40),
    ((2, 6), {(5, 1): 1, (4, 2): 1, (4, 1, 1): 1, (3, 3): 1}, 29),
])
def test_decompose_degree_two(grading, expected, dimension):
    entries = decompose(graded_space(*grading))
    assert {e.partition: e.multiplicity for e in entries} == expected
    assert sum(e.multiplicity * e.dimension for e in entries) == dimension


@pytest.mark.slow
def test_w_space_is_one_copy_of_s51():
    basis = w_space_28()
    assert len(basis) == 5
    assert [(e.partition, e.multiplicity) for e in decompose(basis)] == [((5, 1), 1)]


def test_decompose_rejects_open_spans():
    with pytest.raises(NotClosedUnderAction):
        decompose([pluecker(1, 2) * pluecker(3, 4) * pluecker(5, 6)])


def test_orbit_span():
    span = symmetric_orbit_span(pluecker(1, 2) * pluecker(3, 4) * pluecker(5, 6))
    assert span.dimension == 5


def test_isotypic_project_on_degree_one_invariants():
    space = graded_space(1, 0)
    assert len(isotypic_project(space, (3, 3))) == 5
    assert isotypic_project(space, (6,)) == []


def test_sign_projection_fixes_i5():
    assert project(i5(), (1,) * 6) == i5()
    assert project(i5(), (6,)).is_zero()


def test_gamma0_dimension_from_multiplicities():
    multiplicities = {"s[6]": 1, (4, 2): 2, "s[5,1]": 3, "s[2,2,2]": 1}
    assert gamma0_dimension_from_multiplicities(multiplicities) == 4


def test_format_decomposition():
    entries = [DecompositionEntry((5, 1), 1, 5), DecompositionEntry((4, 2), 2, 9)]
    assert format_decomposition(entries) == "s[5,1]+2s[4,2]"
    assert format_decomposition([]) == "0"
    assert entries[1].to_dict() == {'partition': "s[4,2]", 'multiplicity': 2, 'dimension': 9}
