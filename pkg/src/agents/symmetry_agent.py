"""
Symmetry Agent
Checks the S6 character table and the isotypic decompositions of covariant spaces.
"""

from typing import Any, Dict, List, Optional

from .base_agent import AgentMessage, BaseAgent
from ..catalog import cij_family, half_w_span, named_covariant, split_sextic_transvectant, w_space_28
from ..spaces import LinearSpace, graded_space
from ..symmetry import (
    YoungPartition,
    character,
    character_table,
    decompose,
    invariant_character,
    isotypic_project,
    multiplicities_of,
    partition_label,
    project,
)

IRREDUCIBLE_DIMENSIONS: Dict[YoungPartition, int] = {
    (6,): 1, (5, 1): 5, (4, 2): 9, (4, 1, 1): 10, (3, 3): 5, (3, 2, 1): 16,
    (3, 1, 1, 1): 10, (2, 2, 2): 5, (2, 2, 1, 1): 9, (2, 1, 1, 1, 1): 5, (1, 1, 1, 1, 1, 1): 1,
}

# (d, b) -> multiplicities of C'_{d,b}
DECOMPOSITIONS: Dict[tuple, Dict[YoungPartition, int]] = {
    (1, 2): {(4, 2): 1},
    (2, 4): {(6,): 1, (5, 1): 1, (4, 2): 2, (3, 2, 1): 1},
    (2, 6): {(5, 1): 1, (4, 2): 1, (4, 1, 1): 1, (3, 3): 1},
}


def multiplicity_map(space) -> Dict[YoungPartition, int]:
    return {entry.partition: entry.multiplicity for entry in decompose(space)}


def _labels(multiplicities: Dict[YoungPartition, int]) -> Dict[str, int]:
    return {partition_label(p): m for p, m in multiplicities.items()}


class SymmetryAgent(BaseAgent):
    """Agent for characters, projections and decompositions under S6."""

    suite = "symmetry"

    def __init__(self):
        super().__init__("Symmetry")

    def process(
        self,
        input_data: Dict[str, Any],
        context: Optional[Dict[str, Any]] = None
    ) -> AgentMessage:
        gradings = [tuple(g) for g in input_data.get('gradings', list(DECOMPOSITIONS))]
        checks = [
            ("orthogonality", lambda: (character_table().orthogonality_holds(), None)),
            ("irreducible_dimensions", self._dimensions),
            ("character_values", self._character_values),
            ("invariant_characters", self._invariant_characters),
            ("invariant_dimension_formula", self._invariant_dimension_formula),
        ]
        for grading in gradings:
            checks.append((f"decompose_{grading[0]}_{grading[1]}",
                           lambda grading=grading: self._decomposition(grading)))
        checks += [
            ("s411_component_contains_C6", self._s411_component),
            ("cij_span", self._cij_span),
            ("split_sextic_is_invariant", self._split_sextic),
            ("w_space", self._w_space),
            ("half_w_span", lambda: (half_w_span().dimension == 15, {'dimension': half_w_span().dimension})),
        ]
        return self.create_message(self.run_checks(checks))

    def _dimensions(self):
        table = character_table()
        found = {p: table.dimension(p) for p in table.partitions}
        return found == IRREDUCIBLE_DIMENSIONS, _labels(found)

    def _character_values(self):
        transposition = (2, 1, 1, 1, 1)
        values = {
            's[5,1] on (12)': character((5, 1), transposition),
            's[5,1] on a 6-cycle': character((5, 1), (6,)),
            's[1^6] on (12)': character((1,) * 6, transposition),
            's[3,3] on the identity': character((3, 3), (1,) * 6),
        }
        expected = [3, -1, -1, 5]
        return list(values.values()) == expected, values

    def _invariant_characters(self):
        found = {}
        ok = True
        for d in (1, 2, 3):
            predicted = multiplicities_of(invariant_character(d))
            actual = multiplicity_map(graded_space(d, 0))
            found[d] = _labels(actual)
            ok = ok and predicted == actual
        return ok, found

    def _invariant_dimension_formula(self):
        values = {d: invariant_character(d)[(1,) * 6] for d in range(1, 7)}
        ok = all(v == (d + 1) * (d * d + 2 * d + 2) // 2 for d, v in values.items())
        return ok, {d: str(v) for d, v in values.items()}

    def _decomposition(self, grading: tuple):
        found = multiplicity_map(graded_space(*grading))
        expected = DECOMPOSITIONS.get(grading)
        ok = expected is None or found == expected
        return ok, _labels(found)

    def _s411_component(self):
        component: List = isotypic_project(graded_space(2, 6), (4, 1, 1))
        if not component:
            return False, "empty component"
        space = LinearSpace(component)
        return space.dimension == 10 and space.contains(named_covariant("C6")), {'dimension': space.dimension}

    def _cij_span(self):
        space = LinearSpace.spanned_by(cij_family())
        found = multiplicity_map(space)
        ok = space.dimension == 15 and found == {(6,): 1, (5, 1): 1, (4, 2): 1}
        return ok, {'dimension': space.dimension, 'decomposition': _labels(found)}

    def _split_sextic(self):
        C = split_sextic_transvectant()
        return project(C, (6,)) == C, None

    def _w_space(self):
        basis = w_space_28()
        found = multiplicity_map(basis)
        return len(basis) == 5 and found == {(5, 1): 1}, _labels(found)
