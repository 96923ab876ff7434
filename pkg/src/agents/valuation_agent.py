"""
Valuation Agent
Checks vanishing orders of catalogued covariants along the ten divisors H_pi.
"""

from typing import Any, Dict, List, Optional, Sequence

from .base_agent import AgentMessage, BaseAgent
from ..catalog import cij_covariant, named_covariant, specialized_quadric_invariants, theta4, w_generator
from ..covariants import Covariant, i5
from ..symmetry import project
from ..theta import all_partitions
from ..valuation import (
    is_holomorphic,
    materialized_i5,
    needed_chi5_power,
    v_pi,
    valuation_table,
)

SEXTIC_VALUATIONS = [2, 1, 0, -1, 0, 1, 2]
GAMMA2_W_VALUATIONS = [-1, -2, -1]


def lowest_valuation(C: Covariant):
    return min(report.aggregate for report in valuation_table(C))


class ValuationAgent(BaseAgent):
    """Agent for v_pi vectors, their additivity and the pole bounds of the catalogue."""

    suite = "valuations"

    def __init__(self):
        super().__init__("Valuations")

    def process(
        self,
        input_data: Dict[str, Any],
        context: Optional[Dict[str, Any]] = None
    ) -> AgentMessage:
        checks = [
            ("sextic_vector", lambda: self._vector_everywhere(named_covariant("C1_6"), SEXTIC_VALUATIONS)),
            ("i5_vector", lambda: self._vector_everywhere(materialized_i5(), [1])),
            ("i5_split_vector", lambda: self._vector_everywhere(i5(), [1])),
            ("theta4_kronecker", self._theta4_kronecker),
            ("gamma2_w_vector", lambda: self._vector_everywhere(named_covariant("C2_2"), GAMMA2_W_VALUATIONS)),
            ("gamma2_w_needs_chi5_squared", lambda: (needed_chi5_power(named_covariant("C2_2")) == 2, None)),
            ("sextic_needs_one_chi5", lambda: (needed_chi5_power(named_covariant("C1_6")) == 1, None)),
            ("i5_sextic_holomorphic", lambda: (is_holomorphic(i5() * named_covariant("C1_6")), None)),
            ("i5_additivity", lambda: self._additivity(["C0", "C1_4", "C1_6"])),
            ("triples_agree", self._triples_agree),
            ("simple_pole_bound", lambda: self._bounded_below(["C0", "C1_4", "H", "s42_gen", "C6"], -1)),
            ("double_poles", lambda: self._has_double_pole(["C1", "s51_gen"])),
            ("quadric_invariant_holomorphic", self._quadric_invariant),
            ("w_generator_pole_bound", lambda: self._pole_bound(w_generator(), -1)),
            ("cij_s51_projection", self._cij_projection),
        ]
        return self.create_message(self.run_checks(checks))

    def _vector_everywhere(self, C: Covariant, expected: Sequence[int]):
        reports = valuation_table(C)
        bad = [r.partition.label for r in reports if r.values != list(expected)]
        return not bad, {'expected': list(expected), 'mismatched': bad}

    def _theta4_kronecker(self):
        partitions = all_partitions()
        mismatched = []
        for source in partitions:
            C = theta4(source)
            for target in partitions:
                expected = 4 if source == target else 0
                if v_pi(C, target).values != [expected]:
                    mismatched.append(f"{source.label} on {target.label}")
        return not mismatched, {'mismatched': mismatched}

    def _additivity(self, names: List[str]):
        failures = []
        for name in names:
            P = named_covariant(name)
            plain = valuation_table(P)
            shifted = valuation_table(i5() * P)
            for a, b in zip(plain, shifted):
                if [v + 1 for v in a.values] != b.values:
                    failures.append(f"{name} on {a.partition.label}")
        return not failures, {'failures': failures}

    def _triples_agree(self):
        C = named_covariant("C1_6")
        return all(report.triples_agree for report in valuation_table(C)), None

    def _bounded_below(self, names: List[str], bound: int):
        lows = {name: lowest_valuation(named_covariant(name)) for name in names}
        return all(v >= bound for v in lows.values()), {k: str(v) for k, v in lows.items()}

    def _has_double_pole(self, names: List[str]):
        lows = {name: lowest_valuation(named_covariant(name)) for name in names}
        return all(v < -1 for v in lows.values()), {k: str(v) for k, v in lows.items()}

    def _quadric_invariant(self):
        C = specialized_quadric_invariants()["I222"]
        return is_holomorphic(C), None

    def _pole_bound(self, C: Covariant, bound: int):
        low = lowest_valuation(C)
        return low >= bound, {'lowest': str(low)}

    def _cij_projection(self):
        projected = project(cij_covariant(1, 2), (5, 1))
        if projected.is_zero():
            return False, "projection vanished"
        return self._pole_bound(projected, -1)
