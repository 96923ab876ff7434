"""
Divisor Agent
Checks the divisor class calculus and its conversion to form weights.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional

from .base_agent import AgentMessage, BaseAgent
from ..divisors import (
    PAIRS,
    DivisorClass,
    class_H,
    class_W,
    delta0,
    delta1,
    divisor_to_form,
    effective_class,
    weight_from_class,
)
from ..theta import all_partitions


def partition_vector(coefficients: Dict[str, int]) -> List[int]:
    """Ten H-coefficients from a {label: value} mapping."""
    return [coefficients.get(p.label, 0) for p in all_partitions()]


# Six H's keeping 1 and 2 apart, plus W1 + W2.
FIRST_EXAMPLE = {
    'c': partition_vector({
        "(146)(235)": 1, "(136)(245)": 1, "(135)(246)": 1,
        "(145)(236)": 1, "(134)(256)": 1, "(156)(234)": 1,
    }),
    'd': [1, 1, 0, 0, 0, 0],
}
# 2 H_(123)(456) + 2 (W1 + W2 + W3)
SECOND_EXAMPLE = {
    'c': partition_vector({"(123)(456)": 2}),
    'd': [2, 2, 2, 0, 0, 0],
}


class DivisorAgent(BaseAgent):
    """Agent for the divisor classes of H_pi, W_i and the boundary."""

    suite = "divisors"

    def __init__(self):
        super().__init__("Divisors")

    def process(
        self,
        input_data: Dict[str, Any],
        context: Optional[Dict[str, Any]] = None
    ) -> AgentMessage:
        checks = [
            ("sum_of_w", self._sum_of_w),
            ("w1_boundary", self._w1_boundary),
            ("h_lambda", lambda: (all(class_H(p).lam == Fraction(1, 2) for p in all_partitions()), None)),
            ("h_boundary_total", self._h_boundary_total),
            ("boundary_sum", lambda: (delta0() + delta1() == DivisorClass.build(0, 5), None)),
            ("first_example", self._first_example),
            ("second_example", self._second_example),
            ("class_agrees_with_weight", self._class_agrees),
            ("zero_divisor", self._zero_divisor),
            ("all_w", self._all_w),
        ]
        return self.create_message(self.run_checks(checks))

    def _sum_of_w(self):
        total = DivisorClass()
        for i in range(1, 7):
            total = total + class_W(i)
        expected = DivisorClass.build(6, 3) - delta0()
        return total == expected, total.to_dict()

    def _w1_boundary(self):
        W1 = class_W(1)
        return W1.d(2, 3) == Fraction(-1, 4) and W1.d(1, 2) == 0, W1.to_dict()

    def _h_boundary_total(self):
        """Summing 4 H_pi . D_12 over all pi gives -4."""
        total = sum((4 * class_H(p).d(1, 2) for p in all_partitions()), Fraction(0))
        return total == -4, {'total': str(total)}

    def _first_example(self):
        weight = divisor_to_form(FIRST_EXAMPLE['c'], FIRST_EXAMPLE['d'])
        r_ok = all(v == (0 if pair == (1, 2) else 1) for pair, v in weight.r.items())
        return (weight.j, weight.k) == (2, 4) and r_ok, weight.to_dict()

    def _second_example(self):
        weight = divisor_to_form(SECOND_EXAMPLE['c'], SECOND_EXAMPLE['d'])
        expected_r = {pair: (2 if set(pair) <= {4, 5, 6} else 1) for pair in PAIRS}
        expected_class = DivisorClass.build(6, 4, {pair: -1 for pair in PAIRS}) - DivisorClass.build(
            0, 0, {pair: 1 for pair in PAIRS if set(pair) <= {4, 5, 6}})
        found_class = effective_class(SECOND_EXAMPLE['c'], SECOND_EXAMPLE['d'])
        ok = (weight.j, weight.k) == (6, 4) and found_class == expected_class
        ok = ok and weight.r == expected_r
        return ok, weight.to_dict()

    def _class_agrees(self):
        for example in (FIRST_EXAMPLE, SECOND_EXAMPLE):
            from_class = weight_from_class(effective_class(example['c'], example['d']))
            direct = divisor_to_form(example['c'], example['d'])
            if (from_class.j, from_class.k, from_class.r) != (direct.j, direct.k, direct.r):
                return False, from_class.to_dict()
        return True, None

    def _zero_divisor(self):
        weight = divisor_to_form([0] * 10, [0] * 6)
        return weight.j == 0 and weight.k == 0 and not any(weight.r.values()), None

    def _all_w(self):
        weight = divisor_to_form([0] * 10, [1] * 6)
        return (weight.j, weight.k) == (6, 3) and all(v == 1 for v in weight.r.values()), weight.to_dict()
