"""
Intermediate Level Agent
Checks the quadric-invariant construction for Gamma0[2] and the Gamma2[w] covariant.
"""

from fractions import Fraction
from typing import Any, Dict, Optional

from .base_agent import AgentMessage, BaseAgent, box_of
from ..catalog import (
    GAMMA0_PARTITIONS,
    QUADRIC_THETA4_COEFFICIENT,
    gamma0_theta4_sum,
    gamma2_w_generic,
    named_covariant,
    quadric_invariants,
    specialized_quadric_invariants,
)
from ..covariants import GenericCovariant, i5, s6_act
from ..errors import FractionalResidue
from ..exact_core import gauss, gauss_to_str
from ..nu_bridge import MeroForm, forms_proportional, nu_eval, profile_eval, reduce
from ..series import FourierSeries
from ..spaces import LinearSpace
from ..theta import even_theta


def gamma0_theta_form(N: int) -> MeroForm:
    """vartheta_1^4 + vartheta_2^4 + vartheta_3^4 + vartheta_4^4 as a weight-(0, 2) form."""
    total = FourierSeries.zero(N)
    for index in GAMMA0_PARTITIONS:
        total = total + even_theta(index, N) ** 4
    return MeroForm((total,), Fraction(0), (0, Fraction(2)), 0, "sum theta^4")


def _scalar_detail(scalar) -> Optional[str]:
    return None if scalar is None else gauss_to_str(scalar)


class IntermediateLevelAgent(BaseAgent):
    """Agent for the Gamma0[2] and Gamma2[w] evaluation routes."""

    suite = "levels"

    def __init__(self):
        super().__init__("IntermediateLevels")

    def process(
        self,
        input_data: Dict[str, Any],
        context: Optional[Dict[str, Any]] = None
    ) -> AgentMessage:
        N = max(box_of(input_data), 4)
        checks = [
            ("quadric_identity", self._quadric_identity),
            ("quadric_basis_independent", self._quadric_basis),
            ("gamma0_routes", lambda: self._gamma0_routes(N)),
            ("gamma2_w_profile", lambda: self._gamma2_w_profile(N)),
            ("gamma2_w_theta_profile", lambda: self._gamma2_w_theta_profile(N)),
            ("gamma2_w_holomorphic", lambda: self._gamma2_w_holomorphic(N)),
            ("gamma2_w_invariance", self._gamma2_w_invariance),
            ("fractional_residue", lambda: self._fractional_residue(N)),
        ]
        return self.create_message(self.run_checks(checks))

    def _quadric_identity(self):
        specialized = specialized_quadric_invariants()["I222"]
        expected = gamma0_theta4_sum().scale(QUADRIC_THETA4_COEFFICIENT)
        return specialized == expected, {'coefficient': QUADRIC_THETA4_COEFFICIENT}

    def _quadric_basis(self):
        specialized = specialized_quadric_invariants()
        space = LinearSpace.spanned_by([specialized[f"basis{k}"] for k in range(1, 6)])
        return space.dimension == 5, {'dimension': space.dimension}

    def _gamma0_routes(self, N: int):
        by_lines = nu_eval(specialized_quadric_invariants()["I222"], N, "I222 lines")
        by_profile = profile_eval("gamma0_2", quadric_invariants()["I222"], N, "I222 profile")
        target = gamma0_theta_form(N)
        scalars = {
            'lines': forms_proportional(by_lines, target),
            'profile': forms_proportional(by_profile, target),
            'routes': forms_proportional(by_lines, by_profile),
        }
        ok = all(s is not None for s in scalars.values()) and by_lines.weight == by_profile.weight
        return ok, {k: _scalar_detail(v) for k, v in scalars.items()}

    def _gamma2_w_profile(self, N: int):
        direct = nu_eval(named_covariant("C2_2"), N, "C2_2")
        profiled = profile_eval("gamma2_w", gamma2_w_generic(), N, "C2_2 profile")
        scalar = forms_proportional(profiled, direct)
        ok = (scalar is not None and scalar == gauss(1)
              and profiled.chi5_exponent == 2 and profiled.weight == (2, Fraction(1)))
        return ok, {'scalar': _scalar_detail(scalar), 'weight': [profiled.weight[0], str(profiled.weight[1])]}

    def _gamma2_w_theta_profile(self, N: int):
        by_chi5 = profile_eval("gamma2_w", gamma2_w_generic(), N)
        by_theta = profile_eval("gamma2_w_theta", gamma2_w_generic(), N)
        scalar = forms_proportional(by_theta, by_chi5)
        return scalar is not None and by_theta.weight == by_chi5.weight, {'scalar': _scalar_detail(scalar)}

    def _gamma2_w_holomorphic(self, N: int):
        C = i5() ** 2 * named_covariant("C2_2")
        F = nu_eval(C, N, "I5^2*C2_2")
        F = reduce(F, int(F.chi5_exponent)).materialized()
        ok = (F.weight == (2, Fraction(11)) and F.is_holomorphic_candidate()
              and all(c.semipositive() for c in F.components))
        return ok, {'weight': [F.weight[0], str(F.weight[1])]}

    def _gamma2_w_invariance(self):
        C = named_covariant("C2_2")
        generators = ((2, 1, 3, 4, 5, 6), (2, 3, 4, 5, 1, 6))
        return all(s6_act(sigma, C) == C for sigma in generators), None

    def _fractional_residue(self, N: int):
        try:
            profile_eval("gamma2_w", GenericCovariant.form("f5"), N)
        except FractionalResidue as exc:
            return True, str(exc)
        return False, "f5 alone evaluated without a fractional chi5 exponent"
