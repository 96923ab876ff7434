"""
Theta Identity Agent
Checks the wedge, chi5 and Pluecker identities between theta series on a box.
"""

from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Any, Dict, Optional

from .base_agent import AgentMessage, BaseAgent, box_of
from ..exact_core import gauss_parts
from ..series import series_mul, series_product
from ..theta import (
    chi5,
    even_theta,
    gradient,
    pluecker_sign_table,
    pluecker_tilde,
    quadruple_for_pair,
    theta_monomial,
)


class ThetaIdentityAgent(BaseAgent):
    """Agent for the identities among theta constants, gradients and chi5."""

    suite = "identities"

    def __init__(self):
        super().__init__("ThetaIdentities")

    def process(
        self,
        input_data: Dict[str, Any],
        context: Optional[Dict[str, Any]] = None
    ) -> AgentMessage:
        N = max(box_of(input_data), 4)
        checks = [
            ("p12_is_theta_quadruple", lambda: self._p12_quadruple(N)),
            ("quadruple_sign_table", lambda: self._sign_table(N)),
            ("antisymmetry", lambda: self._antisymmetry(N)),
            ("pluecker_relation", lambda: self._pluecker_relation(N)),
            ("chi5_lowest_slice", lambda: self._chi5_slice(N)),
            ("chi5_integral", lambda: (chi5(N).int_parts()[2] == 1, None)),
            ("semipositive_support", lambda: self._semipositive(N)),
        ]
        if input_data.get('discriminant', True):
            checks.append(("discriminant", lambda: self._discriminant(N)))
        results = self.run_checks(checks)
        return self.create_message(results)

    def _p12_quadruple(self, N: int):
        quadruple = quadruple_for_pair(1, 2)
        lhs = pluecker_tilde(1, 2, N)
        return lhs.agrees_with(theta_monomial(quadruple, N)), {'quadruple': list(quadruple)}

    def _sign_table(self, N: int):
        table = pluecker_sign_table(N)
        detail = {f"{a}{b}": s for (a, b), s in table.items()}
        return all(s != 0 for s in table.values()), detail

    def _antisymmetry(self, N: int):
        return all(pluecker_tilde(a, b, N) == -pluecker_tilde(b, a, N)
                   for a, b in combinations(range(1, 7), 2)), None

    def _pluecker_relation(self, N: int):
        p = lambda a, b: pluecker_tilde(a, b, N)
        lhs = series_mul(p(1, 3), p(2, 4)) - series_mul(p(1, 4), p(2, 3))
        return lhs.agrees_with(series_mul(p(1, 2), p(3, 4))), None

    def _chi5_slice(self, N: int):
        corner, slice_ = chi5(N).lowest_slice()
        expected = {2: Fraction(1), -2: Fraction(-1)}
        found = {e: gauss_parts(c)[0] for e, c in slice_.items() if not gauss_parts(c)[1]}
        return corner == (4, 4) and found == expected and len(slice_) == 2, {'corner': list(corner)}

    def _semipositive(self, N: int):
        series = [even_theta(i, N) for i in range(1, 11)]
        for i in range(1, 7):
            series.extend(gradient(i, N))
        series.append(chi5(N))
        series.append(pluecker_tilde(1, 2, N))
        return all(s.semipositive() for s in series), {'series_checked': len(series)}

    def _discriminant(self, N: int):
        # chi5^6 starts at (24, 24); below that box only the sign product carries the identity
        signs = prod(pluecker_sign_table(N).values())
        product = series_product((pluecker_tilde(a, b, N) for a, b in combinations(range(1, 7), 2)), N)
        expected = (chi5(N) ** 6).scale(-(2 ** 36))
        return signs == -1 and product.agrees_with(expected), {'sign_product': signs, 'terms': len(product)}
