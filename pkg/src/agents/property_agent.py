"""
Property Agent
Seeded randomized checks of the algebraic laws the other suites rely on.
"""

import random
from typing import Any, Dict, List, Optional

from .base_agent import AgentMessage, BaseAgent, box_of
from ..config import load_settings
from ..covariants import Covariant, i5
from ..divisors import divisor_to_form
from ..nu_bridge import mero_mul, nu_eval
from ..series import FourierSeries, series_div, series_mul, series_product
from ..spaces import generator_monomials
from ..symmetry import character_table
from ..theta import chi5, even_theta, gradient, pluecker_tilde
from ..valuation import valuation_table


def random_theta_series(rng: random.Random, N: int, factors: int = 2) -> FourierSeries:
    """Product of randomly chosen theta constants, gradient components and wedges."""
    chosen = []
    for _ in range(factors):
        kind = rng.choice(("theta", "gradient", "wedge"))
        if kind == "theta":
            chosen.append(even_theta(rng.randint(1, 10), N))
        elif kind == "gradient":
            chosen.append(gradient(rng.randint(1, 6), N)[rng.randint(0, 1)])
        else:
            a, b = rng.sample(range(1, 7), 2)
            chosen.append(pluecker_tilde(a, b, N))
    return series_product(chosen, N)


def random_monomial(rng: random.Random, order: int) -> Covariant:
    """A random generator monomial of degree one and the given order."""
    return Covariant.from_generators({rng.choice(generator_monomials(1, order)): 1})


class PropertyAgent(BaseAgent):
    """Agent for randomized exact property checks; runs are reproducible from the seed."""

    suite = "properties"

    def __init__(self):
        super().__init__("Properties")

    def process(
        self,
        input_data: Dict[str, Any],
        context: Optional[Dict[str, Any]] = None
    ) -> AgentMessage:
        N = max(box_of(input_data, default=8), 4)
        seed = input_data.get('seed')
        if seed is None:
            seed = load_settings().seed
        trials = int(input_data.get('trials', 3))
        rng = random.Random(seed)
        checks = [
            ("semipositivity", lambda: self._semipositivity(rng, N, trials)),
            ("i5_shifts_valuation", lambda: self._i5_shift(rng, trials)),
            ("nu_multiplicativity", lambda: self._multiplicativity(rng, N, trials)),
            ("division_round_trip", lambda: self._round_trip(rng, N, trials)),
            ("orthogonality", lambda: (character_table().orthogonality_holds(), None)),
            ("divisor_linearity", lambda: self._divisor_linearity(rng, trials)),
        ]
        message = self.create_message(self.run_checks(checks))
        message.output['seed'] = seed
        return message

    def _semipositivity(self, rng: random.Random, N: int, trials: int):
        failures = 0
        for _ in range(trials):
            if not random_theta_series(rng, N, rng.randint(1, 3)).semipositive():
                failures += 1
        return failures == 0, {'failures': failures}

    def _i5_shift(self, rng: random.Random, trials: int):
        failures: List[str] = []
        for _ in range(trials):
            P = random_monomial(rng, rng.choice((0, 2, 4)))
            for plain, shifted in zip(valuation_table(P), valuation_table(i5() * P)):
                if [v + 1 for v in plain.values] != shifted.values:
                    failures.append(f"{P.to_text()} on {plain.partition.label}")
        return not failures, {'failures': failures}

    def _multiplicativity(self, rng: random.Random, N: int, trials: int):
        failures: List[str] = []
        for _ in range(trials):
            A = random_monomial(rng, rng.choice((0, 2)))
            B = random_monomial(rng, rng.choice((0, 2)))
            product = nu_eval(A * B, N)
            expected = mero_mul(nu_eval(A, N), nu_eval(B, N))
            if product.components != expected.components or product.weight != expected.weight:
                failures.append(f"{A.to_text()} * {B.to_text()}")
        return not failures, {'failures': failures}

    def _round_trip(self, rng: random.Random, N: int, trials: int):
        failures = 0
        divisor = chi5(N)
        for _ in range(trials):
            a = random_theta_series(rng, N, rng.randint(1, 2))
            quotient = series_div(series_mul(a, divisor), divisor)
            if not quotient.agrees_with(a):
                failures += 1
        return failures == 0, {'failures': failures}

    def _divisor_linearity(self, rng: random.Random, trials: int):
        for _ in range(trials):
            c1 = [rng.randint(0, 3) for _ in range(10)]
            c2 = [rng.randint(0, 3) for _ in range(10)]
            d1 = [rng.randint(0, 3) for _ in range(6)]
            d2 = [rng.randint(0, 3) for _ in range(6)]
            first, second = divisor_to_form(c1, d1), divisor_to_form(c2, d2)
            total = divisor_to_form([a + b for a, b in zip(c1, c2)], [a + b for a, b in zip(d1, d2)])
            if (total.j, total.k) != (first.j + second.j, first.k + second.k):
                return False, {'c': [c1, c2], 'd': [d1, d2]}
            if any(total.r[p] != first.r[p] + second.r[p] for p in total.r):
                return False, {'c': [c1, c2], 'd': [d1, d2]}
        return True, None
