"""
Workbench Controller
Coordinates parsing, evaluation, caching and the verification suites behind the command line.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import pandas as pd

from .agents import SuiteOrchestrator, suite_names
from .cache import SeriesCache
from .config import Settings, load_settings
from .covariants import Covariant, GenericCovariant
from .divisors import FormWeight, divisor_to_form, parse_divisor_request
from .exact_core import GaussRat, gauss_to_str
from .nu_bridge import FourierIndex, MeroForm, fourier_coefficient, nu_eval, reduce
from .parser import evaluate as evaluate_expression, format_expression, parse
from .reports import dimension_table
from .series import FourierSeries
from .spaces import graded_space, in_generator_form
from .symmetry import DecompositionEntry, decompose, symmetric_orbit_span
from .theta import chi5, even_theta, gradient, pluecker_tilde
from .valuation import ValuationReport, needed_chi5_power, valuation_table

logger = logging.getLogger(__name__)

THETA_KINDS = ("even", "gradient", "chi5", "wedge")


@dataclass
class NuResult:
    """A covariant's image under nu, the reduction applied and the requested coefficients."""
    expression: str
    form: MeroForm
    reduced_by: int
    needed_chi5_power: int
    coefficients: Dict[str, List[GaussRat]] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'expression': self.expression,
            'reduced_by': self.reduced_by,
            'needed_chi5_power': self.needed_chi5_power,
            'form': self.form.sidecar(),
            'coefficients': {label: [gauss_to_str(c) for c in vector]
                             for label, vector in self.coefficients.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


class Workbench:
    """
    Entry point for every command-line operation.

    Theta series go through the on-disk cache when one is configured.
    """

    def __init__(self, settings: Optional[Settings] = None, use_cache: bool = True):
        """
        Initialize the workbench.

        Args:
            settings: Resolved settings; loaded from the environment when None
            use_cache: Read and write the series cache under settings.cache_dir
        """
        self.settings = settings or load_settings()
        self.cache = SeriesCache(self.settings.cache_dir) if use_cache else None

    # -- theta series -----------------------------------------------------

    def theta(self, kind: str, index: int = 1, N: Optional[int] = None,
              second: Optional[int] = None) -> Dict[str, FourierSeries]:
        """
        Compute (or load) a theta-derived series.

        Args:
            kind: One of even, gradient, chi5, wedge
            index: Characteristic index, or the first wedge index
            N: Box size; settings.default_box when None
            second: Second wedge index

        Returns:
            Mapping of cache names to series (a gradient gives two components)

        Raises:
            ValueError: For unknown kinds or missing indices
        """
        box = self.settings.default_box if N is None else N
        if kind == "even":
            wanted = {f"theta_even_{index}": lambda n: even_theta(index, n)}
        elif kind == "gradient":
            wanted = {f"grad_{index}_{j + 1}": (lambda n, j=j: gradient(index, n)[j]) for j in range(2)}
        elif kind == "chi5":
            wanted = {"chi5": chi5}
        elif kind == "wedge":
            if second is None:
                raise ValueError("A wedge needs two indices")
            wanted = {f"ptilde_{index}{second}": lambda n: pluecker_tilde(index, second, n)}
        else:
            raise ValueError(f"Unknown theta kind: {kind}. Supported: {', '.join(THETA_KINDS)}")
        result = {}
        for name, compute in wanted.items():
            if self.cache is not None:
                result[name] = self.cache.get_or_compute(name, box, compute)
            else:
                result[name] = compute(box)
        return result

    # -- covariants -------------------------------------------------------

    def evaluate(self, text: str) -> Union[Covariant, GenericCovariant]:
        """Parse and evaluate an expression."""
        value = evaluate_expression(parse(text))
        if isinstance(value, Covariant):
            return in_generator_form(value)
        return value

    def covariant(self, text: str) -> Covariant:
        """
        Evaluate an expression that must give a covariant of the six linear forms.

        Raises:
            ValueError: If generic forms are left unbound
        """
        value = self.evaluate(text)
        if isinstance(value, GenericCovariant):
            raise ValueError("Expression has unbound generic forms; add a 'with' clause")
        return value

    def describe(self, text: str) -> Dict[str, Any]:
        """Canonical form, grading and expansion summary of an expression."""
        expression = parse(text)
        value = self.evaluate(text)
        info: Dict[str, Any] = {'expression': format_expression(expression), 'order': value.order}
        if isinstance(value, GenericCovariant):
            info['form_degrees'] = list(value.form_degrees)
            info['terms'] = len(value.poly)
            info['value'] = str(value.poly.as_expr())
        else:
            info['multidegree'] = list(value.multidegree)
            info['terms'] = len(value.poly)
            info['value'] = value.to_text()
        return info

    def valuate(self, text: str) -> Tuple[List[ValuationReport], int]:
        """Valuation reports for all ten partitions and the chi5 power that cancels the poles."""
        C = self.covariant(text)
        return valuation_table(C), needed_chi5_power(C)

    # -- spaces -----------------------------------------------------------

    def dims(self, gradings: Sequence[Tuple[int, int]], with_basis: bool = True) -> pd.DataFrame:
        return dimension_table(gradings, with_basis)

    def decompose(self, d: Optional[int] = None, b: Optional[int] = None,
                  expression: Optional[str] = None) -> List[DecompositionEntry]:
        """
        Decompose C'_{d,b}, or the S6 span of an expression, into irreducibles.

        Raises:
            ValueError: If neither a grading nor an expression is given, or the space is zero
        """
        if expression is not None:
            space = symmetric_orbit_span(self.covariant(expression))
        elif d is not None and b is not None:
            space = graded_space(d, b)
        else:
            raise ValueError("Give a grading (d, b) or an expression")
        if space is None:
            raise ValueError("The space is zero")
        return decompose(space)

    # -- nu ---------------------------------------------------------------

    def nu(self, text: str, N: Optional[int] = None, reduce_by: Union[str, int, None] = "auto",
           indices: Sequence[FourierIndex] = (), cache_name: Optional[str] = None) -> NuResult:
        """
        Evaluate nu on an expression, reduce, and read off Fourier coefficients.

        Args:
            text: Covariant expression
            N: Box size of the evaluation
            reduce_by: 'auto', an explicit number of chi5 steps, or None for no reduction
            indices: Fourier indices to report; they need a pole-free result
            cache_name: Store the resulting form under this name

        Raises:
            NotDivisibleInBox: If the requested reduction fails
            ValueError: If coefficients are requested while a chi5 pole remains
        """
        box = self.settings.default_box if N is None else N
        C = self.covariant(text)
        canonical = format_expression(parse(text))
        needed = needed_chi5_power(C)
        F = nu_eval(C, box, canonical)
        if reduce_by == "auto":
            steps = max(0, int(F.chi5_exponent) - needed)
        else:
            steps = int(reduce_by or 0)
        logger.info("nu: %s at box %d, reducing by %d (needed chi5 power %d)", canonical, box, steps, needed)
        if steps:
            F = reduce(F, steps)
        coefficients = {}
        for index in indices:
            coefficients[str(index)] = fourier_coefficient(F, index)
        if cache_name and self.cache is not None:
            self.cache.put_form(cache_name, F.materialized())
        return NuResult(canonical, F, steps, needed, coefficients)

    # -- divisors and suites ----------------------------------------------

    def divisor(self, payload: Dict[str, Any]) -> FormWeight:
        c, d = parse_divisor_request(payload)
        return divisor_to_form(c, d)

    def verify(self, suite: str = "all", N: Optional[int] = None,
               options: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """
        Run one suite, or all of them.

        Raises:
            ValueError: For unknown suites
        """
        box = self.settings.default_box if N is None else N
        merged = {'seed': self.settings.seed, **(options or {})}
        orchestrator = SuiteOrchestrator(merged)
        if suite == "all":
            return orchestrator.run_all(box)
        if suite not in suite_names():
            raise ValueError(f"Unknown suite: {suite}. Available: all, {', '.join(suite_names())}")
        return orchestrator.run_suite(suite, box)
