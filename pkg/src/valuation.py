"""
Valuation
Orders of covariants along the divisors H_pi, read off from the t-degree of two substitutions.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from .covariants import Covariant, i5
from .exact_core import COV_RING, T_INDEX, l_index
from .theta import Partition6, all_partitions

logger = logging.getLogger(__name__)

Valuation = Union[int, float]  # math.inf for the zero coefficient


@dataclass
class ValuationReport:
    """Valuations of every x-coefficient of a covariant along H_pi."""
    partition: Partition6
    values: List[Valuation]
    by_triple: Tuple[List[Valuation], List[Valuation]] = field(default_factory=lambda: ([], []))

    @property
    def aggregate(self) -> Valuation:
        return min(self.values) if self.values else math.inf

    @property
    def triples_agree(self) -> bool:
        return self.by_triple[0] == self.by_triple[1]

    def to_dict(self) -> Dict:
        def show(v: Valuation) -> Union[int, str]:
            return "inf" if v == math.inf else int(v)
        return {
            'partition': self.partition.label,
            'values': [show(v) for v in self.values],
            'aggregate': show(self.aggregate),
        }


def _moving_positions(triple: Sequence[int], primed: bool) -> Tuple[List[int], List[int]]:
    """Positions of the variables receiving +t and of those set to 1."""
    moving = [l_index(i, 2 if primed else 1) for i in triple]
    fixed = [l_index(i, 1 if primed else 2) for i in triple]
    return moving, fixed


def top_t_degree(poly: PolyElement, triple: Sequence[int], primed: bool) -> float:
    """
    deg_t of poly after substituting, for i in the triple,
    (l_i1, l_i2) -> (l_i1 + t, 1), or (1, l_i2 + t) when primed.

    Only the coefficient of the candidate top power of t is built:
    [t^D] prod (y_i + t)^a_i = sum over j with |j| = |a| - D of prod C(a_i, j_i) y_i^j_i.
    Candidates are tried from the largest |a| downward.

    Returns:
        The degree, or -inf for the zero polynomial
    """
    if not poly:
        return -math.inf
    moving, fixed = _moving_positions(triple, primed)
    skip = set(moving) | set(fixed)
    rows = []
    for exp, coeff in poly.items():
        a = tuple(exp[p] for p in moving)
        rest = tuple(0 if k in skip else e for k, e in enumerate(exp))
        rows.append((sum(a), a, rest, coeff))
    top = max(row[0] for row in rows)
    for D in range(top, -1, -1):
        accumulated: Dict[Tuple, object] = {}
        for total, a, rest, coeff in rows:
            surplus = total - D
            if surplus < 0:
                continue
            for j in _compositions(surplus, a):
                weight = 1
                for ai, ji in zip(a, j):
                    weight *= comb(ai, ji)
                key = (rest, j)
                value = accumulated.get(key, QQ.zero) + coeff * weight
                if value:
                    accumulated[key] = value
                else:
                    accumulated.pop(key, None)
        if accumulated:
            return D
    return -math.inf


@lru_cache(maxsize=4096)
def _compositions_cached(total: int, caps: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    if len(caps) == 1:
        return ((total,),) if total <= caps[0] else ()
    result = []
    for first in range(min(total, caps[0]) + 1):
        for rest in _compositions_cached(total - first, caps[1:]):
            result.append((first,) + rest)
    return tuple(result)


def _compositions(total: int, caps: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    return _compositions_cached(total, tuple(caps))


def substitute(poly: PolyElement, triple: Sequence[int], primed: bool) -> PolyElement:
    """The substituted polynomial itself, in the coordinate ring with t."""
    t = COV_RING.gens[T_INDEX]
    replacements = []
    for i in triple:
        l1 = COV_RING.gens[l_index(i, 1)]
        l2 = COV_RING.gens[l_index(i, 2)]
        if primed:
            replacements += [(l1, COV_RING.one), (l2, l2 + t)]
        else:
            replacements += [(l1, l1 + t), (l2, COV_RING.one)]
    return poly.compose(replacements)


def _coefficient_valuation(P: PolyElement, d: int, triple: Sequence[int]) -> Valuation:
    if not P:
        return math.inf
    lowest = min(top_t_degree(P, triple, False), top_t_degree(P, triple, True))
    return 2 * d - int(lowest)


def v_pi(C: Covariant, partition: Partition6) -> ValuationReport:
    """
    Valuation of each x-coefficient of C along H_pi.

    v = 2d - min of the top t-degrees over both triples and both substitutions;
    the zero coefficient has valuation +inf. A visible I_5^m factor is split off
    and contributes m.

    Raises:
        NonUniformDegree: If C is not of uniform degree
    """
    d = C.degree
    m, cofactor = C.i5_split()
    d_cof = d - 5 * m
    coefficients = cofactor.coefficients()
    per_triple: List[List[Valuation]] = []
    for triple in partition.ordered:
        per_triple.append([_coefficient_valuation(P, d_cof, triple) for P in coefficients])
    values = [min(a, b) + m for a, b in zip(*per_triple)]
    by_triple = tuple([v + m for v in row] for row in per_triple)
    return ValuationReport(partition, values, by_triple)


def valuation_table(C: Covariant) -> List[ValuationReport]:
    """Reports for all ten partitions."""
    return [v_pi(C, partition) for partition in all_partitions()]


def is_holomorphic(C: Covariant) -> bool:
    """Every coefficient has v_pi >= 0 for every pi."""
    return all(report.aggregate >= 0 for report in valuation_table(C))


def needed_chi5_power(C: Covariant) -> int:
    """Smallest n with v_pi(C) + n >= 0 for all pi."""
    lowest = min(report.aggregate for report in valuation_table(C))
    if lowest == math.inf:
        return 0
    return max(0, -int(lowest))


@lru_cache(maxsize=1)
def materialized_i5() -> Covariant:
    """I_5 with its coordinate expansion and no generator form, for direct checks."""
    return Covariant.from_poly(i5().poly, (5,) * 6, 0)
