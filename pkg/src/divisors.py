"""
Divisor Calculus
Divisor classes on the moduli of six marked points and their conversion to modular weights.
"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .theta import Partition6, all_partitions

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
PAIRS: Tuple[Pair, ...] = tuple(combinations(range(1, 7), 2))
Number = Union[int, Fraction]


def _pair(a: int, b: int) -> Pair:
    if a == b:
        raise ValueError(f"Boundary divisor D_{a}{b} needs distinct indices")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class DivisorClass:
    """
    Rational combination h*[h] + lam*[lambda] + sum D_ab*[D_ab].

    The fifteen D coefficients are stored for every pair a < b.
    """
    h: Fraction = Fraction(0)
    lam: Fraction = Fraction(0)
    D: Tuple[Fraction, ...] = field(default=(Fraction(0),) * 15)

    @classmethod
    def build(cls, h: Number = 0, lam: Number = 0,
              D: Optional[Dict[Pair, Number]] = None) -> "DivisorClass":
        coefficients = [Fraction(0)] * 15
        for (a, b), value in (D or {}).items():
            coefficients[PAIRS.index(_pair(a, b))] += Fraction(value)
        return cls(Fraction(h), Fraction(lam), tuple(coefficients))

    def d(self, a: int, b: int) -> Fraction:
        return self.D[PAIRS.index(_pair(a, b))]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.h + other.h, self.lam + other.lam,
                            tuple(x + y for x, y in zip(self.D, other.D)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + other.scale(-1)

    def scale(self, factor: Number) -> "DivisorClass":
        f = Fraction(factor)
        return DivisorClass(self.h * f, self.lam * f, tuple(x * f for x in self.D))

    __rmul__ = scale

    def to_dict(self) -> Dict[str, Any]:
        return {
            'h': str(self.h),
            'lambda': str(self.lam),
            'D': {f"{a}{b}": str(v) for (a, b), v in zip(PAIRS, self.D) if v},
        }


def class_W(i: int) -> DivisorClass:
    """W_i = h + lambda/2 - (1/4) sum of D_jk over pairs not containing i."""
    if not 1 <= i <= 6:
        raise ValueError(f"W index must be in 1..6, got {i}")
    D = {pair: Fraction(-1, 4) for pair in PAIRS if i not in pair}
    return DivisorClass.build(1, Fraction(1, 2), D)


def class_H(partition: Partition6) -> DivisorClass:
    """H_pi = (1/4)(2 lambda - sum of the six D_ab with a, b in one triple of pi)."""
    D = {pair: Fraction(-1, 4) for pair in PAIRS if partition.same_triple(*pair)}
    return DivisorClass.build(0, Fraction(1, 2), D)


def delta0() -> DivisorClass:
    """Boundary delta_0 = sum of all D_ab."""
    return DivisorClass.build(0, 0, {pair: 1 for pair in PAIRS})


def delta1() -> DivisorClass:
    """delta_1 = sum_pi H_pi; with delta_0 it adds up to 5 lambda."""
    total = DivisorClass()
    for partition in all_partitions():
        total = total + class_H(partition)
    return total


@dataclass
class FormWeight:
    """Weight (j, k) of a Siegel modular form and its vanishing orders r_ab along D_ab."""
    j: Fraction
    k: Fraction
    r: Dict[Pair, Fraction]

    @property
    def admissible(self) -> bool:
        """Integral weight with non-negative vanishing orders."""
        return (self.j.denominator == 1 and self.k.denominator == 1
                and all(v.denominator == 1 and v >= 0 for v in self.r.values()))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'j': str(self.j),
            'k': str(self.k),
            'r': {f"{a}{b}": str(v) for (a, b), v in sorted(self.r.items())},
            'admissible': self.admissible,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _partition_coefficients(c: Union[Sequence[Number], Dict[Partition6, Number]]) -> Dict[Partition6, Fraction]:
    partitions = all_partitions()
    if isinstance(c, dict):
        return {p: Fraction(c.get(p, 0)) for p in partitions}
    if len(c) != 10:
        raise ValueError(f"Expected 10 partition coefficients, got {len(c)}")
    return {p: Fraction(v) for p, v in zip(partitions, c)}


def effective_class(c: Union[Sequence[Number], Dict[Partition6, Number]],
                    d: Sequence[Number]) -> DivisorClass:
    """The class of sum c_pi H_pi + sum d_i W_i."""
    if len(d) != 6:
        raise ValueError(f"Expected 6 W coefficients, got {len(d)}")
    total = DivisorClass()
    for partition, value in _partition_coefficients(c).items():
        if value:
            total = total + class_H(partition).scale(value)
    for i, value in enumerate(d, start=1):
        if value:
            total = total + class_W(i).scale(value)
    return total


def divisor_to_form(c: Union[Sequence[Number], Dict[Partition6, Number]],
                    d: Sequence[Number]) -> FormWeight:
    """
    Weight and boundary orders of the form cutting out sum c_pi H_pi + sum d_i W_i.

    j = sum d_i, k = (sum c_pi + sum d_i) / 2 and
    r_ab = (1/4)(sum of c_pi over pi keeping a, b together + sum_{i not in {a, b}} d_i).

    Raises:
        ValueError: On wrong lengths or negative coefficients
    """
    coefficients = _partition_coefficients(c)
    d_values = [Fraction(v) for v in d]
    if len(d_values) != 6:
        raise ValueError(f"Expected 6 W coefficients, got {len(d_values)}")
    if any(v < 0 for v in coefficients.values()) or any(v < 0 for v in d_values):
        raise ValueError("Effective divisors need non-negative coefficients")

    j = sum(d_values, Fraction(0))
    k = (sum(coefficients.values(), Fraction(0)) + j) / 2
    r: Dict[Pair, Fraction] = {}
    for a, b in PAIRS:
        together = sum((v for p, v in coefficients.items() if p.same_triple(a, b)), Fraction(0))
        outside = sum((d_values[i - 1] for i in range(1, 7) if i not in (a, b)), Fraction(0))
        r[(a, b)] = (together + outside) / 4
    weight = FormWeight(j, k, r)
    if not weight.admissible:
        logger.info("Divisor gives non-admissible weight (%s, %s)", j, k)
    return weight


def weight_from_class(divisor: DivisorClass) -> FormWeight:
    """Read (j, k, r) off a class written as j*h + k*lambda - sum r_ab D_ab."""
    return FormWeight(divisor.h, divisor.lam, {pair: -v for pair, v in zip(PAIRS, divisor.D)})


def parse_divisor_request(payload: Dict[str, Any]) -> Tuple[List[Fraction], List[Fraction]]:
    """
    Decode {"c": [...10...] or {"(146)(235)": n, ...}, "d": [...6...]}.

    Raises:
        ValueError: On unknown keys or wrong lengths
    """
    raw_c = payload.get('c', [0] * 10)
    if isinstance(raw_c, dict):
        labels = {p.label: k for k, p in enumerate(all_partitions())}
        c = [Fraction(0)] * 10
        for label, value in raw_c.items():
            if label not in labels:
                raise ValueError(f"Unknown partition label: {label}")
            c[labels[label]] = Fraction(value)
    else:
        c = [Fraction(v) for v in raw_c]
    d = [Fraction(v) for v in payload.get('d', [0] * 6)]
    if len(c) != 10 or len(d) != 6:
        raise ValueError("Divisor request needs 10 c values and 6 d values")
    return c, d
