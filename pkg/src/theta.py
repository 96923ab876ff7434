"""
Theta Engine
Even theta constants, gradients of odd theta functions, chi5 and the wedge coordinates.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import isqrt
from typing import Dict, FrozenSet, List, Tuple

from .errors import IdenticalIndices
from .series import FourierSeries, series_mul, series_product

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThetaCharacteristic:
    """Characteristic [mu1 mu2; nu1 nu2] with entries in {0, 1}."""
    mu: Tuple[int, int]
    nu: Tuple[int, int]

    @property
    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return (self.mu[0] * self.nu[0] + self.mu[1] * self.nu[1]) % 2

    @property
    def label(self) -> str:
        return f"[{self.mu[0]}{self.mu[1]};{self.nu[0]}{self.nu[1]}]"


def _char(text: str) -> ThetaCharacteristic:
    top, bottom = text.split(";")
    return ThetaCharacteristic((int(top[0]), int(top[1])), (int(bottom[0]), int(bottom[1])))


EVEN_CHARACTERISTICS: Tuple[ThetaCharacteristic, ...] = tuple(_char(c) for c in (
    "00;00", "00;01", "00;10", "00;11", "01;00",
    "01;10", "10;00", "10;01", "11;00", "11;11",
))

ODD_CHARACTERISTICS: Tuple[ThetaCharacteristic, ...] = tuple(_char(c) for c in (
    "01;01", "01;11", "10;10", "10;11", "11;01", "11;10",
))


@dataclass(frozen=True)
class Partition6:
    """Unordered partition of {1..6} into two triples."""
    triples: FrozenSet[FrozenSet[int]]

    @classmethod
    def of(cls, first: Tuple[int, int, int], second: Tuple[int, int, int]) -> "Partition6":
        a, b = frozenset(first), frozenset(second)
        if len(a) != 3 or len(b) != 3 or a | b != frozenset(range(1, 7)):
            raise ValueError(f"Not a partition of 1..6 into triples: {first} {second}")
        return cls(frozenset((a, b)))

    @classmethod
    def from_triple(cls, triple: Tuple[int, int, int]) -> "Partition6":
        rest = tuple(sorted(set(range(1, 7)) - set(triple)))
        return cls.of(tuple(triple), rest)

    @property
    def ordered(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Both triples sorted, the one containing 1 first."""
        first, second = sorted(tuple(sorted(t)) for t in self.triples)
        return first, second

    def same_triple(self, a: int, b: int) -> bool:
        return any(a in t and b in t for t in self.triples)

    @property
    def label(self) -> str:
        first, second = self.ordered
        return "(" + "".join(map(str, first)) + ")(" + "".join(map(str, second)) + ")"


_PARTITION_ROWS = {
    1: ((1, 4, 6), (2, 3, 5)),
    2: ((1, 3, 6), (2, 4, 5)),
    3: ((1, 3, 5), (2, 4, 6)),
    4: ((1, 4, 5), (2, 3, 6)),
    5: ((1, 3, 4), (2, 5, 6)),
    6: ((1, 5, 6), (2, 3, 4)),
    7: ((1, 2, 3), (4, 5, 6)),
    8: ((1, 2, 4), (3, 5, 6)),
    9: ((1, 2, 6), (3, 4, 5)),
    10: ((1, 2, 5), (3, 4, 6)),
}


def char_partition_table() -> Dict[int, Partition6]:
    """Even characteristic index -> partition of {1..6}."""
    return {index: Partition6.of(*row) for index, row in _PARTITION_ROWS.items()}


def all_partitions() -> List[Partition6]:
    """The ten partitions in even characteristic order."""
    return list(char_partition_table().values())


def partition_index(partition: Partition6) -> int:
    """Inverse of char_partition_table."""
    for index, candidate in char_partition_table().items():
        if candidate == partition:
            return index
    raise ValueError(f"Unknown partition {partition}")


def _check_box(N: int) -> None:
    if N < 0:
        raise ValueError(f"Box must be non-negative, got {N}")


def _lattice(mu: int, N: int) -> List[int]:
    """Integers m = 2n + mu with m^2 <= N."""
    bound = isqrt(N)
    return [m for m in range(-bound, bound + 1) if (m - mu) % 2 == 0]


@lru_cache(maxsize=None)
def even_theta(index: int, N: int) -> FourierSeries:
    """
    Even theta constant vartheta_index truncated at box N.

    The term for m = 2n + mu contributes i^(mu.nu) (-1)^(n.nu) at
    Q1^(m1^2) Q12^(m1 m2) Q2^(m2^2).

    Raises:
        ValueError: If index is outside 1..10 or N < 0
    """
    if not 1 <= index <= 10:
        raise ValueError(f"Even characteristic index must be in 1..10, got {index}")
    _check_box(N)
    char = EVEN_CHARACTERISTICS[index - 1]
    (mu1, mu2), (nu1, nu2) = char.mu, char.nu
    base_sign = -1 if (mu1 * nu1 + mu2 * nu2) == 2 else 1
    terms: Dict[Tuple[int, int, int], int] = {}
    for m1 in _lattice(mu1, N):
        for m2 in _lattice(mu2, N):
            n1, n2 = (m1 - mu1) // 2, (m2 - mu2) // 2
            sign = base_sign * (-1 if (n1 * nu1 + n2 * nu2) % 2 else 1)
            key = (m1 * m1, m1 * m2, m2 * m2)
            terms[key] = terms.get(key, 0) + sign
    return FourierSeries(terms, {}, 1, N)


@lru_cache(maxsize=None)
def gradient(index: int, N: int) -> Tuple[FourierSeries, FourierSeries]:
    """
    Gradient (G_{i,1}, G_{i,2}) at z = 0 of the odd theta function of index i.

    Constant factors are dropped: G_{i,j} = i * sum (-1)^(n.nu) m_j Q^(...).

    Raises:
        ValueError: If index is outside 1..6 or N < 0
    """
    if not 1 <= index <= 6:
        raise ValueError(f"Odd characteristic index must be in 1..6, got {index}")
    _check_box(N)
    char = ODD_CHARACTERISTICS[index - 1]
    (mu1, mu2), (nu1, nu2) = char.mu, char.nu
    first: Dict[Tuple[int, int, int], int] = {}
    second: Dict[Tuple[int, int, int], int] = {}
    for m1 in _lattice(mu1, N):
        for m2 in _lattice(mu2, N):
            n1, n2 = (m1 - mu1) // 2, (m2 - mu2) // 2
            sign = -1 if (n1 * nu1 + n2 * nu2) % 2 else 1
            key = (m1 * m1, m1 * m2, m2 * m2)
            first[key] = first.get(key, 0) + sign * m1
            second[key] = second.get(key, 0) + sign * m2
    return FourierSeries({}, first, 1, N), FourierSeries({}, second, 1, N)


@lru_cache(maxsize=None)
def theta_product(N: int) -> FourierSeries:
    """Product of the ten even theta constants."""
    return series_product((even_theta(i, N) for i in range(1, 11)), N)


@lru_cache(maxsize=None)
def chi5(N: int) -> FourierSeries:
    """The cusp form chi5 = -2^-6 * prod vartheta_i."""
    _check_box(N)
    return theta_product(N).scale(Fraction(-1, 2 ** 6))


@lru_cache(maxsize=None)
def pluecker_tilde(a: int, b: int, N: int) -> FourierSeries:
    """
    Wedge coordinate G_{a,1} G_{b,2} - G_{a,2} G_{b,1}.

    Raises:
        IdenticalIndices: If a == b
    """
    if a == b:
        raise IdenticalIndices(f"p~ needs distinct indices, got {a}, {b}")
    ga1, ga2 = gradient(a, N)
    gb1, gb2 = gradient(b, N)
    return series_mul(ga1, gb2) - series_mul(ga2, gb1)


def quadruple_for_pair(a: int, b: int) -> Tuple[int, ...]:
    """The four even characteristics whose partition keeps a and b in one triple."""
    if a == b:
        raise IdenticalIndices(f"Pair needs distinct indices, got {a}, {b}")
    return tuple(index for index, partition in char_partition_table().items()
                 if partition.same_triple(a, b))


def theta_monomial(indices: Tuple[int, ...], N: int) -> FourierSeries:
    """Product of even theta constants with the given (possibly repeated) indices."""
    return series_product((even_theta(i, N) for i in indices), N)


def pluecker_theta_sign(a: int, b: int, N: int) -> int:
    """
    Sign s with p~_ab = s * product of the quadruple thetas on the box.

    Returns:
        +1 or -1, or 0 when neither sign matches
    """
    lhs = pluecker_tilde(a, b, N)
    rhs = theta_monomial(quadruple_for_pair(a, b), N)
    if lhs.agrees_with(rhs):
        return 1
    if lhs.agrees_with(-rhs):
        return -1
    logger.warning("p~_%d%d is not +-(theta quadruple) in box %d", a, b, N)
    return 0


def pluecker_sign_table(N: int) -> Dict[Tuple[int, int], int]:
    """Sign for every pair a < b."""
    return {(a, b): pluecker_theta_sign(a, b, N) for a, b in combinations(range(1, 7), 2)}
