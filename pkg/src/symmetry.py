"""
S6 Symmetry
Characters of S6, isotypic projections and decompositions of covariant spaces.
"""

import logging
from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import SymmetricGroup
from sympy.polys.domains import QQ

from .covariants import Covariant, as_images, permute_key, s6_act
from .errors import NotClosedUnderAction
from .spaces import LinearSpace, independent_indices

logger = logging.getLogger(__name__)

YoungPartition = Tuple[int, ...]
CycleType = Tuple[int, ...]
ClassFunction = Dict[CycleType, Fraction]

GROUP_ORDER = 720


def partitions_of(n: int) -> List[YoungPartition]:
    """Partitions of n in reverse lexicographic order, [n] first."""
    result: List[YoungPartition] = []

    def extend(prefix: Tuple[int, ...], remaining: int, cap: int) -> None:
        if remaining == 0:
            result.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            extend(prefix + (part,), remaining - part, part)

    extend((), n, n)
    return result


def partition_label(partition: YoungPartition) -> str:
    """s[4,1,1] style label."""
    return "s[" + ",".join(map(str, partition)) + "]"


def parse_partition(label: str) -> YoungPartition:
    """Inverse of partition_label; also accepts bare '4,1,1'."""
    text = label.strip()
    if text.startswith("s[") and text.endswith("]"):
        text = text[2:-1]
    parts = tuple(int(p) for p in text.replace(" ", "").split(",") if p)
    if sum(parts) != 6 or list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"Not a partition of 6: {label}")
    return parts


@lru_cache(maxsize=None)
def character(partition: YoungPartition, cycle_type: CycleType) -> int:
    """
    Irreducible character value by the Murnaghan-Nakayama rule.

    Rim hooks are removed on beta-sets: a hook of length r moves one bead
    from position beta to beta - r, with sign (-1)^(beads jumped over).
    """
    if not cycle_type:
        return 1 if sum(partition) == 0 else 0
    r, rest = cycle_type[0], cycle_type[1:]
    k = len(partition)
    beta = [partition[i] + (k - 1 - i) for i in range(k)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        jumped = sum(1 for other in beads if target < other < b)
        new_beta = sorted((beads - {b}) | {target}, reverse=True)
        new_partition = tuple(x - (k - 1 - i) for i, x in enumerate(new_beta))
        new_partition = tuple(p for p in new_partition if p > 0)
        total += (-1) ** jumped * character(new_partition, rest)
    return total


def class_size(cycle_type: CycleType, n: int = 6) -> int:
    counts = Counter(cycle_type)
    denominator = 1
    for length, multiplicity in counts.items():
        denominator *= length ** multiplicity * factorial(multiplicity)
    return factorial(n) // denominator


def cycle_type_of(sigma: Union[Sequence[int], Permutation]) -> CycleType:
    """Cycle type as a descending tuple including fixed points."""
    images = as_images(sigma)
    seen = set()
    lengths = []
    for start in range(1, 7):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = images[i - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def class_representative(cycle_type: CycleType) -> Tuple[int, ...]:
    """A permutation with the given cycle type, built from consecutive cycles."""
    images = list(range(1, 7))
    start = 1
    for length in cycle_type:
        block = list(range(start, start + length))
        for pos, i in enumerate(block):
            images[i - 1] = block[(pos + 1) % length]
        start += length
    return tuple(images)


@lru_cache(maxsize=1)
def all_permutations() -> Tuple[Tuple[int, ...], ...]:
    """The 720 elements of S6 as image tuples."""
    return tuple(as_images(p) for p in SymmetricGroup(6).generate())


@dataclass
class CharacterTable:
    """Character table of S6 with classes labelled by cycle type."""
    partitions: List[YoungPartition]
    classes: List[CycleType]
    values: np.ndarray
    class_sizes: np.ndarray

    def row(self, partition: YoungPartition) -> np.ndarray:
        return self.values[self.partitions.index(partition)]

    def dimension(self, partition: YoungPartition) -> int:
        return int(self.row(partition)[self.classes.index((1,) * 6)])

    def orthogonality_holds(self) -> bool:
        """Row orthogonality: sum_c |c| chi(c) chi'(c) = 720 delta."""
        gram = (self.values * self.class_sizes) @ self.values.T
        return bool(np.array_equal(gram, GROUP_ORDER * np.eye(len(self.partitions), dtype=np.int64)))

    def to_dict(self) -> Dict:
        return {
            'partitions': [partition_label(p) for p in self.partitions],
            'classes': [list(c) for c in self.classes],
            'values': self.values.tolist(),
            'class_sizes': self.class_sizes.tolist(),
        }


@lru_cache(maxsize=1)
def character_table() -> CharacterTable:
    partitions = partitions_of(6)
    classes = partitions_of(6)
    values = np.array([[character(p, c) for c in classes] for p in partitions], dtype=np.int64)
    sizes = np.array([class_size(c) for c in classes], dtype=np.int64)
    return CharacterTable(partitions, classes, values, sizes)


# ---------------------------------------------------------------------------
# Class functions


def _power_cycle_type(cycle_type: CycleType, k: int) -> CycleType:
    """Cycle type of sigma^k."""
    lengths = []
    for length in cycle_type:
        g = gcd(length, k)
        lengths.extend([length // g] * g)
    return tuple(sorted(lengths, reverse=True))


def irreducible(partition: YoungPartition) -> ClassFunction:
    return {c: Fraction(character(partition, c)) for c in partitions_of(6)}


def sym_power_character(chi: ClassFunction, d: int) -> ClassFunction:
    """
    Character of Sym^d of the representation with character chi.

    Uses h_d = (1/d) sum_{k=1}^d p_k h_{d-k} with p_k(sigma) = chi(sigma^k).
    """
    classes = list(chi)
    h: List[ClassFunction] = [{c: Fraction(1) for c in classes}]
    for n in range(1, d + 1):
        current = {}
        for c in classes:
            total = Fraction(0)
            for k in range(1, n + 1):
                total += chi[_power_cycle_type(c, k)] * h[n - k][c]
            current[c] = total / n
        h.append(current)
    return h[d]


def class_function_product(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    return {c: a[c] * b[c] for c in a}


def class_function_difference(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    return {c: a[c] - b.get(c, Fraction(0)) for c in a}


def multiplicities_of(chi: ClassFunction) -> Dict[YoungPartition, int]:
    """Decompose a virtual character into irreducibles by inner products."""
    result: Dict[YoungPartition, int] = {}
    for partition in partitions_of(6):
        inner = sum(class_size(c) * chi[c] * character(partition, c) for c in chi) / GROUP_ORDER
        if inner.denominator != 1:
            raise ValueError(f"Non-integral multiplicity {inner} for {partition_label(partition)}")
        if inner:
            result[partition] = int(inner)
    return result


def invariant_character(d: int) -> ClassFunction:
    """
    Character of the degree-d invariants: Sym^d(s[3,3]) minus Sym^(d-3)(s[3,3]) times sign.

    The degree-one invariants span s[3,3]; the cubic relation among them
    transforms by the sign character.
    """
    base = irreducible((3, 3))
    top = sym_power_character(base, d)
    if d < 3:
        return top
    sign = irreducible((1, 1, 1, 1, 1, 1))
    return class_function_difference(top, class_function_product(sym_power_character(base, d - 3), sign))


# ---------------------------------------------------------------------------
# Spaces under the action


@dataclass
class DecompositionEntry:
    """One isotypic summand: multiplicity times s[lambda]."""
    partition: YoungPartition
    multiplicity: int
    dimension: int

    @property
    def label(self) -> str:
        return partition_label(self.partition)

    def to_dict(self) -> Dict:
        data = asdict(self)
        data['partition'] = self.label
        return data


def format_decomposition(entries: Sequence[DecompositionEntry]) -> str:
    """Render as s[5,1]+2s[4,2]."""
    if not entries:
        return "0"
    return "+".join((f"{e.multiplicity}" if e.multiplicity > 1 else "") + e.label for e in entries)


def _as_space(space: Union[LinearSpace, Sequence[Covariant]]) -> LinearSpace:
    if isinstance(space, LinearSpace):
        return space
    return LinearSpace.spanned_by(list(space))


def check_closed(space: LinearSpace) -> None:
    """
    Verify stability under the generators (12) and (123456) of S6.

    Raises:
        NotClosedUnderAction: If an image leaves the span
    """
    for generator in ((2, 1, 3, 4, 5, 6), (2, 3, 4, 5, 6, 1)):
        for b in space.basis:
            if not space.contains(s6_act(generator, b)):
                raise NotClosedUnderAction(
                    f"Image of {b!r} under {generator} is outside the span")


def traces(space: LinearSpace) -> Dict[CycleType, Fraction]:
    """Trace of every conjugacy class on the space."""
    result = {}
    for cycle_type in partitions_of(6):
        sigma = class_representative(cycle_type)
        total = QQ.zero
        for k, b in enumerate(space.basis):
            total += space.coordinate(s6_act(sigma, b), k)
        result[cycle_type] = Fraction(int(total.numerator), int(total.denominator))
    return result


def decompose(space: Union[LinearSpace, Sequence[Covariant]],
              validate: bool = True) -> List[DecompositionEntry]:
    """
    Multiplicities of the irreducibles of S6 in an invariant space.

    Raises:
        NotClosedUnderAction: If validation finds the space is not invariant
    """
    linear = _as_space(space)
    if validate:
        check_closed(linear)
    multiplicities = multiplicities_of(traces(linear))
    entries = [DecompositionEntry(p, m, int(character(p, (1,) * 6)))
               for p, m in multiplicities.items()]
    total = sum(e.multiplicity * e.dimension for e in entries)
    if total != linear.dimension:
        raise NotClosedUnderAction(f"Traces give dimension {total}, space has {linear.dimension}")
    return entries


def project(v: Covariant, partition: YoungPartition) -> Covariant:
    """
    Isotypic projection (dim/720) sum_sigma chi(sigma) sigma.v.

    Generator forms are permuted directly, so no expansion happens here.
    """
    dim = character(partition, (1,) * 6)
    weights: Dict[Tuple[int, ...], int] = {}
    for sigma in all_permutations():
        weights[sigma] = character(partition, cycle_type_of(sigma))
    scale = QQ(dim, GROUP_ORDER)
    if v.has_generators:
        gens: Dict = {}
        for sigma, chi in weights.items():
            if not chi:
                continue
            for key, coeff in v.generators.items():
                new_key, sign = permute_key(sigma, key)
                gens[new_key] = gens.get(new_key, QQ.zero) + coeff * (sign * chi)
        return Covariant.from_generators(gens, v.multidegree, v.order).scale(scale)
    result = Covariant.zero(v.multidegree, v.order)
    for sigma, chi in weights.items():
        if chi:
            result = result + s6_act(sigma, v).scale(chi)
    return result.scale(scale)


def isotypic_project(space: Union[LinearSpace, Sequence[Covariant]], partition: YoungPartition,
                     validate: bool = True) -> List[Covariant]:
    """
    Basis of the s[partition]-isotypic component of an invariant space.

    Raises:
        NotClosedUnderAction: If validation finds the space is not invariant
    """
    linear = _as_space(space)
    if validate:
        check_closed(linear)
    images = [project(b, partition) for b in linear.basis]
    images = [image for image in images if not image.is_zero()]
    if not images:
        return []
    picked = independent_indices([image.poly for image in images])
    logger.debug("%s component: dimension %d", partition_label(partition), len(picked))
    return [images[k] for k in picked]


def symmetric_orbit_span(seed: Covariant) -> Optional[LinearSpace]:
    """Span of the S6 orbit of a covariant."""
    images = [s6_act(sigma, seed) for sigma in all_permutations()]
    unique = {}
    for image in images:
        if image.has_generators:
            key = tuple(sorted(image.generators.items()))
            unique.setdefault(key, image)
        else:
            unique.setdefault(tuple(sorted(image.poly.items())), image)
    candidates = list(unique.values())
    if all(c.is_zero() for c in candidates):
        return None
    return LinearSpace.spanned_by(candidates)


GAMMA0_INVARIANT_PARTITIONS: Tuple[YoungPartition, ...] = ((6,), (4, 2), (2, 2, 2))


def gamma0_dimension_from_multiplicities(multiplicities: Dict[Union[str, YoungPartition], int]) -> int:
    """
    Dimension for Gamma0[2] from the S6 multiplicities of the Gamma[2] space.

    Only s[6], s[4,2] and s[2,2,2] have a vector fixed by the stabiliser of Gamma0[2], one each.
    """
    total = 0
    for key, m in multiplicities.items():
        partition = parse_partition(key) if isinstance(key, str) else tuple(key)
        if partition in GAMMA0_INVARIANT_PARTITIONS:
            total += int(m)
    return total
