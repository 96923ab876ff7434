"""
Graded Spaces
Dimensions and explicit bases of the graded pieces C'_{d,b}, and exact linear spans of covariants.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .covariants import PAIRS, Covariant, GenKey
from .errors import TooLarge

logger = logging.getLogger(__name__)

MAX_BASIS_DEGREE = 3
MAX_BASIS_ORDER = 10


def dim_graded(d: int, b: int) -> int:
    """
    Dimension of C'_{d,b}.

    It is the coefficient of z^(3d + b/2) in (1 - z^(b+1)) (1 + z + ... + z^d)^6,
    and zero for odd b.

    Raises:
        ValueError: For negative arguments
    """
    if d < 0 or b < 0:
        raise ValueError(f"Degree and order must be non-negative, got ({d}, {b})")
    if b % 2:
        return 0
    block = np.ones(d + 1, dtype=np.int64)
    power = np.ones(1, dtype=np.int64)
    for _ in range(6):
        power = np.convolve(power, block)
    target = 3 * d + b // 2
    value = int(power[target]) if target < len(power) else 0
    if target - (b + 1) >= 0 and target - (b + 1) < len(power):
        value -= int(power[target - (b + 1)])
    return value


# ---------------------------------------------------------------------------
# Generator monomials of a fixed grading


def _l_exponent_vectors(d: int, b: int) -> Iterator[Tuple[int, ...]]:
    def extend(prefix: Tuple[int, ...], remaining: int) -> Iterator[Tuple[int, ...]]:
        slots = 6 - len(prefix)
        if slots == 0:
            if remaining == 0:
                yield prefix
            return
        for e in range(min(d, remaining), -1, -1):
            if remaining - e <= d * (slots - 1):
                yield from extend(prefix + (e,), remaining - e)
    yield from extend((), b)


def _multigraphs(degrees: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Loopless multigraphs on 1..6 with the given degree sequence, as p-exponent vectors."""
    last_pair_of = {v: max(k for k, pair in enumerate(PAIRS) if v in pair) for v in range(1, 7)}

    def extend(k: int, remaining: List[int], chosen: List[int]) -> Iterator[Tuple[int, ...]]:
        if k == len(PAIRS):
            if not any(remaining):
                yield tuple(chosen)
            return
        i, j = PAIRS[k]
        upper = min(remaining[i - 1], remaining[j - 1])
        for m in range(upper, -1, -1):
            remaining[i - 1] -= m
            remaining[j - 1] -= m
            closed_ok = all(remaining[v - 1] == 0 for v in (i, j) if last_pair_of[v] == k)
            if closed_ok:
                chosen.append(m)
                yield from extend(k + 1, remaining, chosen)
                chosen.pop()
            remaining[i - 1] += m
            remaining[j - 1] += m

    if sum(degrees) % 2:
        return
    yield from extend(0, list(degrees), [])


def generator_monomials(d: int, b: int) -> List[GenKey]:
    """All monomials in l_i and p_ij of uniform degree d and order b."""
    keys = []
    for l_exps in _l_exponent_vectors(d, b):
        residual = [d - e for e in l_exps]
        for p_exps in _multigraphs(residual):
            keys.append((l_exps, p_exps))
    return keys


# ---------------------------------------------------------------------------
# Exact linear spans


def _column_index(polys: Sequence) -> Dict[Tuple[int, ...], int]:
    columns = sorted({exp for poly in polys for exp in poly.keys()})
    return {exp: k for k, exp in enumerate(columns)}


def _matrix(polys: Sequence, columns: Dict[Tuple[int, ...], int], transpose: bool = False) -> DomainMatrix:
    entries: Dict[int, Dict[int, object]] = {}
    for row, poly in enumerate(polys):
        for exp, coeff in poly.items():
            r, c = (columns[exp], row) if transpose else (row, columns[exp])
            entries.setdefault(r, {})[c] = coeff
    shape = (len(columns), len(polys)) if transpose else (len(polys), len(columns))
    return DomainMatrix(entries, shape, QQ)


def independent_indices(polys: Sequence) -> List[int]:
    """Indices of a maximal independent subset, earliest first."""
    if not polys:
        return []
    columns = _column_index(polys)
    if not columns:
        return []
    _, pivots = _matrix(polys, columns, transpose=True).rref()
    return list(pivots)


class LinearSpace:
    """
    Exact span of independent covariants of one grading.

    Coordinates are read off at pivot monomials: with B_P the basis matrix
    restricted to the pivot columns, the coordinates of v are v_P B_P^-1.
    """

    def __init__(self, basis: Sequence[Covariant]):
        if not basis:
            raise ValueError("A linear space needs at least one basis vector")
        self.basis: List[Covariant] = list(basis)
        self.grading = self.basis[0].grading
        polys = [c.poly for c in self.basis]
        columns = _column_index(polys)
        reduced, pivots = _matrix(polys, columns).rref()
        if len(pivots) != len(polys):
            raise ValueError("Basis vectors are linearly dependent")
        exps = sorted(columns, key=columns.get)
        self.pivot_monomials: List[Tuple[int, ...]] = [exps[k] for k in pivots]
        square = [[poly.get(exp, QQ.zero) for exp in self.pivot_monomials] for poly in polys]
        inverse = DomainMatrix(square, (len(polys), len(polys)), QQ).inv()
        self._inverse = inverse.to_list()

    @classmethod
    def spanned_by(cls, covariants: Sequence[Covariant]) -> "LinearSpace":
        """Space spanned by a possibly dependent family."""
        picked = independent_indices([c.poly for c in covariants])
        if not picked:
            raise ValueError("The family spans the zero space")
        return cls([covariants[k] for k in picked])

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Covariant, check: bool = False) -> Optional[List]:
        """
        Coordinates of v in the basis.

        Args:
            v: Covariant of the same grading
            check: Verify membership; None is returned when v is outside the span
        """
        poly = v.poly
        vp = [poly.get(exp, QQ.zero) for exp in self.pivot_monomials]
        n = self.dimension
        coords = [sum((vp[m] * self._inverse[m][k] for m in range(n)), QQ.zero) for k in range(n)]
        if check:
            residual = poly
            for c, b in zip(coords, self.basis):
                if c:
                    residual = residual - b.poly * c
            if residual:
                return None
        return coords

    def coordinate(self, v: Covariant, k: int):
        """The k-th coordinate only."""
        poly = v.poly
        return sum((poly.get(exp, QQ.zero) * self._inverse[m][k]
                    for m, exp in enumerate(self.pivot_monomials)), QQ.zero)

    def contains(self, v: Covariant) -> bool:
        return self.coordinates(v, check=True) is not None

    def combination(self, coords: Sequence) -> Covariant:
        """The element with the given coordinates."""
        result = Covariant.zero(*self.grading)
        for c, b in zip(coords, self.basis):
            if c:
                result = result + b.scale(c)
        return result


@lru_cache(maxsize=None)
def _space_basis_cached(d: int, b: int) -> Tuple[Covariant, ...]:
    keys = generator_monomials(d, b)
    candidates = [Covariant.from_generators({key: 1}) for key in keys]
    picked = independent_indices([c.poly for c in candidates])
    logger.info("C'_{%d,%d}: %d generator monomials, %d independent", d, b, len(keys), len(picked))
    return tuple(candidates[k] for k in picked)


def space_basis(d: int, b: int) -> List[Covariant]:
    """
    Basis of C'_{d,b} made of generator monomials.

    Raises:
        TooLarge: If d > 3 or b > 10
    """
    if d > MAX_BASIS_DEGREE or b > MAX_BASIS_ORDER:
        raise TooLarge(f"space_basis supports d <= {MAX_BASIS_DEGREE} and b <= {MAX_BASIS_ORDER}")
    if d < 0 or b < 0 or b % 2:
        return []
    return list(_space_basis_cached(d, b))


@lru_cache(maxsize=None)
def graded_space(d: int, b: int) -> Optional[LinearSpace]:
    """LinearSpace on space_basis(d, b), None for the zero space."""
    basis = space_basis(d, b)
    return LinearSpace(basis) if basis else None


def in_generator_form(C: Covariant) -> Covariant:
    """
    The same covariant carrying a generator form, when its graded space is small enough.

    Covariants that already have one, that are not of uniform degree, or whose
    space is too large to enumerate are returned unchanged.
    """
    if C.has_generators or not C.is_uniform():
        return C
    try:
        space = graded_space(C.degree, C.order)
    except TooLarge:
        return C
    if space is None:
        return C
    coords = space.coordinates(C, check=True)
    if coords is None:
        logger.warning("Covariant of grading %s is outside its graded space", C.grading)
        return C
    gens: Dict[GenKey, object] = {}
    for c, b in zip(coords, space.basis):
        if c:
            key = next(iter(b.generators))
            gens[key] = gens.get(key, QQ.zero) + c
    return Covariant(C.multidegree, C.order, poly=C.poly, generators=gens)


# ---------------------------------------------------------------------------
# Generating series


def _rational_series(numerator: Dict[int, int], denominator: Sequence[int], n_terms: int) -> np.ndarray:
    """Taylor coefficients of numerator(t) / prod (1 - t^a) up to t^(n_terms - 1)."""
    coefficients = np.zeros(n_terms, dtype=object)
    for e, c in numerator.items():
        if e < n_terms:
            coefficients[e] += c
    for a in denominator:
        for k in range(a, n_terms):
            coefficients[k] += coefficients[k - a]
    return coefficients


def gamma0_dimension_series(k_max: int) -> List[int]:
    """Coefficients of (1 + t^19) / ((1 - t^2)(1 - t^4)^2 (1 - t^6)) for t^0..t^k_max."""
    if k_max < 0:
        raise ValueError(f"k_max must be non-negative, got {k_max}")
    return [int(c) for c in _rational_series({0: 1, 19: 1}, (2, 4, 4, 6), k_max + 1)]


S51_NUMERATOR = {9: 1, 11: 2, 13: 1, 15: 3, 17: 3, 19: 2, 21: 1, 23: 2}


def s51_multiplicity_series(k_max: int) -> List[int]:
    """Multiplicities m(k), k = 0..k_max, read at t^(2k+1) of the s[5,1] generating function."""
    if k_max < 0:
        raise ValueError(f"k_max must be non-negative, got {k_max}")
    series = _rational_series(S51_NUMERATOR, (4, 6, 10, 12), 2 * k_max + 2)
    return [int(series[2 * k + 1]) for k in range(k_max + 1)]


def quadric_invariant_dimension(d1: int, d2: int, d3: int) -> int:
    """
    Dimension of the invariants of multidegree (d1, d2, d3) in three binary quadrics.

    Coefficient of t^d1 u^d2 v^d3 in
    (1 + tuv) / ((1 - t^2)(1 - u^2)(1 - v^2)(1 - uv)(1 - tu)(1 - vt)).
    """
    if min(d1, d2, d3) < 0:
        return 0
    shape = (d1 + 1, d2 + 1, d3 + 1)
    grid = np.zeros(shape, dtype=np.int64)
    grid[0, 0, 0] = 1
    if min(shape) > 1:
        grid[1, 1, 1] += 1
    factors = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (0, 1, 1), (1, 1, 0), (1, 0, 1))
    for a, b, c in factors:
        for i in range(a, shape[0]):
            for j in range(b, shape[1]):
                for k in range(c, shape[2]):
                    grid[i, j, k] += grid[i - a, j - b, k - c]
    return int(grid[d1, d2, d3])
