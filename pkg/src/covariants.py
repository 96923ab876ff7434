"""
Covariant Algebra
Multigraded covariants of six binary linear forms, generic binary forms and transvectants.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy.combinatorics import Permutation
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from .errors import DegreeMismatch, IdenticalIndices, NonUniformDegree, OrderTooSmall
from .exact_core import (
    COV_RING,
    GENERIC_FORMS,
    GENERIC_RING,
    GENERIC_X1_INDEX,
    GENERIC_X2_INDEX,
    LINEAR_FORMS,
    X1_INDEX,
    X2_INDEX,
    generic_form_poly,
    generic_index,
    l_index,
    linear_form_poly,
    to_rational,
)

logger = logging.getLogger(__name__)

PAIRS: Tuple[Tuple[int, int], ...] = tuple(combinations(LINEAR_FORMS, 2))
PAIR_INDEX: Dict[Tuple[int, int], int] = {pair: k for k, pair in enumerate(PAIRS)}

# A monomial in the generators: (exponents of l_1..l_6, exponents of p_12..p_56).
GenKey = Tuple[Tuple[int, ...], Tuple[int, ...]]
GenForm = Dict[GenKey, "QQ.dtype"]

ScalarLike = Union[int, Fraction, "QQ.dtype"]

_ZERO_L = (0,) * 6
_ZERO_P = (0,) * 15


def _rational(value: ScalarLike):
    if isinstance(value, (int, Fraction)):
        return to_rational(value)
    return QQ.convert(value)


# ---------------------------------------------------------------------------
# Generator monomials


def key_grading(key: GenKey) -> Tuple[Tuple[int, ...], int]:
    """Multidegree and order of a generator monomial."""
    l_exps, p_exps = key
    degrees = list(l_exps)
    for (i, j), e in zip(PAIRS, p_exps):
        if e:
            degrees[i - 1] += e
            degrees[j - 1] += e
    return tuple(degrees), sum(l_exps)


def key_mul(a: GenKey, b: GenKey) -> GenKey:
    return (tuple(x + y for x, y in zip(a[0], b[0])),
            tuple(x + y for x, y in zip(a[1], b[1])))


def key_text(key: GenKey) -> str:
    """Render a generator monomial such as p12*l3^2."""
    factors = []
    for (i, j), e in zip(PAIRS, key[1]):
        if e:
            factors.append(f"p{i}{j}" + (f"^{e}" if e > 1 else ""))
    for i, e in zip(LINEAR_FORMS, key[0]):
        if e:
            factors.append(f"l{i}" + (f"^{e}" if e > 1 else ""))
    return "*".join(factors) if factors else "1"


@lru_cache(maxsize=None)
def pluecker_poly(i: int, j: int) -> PolyElement:
    """p_ij = l_i1 l_j2 - l_i2 l_j1 in coordinates (any order of i, j)."""
    li1 = COV_RING.gens[l_index(i, 1)]
    li2 = COV_RING.gens[l_index(i, 2)]
    lj1 = COV_RING.gens[l_index(j, 1)]
    lj2 = COV_RING.gens[l_index(j, 2)]
    return li1 * lj2 - li2 * lj1


@lru_cache(maxsize=200_000)
def expand_key(key: GenKey) -> PolyElement:
    """Coordinate expansion of a generator monomial, memoised on prefixes."""
    l_exps, p_exps = key
    for k in range(14, -1, -1):
        if p_exps[k]:
            reduced = p_exps[:k] + (p_exps[k] - 1,) + p_exps[k + 1:]
            return expand_key((l_exps, reduced)) * pluecker_poly(*PAIRS[k])
    for k in range(5, -1, -1):
        if l_exps[k]:
            reduced = l_exps[:k] + (l_exps[k] - 1,) + l_exps[k + 1:]
            return expand_key((reduced, p_exps)) * linear_form_poly(k + 1)
    return COV_RING.one


def expand_generators(gens: GenForm) -> PolyElement:
    result = COV_RING.zero
    for key, coeff in gens.items():
        result += expand_key(key) * coeff
    return result


def generator_text(gens: GenForm) -> str:
    """Render a generator form as a signed sum of monomials."""
    if not gens:
        return "0"
    parts = []
    for key in sorted(gens, reverse=True):
        coeff = gens[key]
        monomial = key_text(key)
        if coeff == 1:
            text = monomial
        elif coeff == -1:
            text = f"-{monomial}"
        else:
            text = f"{coeff}*{monomial}" if monomial != "1" else str(coeff)
        parts.append(text)
    return " + ".join(parts).replace("+ -", "- ")


def grading_of(poly: PolyElement) -> Tuple[Tuple[int, ...], int]:
    """
    Multidegree and order of a nonzero coordinate polynomial.

    Raises:
        DegreeMismatch: If the polynomial is not multihomogeneous
        ValueError: For the zero polynomial
    """
    grading = None
    for exp in poly.keys():
        current = (tuple(exp[2 * i] + exp[2 * i + 1] for i in range(6)),
                   exp[X1_INDEX] + exp[X2_INDEX])
        if grading is None:
            grading = current
        elif grading != current:
            raise DegreeMismatch(f"Polynomial mixes gradings {grading} and {current}")
    if grading is None:
        raise ValueError("The zero polynomial has no grading")
    return grading


# ---------------------------------------------------------------------------
# Covariants


class Covariant:
    """
    Element of the covariant ring C(V^6), multihomogeneous of one grading.

    A covariant may carry a generator form (a combination of monomials in
    l_i and p_ij) besides, or instead of, its coordinate expansion. The
    expansion is built on first use. Products and sums of covariants that
    both carry generator forms keep them, so I_5 factors stay visible.
    """

    __slots__ = ("multidegree", "order", "_poly", "_gens")

    def __init__(self, multidegree: Sequence[int], order: int,
                 poly: Optional[PolyElement] = None, generators: Optional[GenForm] = None):
        if poly is None and generators is None:
            raise ValueError("A covariant needs a polynomial or a generator form")
        if len(multidegree) != 6:
            raise ValueError(f"Multidegree must have 6 entries, got {len(multidegree)}")
        self.multidegree: Tuple[int, ...] = tuple(multidegree)
        self.order = order
        self._poly = poly
        self._gens = None if generators is None else {k: c for k, c in generators.items() if c}

    # -- construction -----------------------------------------------------

    @classmethod
    def from_poly(cls, poly: PolyElement, multidegree: Optional[Sequence[int]] = None,
                  order: Optional[int] = None) -> "Covariant":
        """Wrap a coordinate polynomial, inferring its grading when not given."""
        if poly.ring != COV_RING:
            raise ValueError("Covariant polynomials must live in the coordinate ring")
        if multidegree is None or order is None:
            multidegree, order = grading_of(poly)
        return cls(multidegree, order, poly=poly)

    @classmethod
    def from_generators(cls, gens: GenForm, multidegree: Optional[Sequence[int]] = None,
                        order: Optional[int] = None) -> "Covariant":
        """
        Wrap a generator form.

        Raises:
            DegreeMismatch: If the monomials have different gradings
        """
        gradings = {key_grading(key) for key in gens}
        if len(gradings) > 1:
            raise DegreeMismatch(f"Generator monomials of different gradings: {sorted(gradings)}")
        if gradings:
            multidegree, order = gradings.pop()
        elif multidegree is None or order is None:
            raise ValueError("An empty generator form needs an explicit grading")
        return cls(multidegree, order, generators={k: _rational(c) for k, c in gens.items()})

    @classmethod
    def zero(cls, multidegree: Sequence[int], order: int) -> "Covariant":
        return cls(multidegree, order, poly=COV_RING.zero, generators={})

    @classmethod
    def one(cls) -> "Covariant":
        return cls(_ZERO_L, 0, generators={(_ZERO_L, _ZERO_P): QQ.one})

    # -- representations --------------------------------------------------

    @property
    def poly(self) -> PolyElement:
        """Coordinate expansion, materialised from the generator form if needed."""
        if self._poly is None:
            self._poly = expand_generators(self._gens)
        return self._poly

    @property
    def generators(self) -> Optional[GenForm]:
        return None if self._gens is None else dict(self._gens)

    @property
    def has_generators(self) -> bool:
        return self._gens is not None

    @property
    def is_materialized(self) -> bool:
        return self._poly is not None

    # -- grading ----------------------------------------------------------

    @property
    def grading(self) -> Tuple[Tuple[int, ...], int]:
        return self.multidegree, self.order

    def is_uniform(self) -> bool:
        return len(set(self.multidegree)) == 1

    @property
    def degree(self) -> int:
        """Common degree d in each linear form."""
        if not self.is_uniform():
            raise NonUniformDegree(f"Multidegree {self.multidegree} is not uniform")
        return self.multidegree[0]

    def is_zero(self) -> bool:
        if self._gens is not None and not self._gens:
            return True
        return not self.poly

    # -- arithmetic -------------------------------------------------------

    def _checked_grading(self, other: "Covariant") -> Tuple[Tuple[int, ...], int]:
        if self.grading == other.grading:
            return self.grading
        if other.is_zero():
            return self.grading
        if self.is_zero():
            return other.grading
        raise DegreeMismatch(f"Cannot add gradings {self.grading} and {other.grading}")

    def _combine(self, other: "Covariant", sign: int) -> "Covariant":
        multidegree, order = self._checked_grading(other)
        gens = None
        if self._gens is not None and other._gens is not None:
            gens = dict(self._gens)
            for key, coeff in other._gens.items():
                gens[key] = gens.get(key, QQ.zero) + coeff * sign
        poly = None
        if gens is None or (self._poly is not None and other._poly is not None):
            poly = self.poly + other.poly if sign > 0 else self.poly - other.poly
        return Covariant(multidegree, order, poly=poly, generators=gens)

    def __add__(self, other: "Covariant") -> "Covariant":
        return self._combine(other, 1)

    def __sub__(self, other: "Covariant") -> "Covariant":
        return self._combine(other, -1)

    def __neg__(self) -> "Covariant":
        return self.scale(-1)

    def scale(self, scalar: ScalarLike) -> "Covariant":
        value = _rational(scalar)
        gens = None if self._gens is None else {k: c * value for k, c in self._gens.items()}
        poly = None if self._poly is None else self._poly * value
        return Covariant(self.multidegree, self.order, poly=poly, generators=gens)

    def __mul__(self, other: Union["Covariant", ScalarLike]) -> "Covariant":
        if not isinstance(other, Covariant):
            return self.scale(other)
        multidegree = tuple(a + b for a, b in zip(self.multidegree, other.multidegree))
        order = self.order + other.order
        gens = None
        if self._gens is not None and other._gens is not None:
            gens = {}
            for ka, ca in self._gens.items():
                for kb, cb in other._gens.items():
                    key = key_mul(ka, kb)
                    gens[key] = gens.get(key, QQ.zero) + ca * cb
        poly = None
        if gens is None or (self._poly is not None and other._poly is not None):
            poly = self.poly * other.poly
        return Covariant(multidegree, order, poly=poly, generators=gens)

    def __rmul__(self, other: ScalarLike) -> "Covariant":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "Covariant":
        if exponent < 0:
            raise ValueError("Covariants have no negative powers")
        result = Covariant.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Covariant):
            return NotImplemented
        if self.grading != other.grading:
            return self.is_zero() and other.is_zero()
        if self._gens is not None and other._gens is not None and self._gens == other._gens:
            return True
        return self.poly == other.poly

    __hash__ = None

    def __repr__(self) -> str:
        kind = f"gens={len(self._gens)}" if self._gens is not None else f"terms={len(self.poly)}"
        return f"Covariant(multidegree={self.multidegree}, order={self.order}, {kind})"

    # -- structure --------------------------------------------------------

    def coefficients(self) -> List[PolyElement]:
        """
        Coefficient polynomials P_0..P_b of x1^(b-j) x2^j.

        Returns:
            List of length order + 1 in the coordinate ring (no x variables)
        """
        parts = [dict() for _ in range(self.order + 1)]
        for exp, coeff in self.poly.items():
            j = exp[X2_INDEX]
            stripped = exp[:X1_INDEX] + (0, 0) + exp[X2_INDEX + 1:]
            parts[j][stripped] = coeff
        return [COV_RING.from_dict(part) for part in parts]

    def i5_split(self) -> Tuple[int, "Covariant"]:
        """
        Factor out the largest power of I_5 visible in the generator form.

        Returns:
            Tuple (m, cofactor) with self = I_5^m * cofactor
        """
        if not self._gens:
            return 0, self
        m = min(min(key[1]) for key in self._gens)
        if m == 0:
            return 0, self
        gens = {(key[0], tuple(e - m for e in key[1])): c for key, c in self._gens.items()}
        multidegree = tuple(d - 5 * m for d in self.multidegree)
        return m, Covariant(multidegree, self.order, generators=gens)

    def to_text(self) -> str:
        """Generator form when available, coordinate expansion otherwise."""
        if self._gens is not None:
            return generator_text(self._gens)
        return str(self.poly.as_expr())


# ---------------------------------------------------------------------------
# Named generators


def linear_form(i: int) -> Covariant:
    """The linear form l_i."""
    if i not in LINEAR_FORMS:
        raise ValueError(f"Linear form index must be in 1..6, got {i}")
    l_exps = tuple(1 if k == i else 0 for k in LINEAR_FORMS)
    return Covariant.from_generators({(l_exps, _ZERO_P): 1})


def pluecker(i: int, j: int) -> Covariant:
    """
    The invariant p_ij = (l_i, l_j)_1, with p_ji = -p_ij.

    Raises:
        IdenticalIndices: If i == j
    """
    if i == j:
        raise IdenticalIndices(f"p_{i}{j} needs distinct indices")
    if i not in LINEAR_FORMS or j not in LINEAR_FORMS:
        raise ValueError(f"Pluecker indices must be in 1..6, got {i}, {j}")
    a, b, sign = (i, j, 1) if i < j else (j, i, -1)
    p_exps = tuple(1 if k == PAIR_INDEX[(a, b)] else 0 for k in range(15))
    return Covariant.from_generators({(_ZERO_L, p_exps): sign})


def i5() -> Covariant:
    """I_5, the product of all fifteen p_ij."""
    return Covariant.from_generators({(_ZERO_L, (1,) * 15): 1})


def universal_sextic() -> Covariant:
    """C_16, the product of the six linear forms."""
    return Covariant.from_generators({((1,) * 6, _ZERO_P): 1})


def dual_variable(k: int) -> Covariant:
    """x1 or x2 as a covariant of order 1."""
    if k not in (1, 2):
        raise ValueError(f"Dual variable index must be 1 or 2, got {k}")
    gen = COV_RING.gens[X1_INDEX if k == 1 else X2_INDEX]
    return Covariant(_ZERO_L, 1, poly=gen)


# ---------------------------------------------------------------------------
# Generic binary forms


class GenericCovariant:
    """
    Covariant expression in the coefficients of the generic binary forms.

    ``form_degrees`` counts the degree in the coefficients of each generic
    form, in GENERIC_FORMS order.
    """

    __slots__ = ("poly", "form_degrees", "order")

    def __init__(self, poly: PolyElement, form_degrees: Sequence[int], order: int):
        self.poly = poly
        self.form_degrees: Tuple[int, ...] = tuple(form_degrees)
        self.order = order

    @classmethod
    def form(cls, name: str) -> "GenericCovariant":
        """The generic form itself, e.g. f6 or q2."""
        degrees = tuple(1 if key == name else 0 for key in GENERIC_FORMS)
        return cls(generic_form_poly(name), degrees, GENERIC_FORMS[name])

    @classmethod
    def constant(cls, value: ScalarLike) -> "GenericCovariant":
        return cls(GENERIC_RING.ground_new(_rational(value)), (0,) * len(GENERIC_FORMS), 0)

    @property
    def grading(self) -> Tuple[Tuple[int, ...], int]:
        return self.form_degrees, self.order

    def is_zero(self) -> bool:
        return not self.poly

    def _combine(self, other: "GenericCovariant", sign: int) -> "GenericCovariant":
        if self.grading != other.grading and not (self.is_zero() or other.is_zero()):
            raise DegreeMismatch(f"Cannot add gradings {self.grading} and {other.grading}")
        degrees, order = other.grading if self.is_zero() else self.grading
        poly = self.poly + other.poly if sign > 0 else self.poly - other.poly
        return GenericCovariant(poly, degrees, order)

    def __add__(self, other: "GenericCovariant") -> "GenericCovariant":
        return self._combine(other, 1)

    def __sub__(self, other: "GenericCovariant") -> "GenericCovariant":
        return self._combine(other, -1)

    def __neg__(self) -> "GenericCovariant":
        return GenericCovariant(-self.poly, self.form_degrees, self.order)

    def __mul__(self, other: Union["GenericCovariant", ScalarLike]) -> "GenericCovariant":
        if isinstance(other, GenericCovariant):
            degrees = tuple(a + b for a, b in zip(self.form_degrees, other.form_degrees))
            return GenericCovariant(self.poly * other.poly, degrees, self.order + other.order)
        return GenericCovariant(self.poly * _rational(other), self.form_degrees, self.order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "GenericCovariant":
        if exponent < 0:
            raise ValueError("Covariants have no negative powers")
        result = GenericCovariant.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GenericCovariant):
            return NotImplemented
        return self.poly == other.poly and (self.grading == other.grading or self.is_zero())

    __hash__ = None

    def __repr__(self) -> str:
        return f"GenericCovariant(degrees={self.form_degrees}, order={self.order}, terms={len(self.poly)})"

    def coefficients(self) -> List[PolyElement]:
        """Coefficients of x1^(b-j) x2^j as polynomials in the generic coefficients."""
        parts = [dict() for _ in range(self.order + 1)]
        for exp, coeff in self.poly.items():
            j = exp[GENERIC_X2_INDEX]
            stripped = exp[:GENERIC_X1_INDEX] + (0, 0)
            parts[j][stripped] = coeff
        return [GENERIC_RING.from_dict(part) for part in parts]


# ---------------------------------------------------------------------------
# Transvectants


def _partial(poly: PolyElement, x1: PolyElement, x2: PolyElement, a: int, b: int) -> PolyElement:
    for _ in range(a):
        poly = poly.diff(x1)
    for _ in range(b):
        poly = poly.diff(x2)
    return poly


def transvect_polys(f: PolyElement, g: PolyElement, m: int, n: int, r: int,
                    x1: PolyElement, x2: PolyElement) -> PolyElement:
    """
    (f, g)_r for forms of orders m and n in the variables x1, x2.

    Normalised by (m-r)!(n-r)!/(m! n!) so that (l_i, l_j)_1 = p_ij.

    Raises:
        OrderTooSmall: If r exceeds m or n, or is negative
    """
    if r < 0 or r > m or r > n:
        raise OrderTooSmall(f"Transvectant index {r} exceeds orders {m} and {n}")
    prefactor = QQ(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))
    total = f.ring.zero
    for k in range(r + 1):
        term = _partial(f, x1, x2, r - k, k) * _partial(g, x1, x2, k, r - k)
        total += term * ((-1) ** k * comb(r, k))
    return total * prefactor


def transvectant(f: Union[Covariant, GenericCovariant], g: Union[Covariant, GenericCovariant],
                 r: int) -> Union[Covariant, GenericCovariant]:
    """
    The r-th transvectant of two covariants of the same kind.

    Raises:
        OrderTooSmall: If r exceeds the order of f or g
        ValueError: If a linear-form covariant is paired with a generic one
    """
    if isinstance(f, Covariant) and isinstance(g, Covariant):
        x1, x2 = COV_RING.gens[X1_INDEX], COV_RING.gens[X2_INDEX]
        poly = transvect_polys(f.poly, g.poly, f.order, g.order, r, x1, x2)
        multidegree = tuple(a + b for a, b in zip(f.multidegree, g.multidegree))
        return Covariant(multidegree, f.order + g.order - 2 * r, poly=poly)
    if isinstance(f, GenericCovariant) and isinstance(g, GenericCovariant):
        x1 = GENERIC_RING.gens[GENERIC_X1_INDEX]
        x2 = GENERIC_RING.gens[GENERIC_X2_INDEX]
        poly = transvect_polys(f.poly, g.poly, f.order, g.order, r, x1, x2)
        degrees = tuple(a + b for a, b in zip(f.form_degrees, g.form_degrees))
        return GenericCovariant(poly, degrees, f.order + g.order - 2 * r)
    raise ValueError("Transvectant operands must both be generic or both be specialised")


# ---------------------------------------------------------------------------
# Specialisation


def _product_coefficients(indices: Sequence[int]) -> List[PolyElement]:
    """Coefficients of prod l_i, as c_j multiplying x1^(n-j) x2^j."""
    product = COV_RING.one
    for i in indices:
        product *= linear_form_poly(i)
    parts = [dict() for _ in range(len(indices) + 1)]
    for exp, coeff in product.items():
        stripped = exp[:X1_INDEX] + (0, 0) + exp[X2_INDEX + 1:]
        parts[exp[X2_INDEX]][stripped] = coeff
    return [COV_RING.from_dict(part) for part in parts]


def specialize_form(F: GenericCovariant, assignment: Dict[str, Sequence[int]]) -> Covariant:
    """
    Substitute products of linear forms for the generic forms.

    Args:
        F: Expression in generic coefficients
        assignment: Generic form name -> indices of the linear forms whose product it becomes

    Returns:
        Covariant of order F.order

    Raises:
        DegreeMismatch: If a product has the wrong number of factors
        ValueError: If a generic form occurring in F is not bound
    """
    images: Dict[int, PolyElement] = {}
    multidegree = [0] * 6
    for name, degree in zip(GENERIC_FORMS, F.form_degrees):
        if degree == 0:
            continue
        if name not in assignment:
            raise ValueError(f"Generic form {name} is not bound")
        indices = list(assignment[name])
        if len(indices) != GENERIC_FORMS[name]:
            raise DegreeMismatch(
                f"{name} has order {GENERIC_FORMS[name]} but {len(indices)} factors were given")
        for i in indices:
            multidegree[i - 1] += degree
        for j, coefficient in enumerate(_product_coefficients(indices)):
            images[generic_index(name, j)] = coefficient

    x1, x2 = COV_RING.gens[X1_INDEX], COV_RING.gens[X2_INDEX]
    powers: Dict[Tuple[int, int], PolyElement] = {}

    def power(var: int, e: int) -> PolyElement:
        if (var, e) not in powers:
            powers[(var, e)] = images[var] ** e
        return powers[(var, e)]

    result = COV_RING.zero
    for exp, coeff in F.poly.items():
        term = COV_RING.ground_new(coeff)
        for var, e in enumerate(exp[:GENERIC_X1_INDEX]):
            if e:
                term *= power(var, e)
        term *= x1 ** exp[GENERIC_X1_INDEX] * x2 ** exp[GENERIC_X2_INDEX]
        result += term
    return Covariant(multidegree, F.order, poly=result)


# ---------------------------------------------------------------------------
# S6 action


def as_images(sigma: Union[Sequence[int], Permutation]) -> Tuple[int, ...]:
    """
    Normalise a permutation of {1..6} to its tuple of images.

    Accepts a 1-based image tuple or a sympy Permutation on 0..5.
    """
    if isinstance(sigma, Permutation):
        array = list(sigma.array_form) + list(range(sigma.size, 6))
        images = tuple(k + 1 for k in array[:6])
    else:
        images = tuple(sigma)
    if sorted(images) != list(LINEAR_FORMS):
        raise ValueError(f"Not a permutation of 1..6: {images}")
    return images


def compose(sigma: Sequence[int], tau: Sequence[int]) -> Tuple[int, ...]:
    """(sigma o tau)(i) = sigma(tau(i))."""
    return tuple(sigma[tau[i] - 1] for i in range(6))


@lru_cache(maxsize=1024)
def _position_map(images: Tuple[int, ...]) -> Tuple[int, ...]:
    target = list(range(len(COV_RING.gens)))
    for i in LINEAR_FORMS:
        for k in (1, 2):
            target[l_index(i, k)] = l_index(images[i - 1], k)
    return tuple(target)


def permute_key(images: Tuple[int, ...], key: GenKey) -> Tuple[GenKey, int]:
    """Image of a generator monomial under l_i -> l_sigma(i), with its sign."""
    l_exps, p_exps = key
    new_l = [0] * 6
    for i, e in enumerate(l_exps):
        new_l[images[i] - 1] = e
    new_p = [0] * 15
    sign = 1
    for (i, j), e in zip(PAIRS, p_exps):
        if not e:
            continue
        a, b = images[i - 1], images[j - 1]
        if a > b:
            a, b = b, a
            if e % 2:
                sign = -sign
        new_p[PAIR_INDEX[(a, b)]] = e
    return (tuple(new_l), tuple(new_p)), sign


def s6_act(sigma: Union[Sequence[int], Permutation], C: Covariant) -> Covariant:
    """
    Act by l_i -> l_sigma(i).

    The action is a left action: s6_act(compose(s, t), C) == s6_act(s, s6_act(t, C)).
    """
    images = as_images(sigma)
    multidegree = [0] * 6
    for i, d in enumerate(C.multidegree):
        multidegree[images[i] - 1] = d
    gens = None
    if C.has_generators:
        gens = {}
        for key, coeff in C.generators.items():
            new_key, sign = permute_key(images, key)
            gens[new_key] = gens.get(new_key, QQ.zero) + coeff * sign
    poly = None
    if gens is None or C.is_materialized:
        target = _position_map(images)
        moved = {}
        for exp, coeff in C.poly.items():
            new_exp = [0] * len(exp)
            for pos, e in enumerate(exp):
                new_exp[target[pos]] = e
            moved[tuple(new_exp)] = coeff
        poly = COV_RING.from_dict(moved)
    return Covariant(multidegree, C.order, poly=poly, generators=gens)


def orbit(C: Covariant, group: Iterable[Tuple[int, ...]]) -> List[Covariant]:
    """Distinct images of C under the given permutations, up to sign for monomials."""
    seen = set()
    result = []
    for sigma in group:
        image = s6_act(sigma, C)
        if image.has_generators and len(image.generators) == 1:
            tag = next(iter(image.generators))
        else:
            tag = tuple(sorted(image.poly.items()))
        if tag not in seen:
            seen.add(tag)
            result.append(image)
    return result
