"""
Nu Bridge
Substitution of theta gradients into covariants, chi5 pole bookkeeping and Fourier coefficients.
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from .covariants import PAIRS, Covariant, GenericCovariant, GenForm
from .errors import FractionalResidue, NotDivisibleInBox, OutOfBox
from .exact_core import (
    GENERIC_FORMS,
    GENERIC_X1_INDEX,
    GENERIC_X2_INDEX,
    X2_INDEX,
    GaussRat,
    as_gauss,
    gauss,
    gauss_is_zero,
    gauss_to_str,
    generic_index,
)
from .series import FourierSeries, series_div, series_mul
from .spaces import in_generator_form
from .theta import chi5, even_theta, gradient, pluecker_tilde

logger = logging.getLogger(__name__)

# prod_{a<b} p~_ab = DISCRIMINANT_SCALE * chi5^6
DISCRIMINANT_SCALE = -(2 ** 36)
# prod vartheta_i = THETA_PRODUCT_SCALE * chi5
THETA_PRODUCT_SCALE = -(2 ** 6)

Components = List[FourierSeries]


@dataclass(frozen=True)
class FourierIndex:
    """Index (n, r, m) of a Fourier coefficient; its box exponent is (4n, 2r, 4m)."""
    n: Fraction
    r: Fraction
    m: Fraction

    @classmethod
    def of(cls, n, r, m) -> "FourierIndex":
        return cls(Fraction(n), Fraction(r), Fraction(m))

    @classmethod
    def parse(cls, text: str) -> "FourierIndex":
        """Parse '1,1,1' or '1/2,1,3/2'."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"Fourier index needs three entries, got '{text}'")
        return cls.of(*(Fraction(p) for p in parts))

    @classmethod
    def from_exponent(cls, exponent: Tuple[int, int, int]) -> "FourierIndex":
        e1, e12, e2 = exponent
        return cls(Fraction(e1, 4), Fraction(e12, 2), Fraction(e2, 4))

    @property
    def exponent(self) -> Tuple[int, int, int]:
        values = (self.n * 4, self.r * 2, self.m * 4)
        if any(v.denominator != 1 for v in values):
            raise ValueError(f"Index {self} does not land on the exponent lattice")
        return tuple(int(v) for v in values)

    @property
    def semipositive(self) -> bool:
        return 4 * self.n * self.m >= self.r * self.r

    def __str__(self) -> str:
        return f"({self.n},{self.r},{self.m})"


@dataclass
class MeroForm:
    """
    Meromorphic vector-valued form components * chi5^k / chi5^e.

    ``components[j]`` multiplies x1^(b-j) x2^j. The factor chi5^k
    (``chi5_numerator_power``) is kept symbolic until needed.
    """
    components: Tuple[FourierSeries, ...]
    chi5_exponent: Fraction
    weight: Tuple[int, Fraction]
    chi5_numerator_power: int = 0
    provenance: str = ""

    @property
    def box(self) -> int:
        return min(c.box for c in self.components)

    @property
    def order(self) -> int:
        return len(self.components) - 1

    def materialized(self) -> "MeroForm":
        """Multiply the symbolic chi5^k into the components."""
        if self.chi5_numerator_power == 0:
            return self
        factor = chi5(self.box) ** self.chi5_numerator_power
        components = tuple(series_mul(c, factor) for c in self.components)
        return MeroForm(components, self.chi5_exponent, self.weight, 0, self.provenance)

    def scale(self, scalar) -> "MeroForm":
        return MeroForm(tuple(c.scale(scalar) for c in self.components), self.chi5_exponent,
                        self.weight, self.chi5_numerator_power, self.provenance)

    def restrict(self, box: int) -> "MeroForm":
        return MeroForm(tuple(c.restrict(box) for c in self.components), self.chi5_exponent,
                        self.weight, self.chi5_numerator_power, self.provenance)

    def is_holomorphic_candidate(self) -> bool:
        return self.chi5_exponent <= self.chi5_numerator_power and not any(
            c.has_negative_support() for c in self.components)

    def sidecar(self) -> Dict[str, Any]:
        """Metadata written next to cached components."""
        return {
            'weight': [self.weight[0], str(self.weight[1])],
            'chi5_exponent': str(self.chi5_exponent),
            'chi5_numerator_power': self.chi5_numerator_power,
            'box': self.box,
            'components': len(self.components),
            'provenance': self.provenance,
        }

    def to_json(self) -> str:
        return json.dumps(self.sidecar(), indent=2)


# ---------------------------------------------------------------------------
# Vector arithmetic on component lists


def symmetric_product(vectors: Sequence[Tuple[FourierSeries, FourierSeries]], box: int) -> Components:
    """Coefficients of prod (g1 x1 + g2 x2) in x1^(n-j) x2^j order."""
    result: Components = [FourierSeries.one(box)]
    for vector in vectors:
        result = _extend_symmetric(result, vector, box)
    return result


def component_product(a: Components, b: Components) -> Components:
    """Product of two forms in x: (sum a_i x^i)(sum b_j x^j)."""
    box = min(min(c.box for c in a), min(c.box for c in b))
    out = [FourierSeries.zero(box) for _ in range(len(a) + len(b) - 1)]
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if not bj.is_zero():
                out[i + j] = out[i + j] + series_mul(ai, bj)
    return out


def mero_mul(F: MeroForm, G: MeroForm) -> MeroForm:
    """Product of meromorphic forms; exponents and weights add."""
    return MeroForm(
        tuple(component_product(list(F.components), list(G.components))),
        F.chi5_exponent + G.chi5_exponent,
        (F.weight[0] + G.weight[0], F.weight[1] + G.weight[1]),
        F.chi5_numerator_power + G.chi5_numerator_power,
        f"({F.provenance})*({G.provenance})",
    )


# ---------------------------------------------------------------------------
# Evaluation of generator monomials


@lru_cache(maxsize=4096)
def _pluecker_part(p_exps: Tuple[int, ...], N: int) -> FourierSeries:
    for k in range(14, -1, -1):
        if p_exps[k]:
            reduced = p_exps[:k] + (p_exps[k] - 1,) + p_exps[k + 1:]
            return series_mul(_pluecker_part(reduced, N), pluecker_tilde(*PAIRS[k], N))
    return FourierSeries.one(N)


@lru_cache(maxsize=4096)
def _linear_part(l_exps: Tuple[int, ...], N: int) -> Tuple[FourierSeries, ...]:
    for k in range(5, -1, -1):
        if l_exps[k]:
            reduced = l_exps[:k] + (l_exps[k] - 1,) + l_exps[k + 1:]
            previous = list(_linear_part(reduced, N))
            return tuple(_extend_symmetric(previous, gradient(k + 1, N), N))
    return (FourierSeries.one(N),)


def _extend_symmetric(current: Components, vector: Tuple[FourierSeries, FourierSeries],
                      box: int) -> Components:
    g1, g2 = vector
    nxt: Components = []
    for j in range(len(current) + 1):
        term = FourierSeries.zero(box)
        if j < len(current):
            term = term + series_mul(current[j], g1)
        if j > 0:
            term = term + series_mul(current[j - 1], g2)
        nxt.append(term)
    return nxt


def _eval_generators(gens: GenForm, order: int, N: int) -> Components:
    components = [FourierSeries.zero(N) for _ in range(order + 1)]
    for (l_exps, p_exps), coeff in sorted(gens.items()):
        scalar = _pluecker_part(p_exps, N)
        if scalar.is_zero():
            continue
        scalar = scalar.scale(as_gauss(coeff))
        for j, part in enumerate(_linear_part(l_exps, N)):
            if not part.is_zero():
                components[j] = components[j] + series_mul(scalar, part)
    return components


def _substitute_terms(poly, values: Dict[int, FourierSeries], n_vars: int, x2_index: int,
                      order: int, box: int) -> Components:
    """
    Evaluate a polynomial whose first n_vars variables map to series.

    Products are built along sorted terms so that shared prefixes are computed once.
    """
    cache: Dict[Tuple[int, ...], FourierSeries] = {(): FourierSeries.one(box)}

    def product(factors: Tuple[int, ...]) -> FourierSeries:
        if factors not in cache:
            cache[factors] = series_mul(product(factors[:-1]), values[factors[-1]])
        return cache[factors]

    components = [FourierSeries.zero(box) for _ in range(order + 1)]
    for exp, coeff in sorted(poly.items()):
        factors = tuple(var for var in range(n_vars) for _ in range(exp[var]))
        value = product(factors)
        j = exp[x2_index]
        components[j] = components[j] + value.scale(as_gauss(coeff))
    logger.debug("substituted %d terms with %d cached products", len(poly), len(cache))
    return components


def _eval_coordinates(C: Covariant, N: int) -> Components:
    values: Dict[int, FourierSeries] = {}
    for i in range(1, 7):
        g1, g2 = gradient(i, N)
        values[2 * (i - 1)] = g1
        values[2 * (i - 1) + 1] = g2
    return _substitute_terms(C.poly, values, 12, X2_INDEX, C.order, N)


def _numerator(C: Covariant, N: int) -> Components:
    C = in_generator_form(C)
    if C.has_generators:
        return _eval_generators(C.generators, C.order, N)
    return _eval_coordinates(C, N)


def nu_eval(C: Covariant, N: int, provenance: str = "") -> MeroForm:
    """
    Image of a covariant of uniform degree d under l_ik -> G_ik, divided by chi5^d.

    A visible I_5^m factor is not substituted: its image -2^36 chi5^6 per
    factor is carried as the symbolic numerator power.

    Raises:
        NonUniformDegree: If C is not of uniform degree
    """
    d = C.degree
    b = C.order
    m, cofactor = C.i5_split()
    logger.info("nu_eval: degree %d order %d (I5^%d) at box %d", d, b, m, N)
    components = _numerator(cofactor, N)
    if m:
        components = [c.scale(DISCRIMINANT_SCALE ** m) for c in components]
    weight = (b, Fraction(d) - Fraction(b, 2))
    return MeroForm(tuple(components), Fraction(d), weight, 6 * m, provenance)


def reduce(F: MeroForm, steps: int) -> MeroForm:
    """
    Lower the chi5 exponent by `steps`.

    The symbolic numerator power is cancelled first; remaining steps divide
    each component by chi5, losing 4 in the box each time.

    Raises:
        NotDivisibleInBox: If a division fails or produces a pole
        ValueError: If steps is negative or exceeds the exponent
    """
    if steps < 0 or steps > F.chi5_exponent:
        raise ValueError(f"Cannot reduce exponent {F.chi5_exponent} by {steps}")
    symbolic = min(steps, F.chi5_numerator_power)
    remaining = steps - symbolic
    components = list(F.components)
    for step in range(remaining):
        divided = []
        for j, component in enumerate(components):
            quotient = series_div(component, chi5(component.box))
            if quotient.has_negative_support():
                raise NotDivisibleInBox(
                    f"Component {j} acquires a pole at reduction step {step + 1}")
            divided.append(quotient)
        components = divided
        logger.info("reduce: step %d done, box now %d", step + 1, min(c.box for c in components))
    return MeroForm(tuple(components), F.chi5_exponent - steps, F.weight,
                    F.chi5_numerator_power - symbolic, F.provenance)


def fourier_coefficient(F: MeroForm, index: FourierIndex) -> List[GaussRat]:
    """
    Coefficient vector at (e1, e12, e2) = (4n, 2r, 4m).

    Raises:
        ValueError: If the form still has a chi5 pole
        OutOfBox: If the index lies outside the box
    """
    if F.chi5_exponent != 0:
        raise ValueError("Reduce the form to chi5 exponent 0 first")
    e = index.exponent
    if e[0] > F.box or e[2] > F.box or e[0] < 0 or e[2] < 0:
        raise OutOfBox(f"Index {index} needs box {max(e[0], e[2])}, form has {F.box}")
    form = F.materialized()
    return [c.coefficient(e) for c in form.components]


# ---------------------------------------------------------------------------
# Proportionality


def proportionality_constant(a: Sequence[FourierSeries], b: Sequence[FourierSeries]) -> Optional[GaussRat]:
    """
    The scalar s with a = s * b on the common box, or None.

    Returns zero when a vanishes; None when b vanishes but a does not.
    """
    if len(a) != len(b):
        return None
    box = min(min(s.box for s in a), min(s.box for s in b))
    a = [s.restrict(box) for s in a]
    b = [s.restrict(box) for s in b]
    scalar = None
    for sa, sb in zip(a, b):
        for e in sb.support():
            scalar = sa.coefficient(e) / sb.coefficient(e)
            break
        if scalar is not None:
            break
    if scalar is None:
        return gauss() if all(s.is_zero() for s in a) else None
    for sa, sb in zip(a, b):
        if not sa == sb.scale(scalar):
            return None
    return scalar


def forms_proportional(F: MeroForm, G: MeroForm) -> Optional[GaussRat]:
    """
    Compare two meromorphic forms without dividing.

    With s = k - e for each form, the form with the larger s is multiplied by
    chi5^(difference) and the numerators are compared.
    """
    s_f = F.chi5_numerator_power - F.chi5_exponent
    s_g = G.chi5_numerator_power - G.chi5_exponent
    if (s_f - s_g).denominator != 1:
        return None
    diff = int(s_f - s_g)
    a, b = list(F.components), list(G.components)
    if diff > 0:
        factor = chi5(min(c.box for c in a)) ** diff
        a = [series_mul(c, factor) for c in a]
    elif diff < 0:
        factor = chi5(min(c.box for c in b)) ** (-diff)
        b = [series_mul(c, factor) for c in b]
    return proportionality_constant(a, b)


@dataclass
class CoefficientMatch:
    """Outcome of matching a span of forms against published coefficient vectors."""
    matched: bool
    scalar: Optional[GaussRat]
    combination: List[GaussRat] = field(default_factory=list)
    lowest_exponent: Optional[Tuple[int, int, int]] = None
    computed: Dict[str, List[str]] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'matched': self.matched,
            'scalar': gauss_to_str(self.scalar) if self.scalar is not None else None,
            'combination': [gauss_to_str(c) for c in self.combination],
            'lowest_exponent': list(self.lowest_exponent) if self.lowest_exponent else None,
            'computed': self.computed,
        }


def match_coefficients(forms: Sequence[MeroForm],
                       targets: Dict[FourierIndex, Sequence[int]]) -> CoefficientMatch:
    """
    Find alpha and lambda != 0 with sum alpha_k a_{F_k}(idx) = lambda * target(idx) for every index.

    The forms must be reduced to chi5 exponent 0. The joint nullspace of the
    stacked linear system is computed over Q(i).
    """
    if not forms:
        raise ValueError("No forms to match")
    vectors = {idx: [fourier_coefficient(F, idx) for F in forms] for idx in targets}
    n = len(forms)
    rows = []
    for idx, target in targets.items():
        for j, value in enumerate(target):
            row = [vectors[idx][k][j] for k in range(n)] + [-as_gauss(value)]
            rows.append(row)
    matrix = DomainMatrix(rows, (len(rows), n + 1), QQ_I)
    null = matrix.nullspace().to_list()
    low = None
    supports = [e for F in forms for c in F.materialized().components for e in c.support()]
    if supports:
        low = min(supports, key=lambda e: (e[0] + e[2], e))
    for vector in null:
        scalar = vector[-1]
        if not gauss_is_zero(scalar):
            alpha = [v / scalar for v in vector[:-1]]
            computed = {}
            for idx in targets:
                combined = [sum((alpha[k] * vectors[idx][k][j] for k in range(n)), gauss())
                            for j in range(len(targets[idx]))]
                computed[str(idx)] = [gauss_to_str(c) for c in combined]
            return CoefficientMatch(True, gauss(1), alpha, low, computed)
    logger.warning("No element of the span matches the %d target vectors", len(targets))
    return CoefficientMatch(False, None, [], low, {})


# ---------------------------------------------------------------------------
# Intermediate-level profiles


@dataclass(frozen=True)
class ProfileForm:
    """How one generic form is realised: a symmetric product of gradients over a denominator."""
    form: str
    gradients: Tuple[int, ...]
    weight_k: Fraction
    thetas: Tuple[int, ...] = ()
    chi5_fraction: Fraction = Fraction(0)


@dataclass(frozen=True)
class Profile:
    name: str
    forms: Tuple[ProfileForm, ...]

    def form(self, name: str) -> ProfileForm:
        for candidate in self.forms:
            if candidate.form == name:
                return candidate
        raise ValueError(f"Profile {self.name} has no generic form {name}")


PROFILES: Dict[str, Profile] = {
    "gamma0_2": Profile("gamma0_2", (
        ProfileForm("q1", (1, 2), Fraction(-2), thetas=(1, 2, 3, 4, 5, 6)),
        ProfileForm("q2", (3, 4), Fraction(0), thetas=(7, 8)),
        ProfileForm("q3", (5, 6), Fraction(0), thetas=(9, 10)),
    )),
    "gamma2_w": Profile("gamma2_w", (
        ProfileForm("f5", (1, 2, 3, 4, 5), Fraction(-5, 3), chi5_fraction=Fraction(5, 6)),
        ProfileForm("l", (6,), Fraction(-1, 3), chi5_fraction=Fraction(1, 6)),
    )),
    "gamma2_w_theta": Profile("gamma2_w_theta", (
        ProfileForm("f5", (1, 2, 3, 4, 5), Fraction(-1), thetas=(1, 2, 5, 6, 7, 8, 9)),
        ProfileForm("l", (6,), Fraction(-1), thetas=(3, 4, 10)),
    )),
}


def profile_eval(profile: str, C: GenericCovariant, N: int, provenance: str = "") -> MeroForm:
    """
    Evaluate a generic-coefficient covariant on an intermediate-level profile.

    Numerators are symmetric products of gradients; theta denominators are
    completed to a power of the full theta product (multiplying the numerator
    by the missing thetas) and converted to chi5 powers, so no division occurs.

    Raises:
        FractionalResidue: If the chi5 exponent is not an integer
        ValueError: For unknown profiles or generic forms outside the profile
    """
    if profile not in PROFILES:
        raise ValueError(f"Unknown profile: {profile}")
    chosen = PROFILES[profile]
    values: Dict[int, FourierSeries] = {}
    theta_counts: Counter = Counter()
    chi5_fraction = Fraction(0)
    k_total = Fraction(-C.order, 2)
    for name, degree in zip(GENERIC_FORMS, C.form_degrees):
        if degree == 0:
            continue
        entry = chosen.form(name)
        vectors = [gradient(i, N) for i in entry.gradients]
        for j, component in enumerate(symmetric_product(vectors, N)):
            values[generic_index(name, j)] = component
        for theta in entry.thetas:
            theta_counts[theta] += degree
        chi5_fraction += degree * entry.chi5_fraction
        k_total += degree * (entry.weight_k + Fraction(GENERIC_FORMS[name], 2))

    components = _substitute_terms(C.poly, values, GENERIC_X1_INDEX, GENERIC_X2_INDEX, C.order, N)

    theta_power = max(theta_counts.values(), default=0)
    if theta_power:
        completion = []
        for theta in range(1, 11):
            completion += [theta] * (theta_power - theta_counts[theta])
        if completion:
            factor = FourierSeries.one(N)
            for theta in completion:
                factor = series_mul(factor, even_theta(theta, N))
            components = [series_mul(c, factor) for c in components]
        components = [c.scale(Fraction(1, THETA_PRODUCT_SCALE ** theta_power)) for c in components]
    exponent = chi5_fraction + theta_power
    if exponent.denominator != 1:
        raise FractionalResidue(f"Profile {profile} leaves chi5 exponent {exponent}")
    logger.info("profile_eval(%s): chi5 exponent %s, weight (%d, %s)", profile, exponent, C.order, k_total)
    return MeroForm(tuple(components), exponent, (C.order, k_total), 0, provenance)
