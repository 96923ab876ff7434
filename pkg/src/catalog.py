"""
Covariant Catalog
Named covariants used as worked examples, plus the C_ij family, the W space and the quadric invariants.
"""

import logging
import re
from functools import lru_cache
from typing import Dict, List, Tuple

from .covariants import (
    PAIR_INDEX,
    PAIRS,
    Covariant,
    GenericCovariant,
    GenKey,
    i5,
    linear_form,
    specialize_form,
    transvectant,
    universal_sextic,
)
from .exact_core import poly_exact_div
from .symmetry import symmetric_orbit_span
from .theta import Partition6, all_partitions, char_partition_table
from .spaces import LinearSpace, in_generator_form

logger = logging.getLogger(__name__)

_FACTOR = re.compile(r"(l|p)(\d)(\d)?(?:\^(\d+))?")

# Invariants of degree one, in the order i1..i5.
I1_BASIS: Tuple[str, ...] = (
    "p12 p34 p56",
    "p12 p35 p46",
    "p13 p24 p56",
    "p13 p25 p46",
    "p14 p25 p36",
)

# The monomial part of the basis of C'_{2,6}; C1..C5 are C1_6 * i1..i5.
C26_MONOMIALS: Tuple[str, ...] = (
    "l1^2 l2^2 l3^2 p45 p46 p56",
    "l1^2 l2^2 l3 l4 p36 p45 p56",
    "l1^2 l2^2 l3 l5 p36 p45 p46",
    "l1^2 l2^2 l4 l5 p36^2 p45",
    "l1^2 l2^2 l3 l4 p35 p46 p56",
    "l1^2 l2^2 l4^2 p35 p36 p56",
    "l1^2 l3 l4^2 l5 p26^2 p35",
    "l1^2 l2 l4^2 l6 p25 p35 p36",
    "l1^2 l3 l4^2 l5 p25 p26 p36",
    "l1^2 l2 l3 l5^2 p24 p36 p46",
    "l1^2 l2 l3 l5 l6 p24 p36 p45",
    "l1^2 l2 l5 l6^2 p24 p34 p35",
    "l1^2 l2 l3 l5 l6 p23 p45 p46",
    "l1^2 l2 l3 l6^2 p23 p45^2",
    "l1^2 l3 l4 l5^2 p23 p26 p46",
    "l1 l2^2 l4^2 l6 p16 p35^2",
    "l1 l2 l3^2 l4 l6 p16 p25 p45",
    "l1 l2 l3^2 l5 l6 p16 p24 p45",
    "l2 l3^2 l4^2 l5 p16^2 p25",
    "l2 l3^2 l4 l5^2 p16^2 p24",
    "l2 l3 l4^2 l5^2 p16^2 p23",
    "l1 l2^2 l3^2 l4 p15 p46 p56",
    "l3 l4^2 l5^2 l6 p12^2 p36",
    "l3 l4 l5^2 l6^2 p12 p14 p23",
)

S51_COMBINATION: Dict[int, int] = {
    1: 4, 2: -4, 3: -1, 4: 1, 5: 6, 7: -7, 8: 4, 9: 1, 10: 1, 11: 3,
    13: 1, 15: -1, 21: 1, 22: -1, 27: -1, 28: 5,
}
S42_COMBINATION: Dict[int, int] = {1: 2, 2: -2, 7: 1, 8: -3, 9: 1, 16: -4}

MONOMIAL_NAMES: Dict[str, str] = {
    "C0": "p36 p45 l1 l2",
    "C1_4": "p12 l3 l4 l5 l6",
    "H": "p12 p45 p46 p56 l1 l2 l3^2",
}


def parse_monomial(text: str) -> GenKey:
    """
    Read a monomial such as 'l1^2 p36 p45' into a generator key.

    Raises:
        ValueError: On malformed factors or a repeated-index p_ii
    """
    l_exps = [0] * 6
    p_exps = [0] * 15
    for token in text.split():
        match = _FACTOR.fullmatch(token)
        if not match:
            raise ValueError(f"Cannot read factor '{token}'")
        kind, first, second, power = match.groups()
        e = int(power or 1)
        if kind == "l":
            if second is not None or not 1 <= int(first) <= 6:
                raise ValueError(f"Bad linear form '{token}'")
            l_exps[int(first) - 1] += e
        else:
            if second is None or first == second:
                raise ValueError(f"Bad Pluecker factor '{token}'")
            a, b = sorted((int(first), int(second)))
            if (a, b) not in PAIR_INDEX:
                raise ValueError(f"Bad Pluecker factor '{token}'")
            p_exps[PAIR_INDEX[(a, b)]] += e
    return tuple(l_exps), tuple(p_exps)


def monomial(text: str) -> Covariant:
    return Covariant.from_generators({parse_monomial(text): 1})


@lru_cache(maxsize=1)
def c26_basis() -> Tuple[Covariant, ...]:
    """C1..C29 in order."""
    sextic = universal_sextic()
    first = [sextic * monomial(text) for text in I1_BASIS]
    return tuple(first + [monomial(text) for text in C26_MONOMIALS])


def _combination(weights: Dict[int, int]) -> Covariant:
    basis = c26_basis()
    result = Covariant.zero(*basis[0].grading)
    for k, w in weights.items():
        result = result + basis[k - 1].scale(w)
    return result


def theta4(partition: Partition6) -> Covariant:
    """p_ab p_ac p_bc p_de p_df p_ef for the triples {a,b,c}, {d,e,f}."""
    factors = []
    for triple in partition.ordered:
        a, b, c = sorted(triple)
        factors += [f"p{a}{b}", f"p{a}{c}", f"p{b}{c}"]
    return monomial(" ".join(factors))


def grad4(i: int) -> Covariant:
    """l_i^4 times every p_ab with a, b != i."""
    if not 1 <= i <= 6:
        raise ValueError(f"Linear form index must be in 1..6, got {i}")
    factors = [f"l{i}^4"] + [f"p{a}{b}" for a, b in PAIRS if i not in (a, b)]
    return monomial(" ".join(factors))


@lru_cache(maxsize=1)
def gamma2_w_generic() -> GenericCovariant:
    """50 ((f5, f5)_4, l^2)_1 in the coefficients of a generic quintic f5 and linear form l."""
    f5 = GenericCovariant.form("f5")
    l = GenericCovariant.form("l")
    return transvectant(transvectant(f5, f5, 4), l ** 2, 1) * 50


GAMMA2_W_ASSIGNMENT = {"f5": (1, 2, 3, 4, 5), "l": (6,)}


@lru_cache(maxsize=1)
def _gamma2_w_covariant() -> Covariant:
    return in_generator_form(specialize_form(gamma2_w_generic(), GAMMA2_W_ASSIGNMENT))


def named_covariant(name: str) -> Covariant:
    """
    Look up a catalogued covariant.

    Names: I5, C1_6, i1..i5, C0, C1_4, C2_2, H, C1..C29, s51_gen, s42_gen,
    theta4(<partition label>) and grad4(<i>).

    Raises:
        KeyError: For unknown names
    """
    if name == "I5":
        return i5()
    if name == "C1_6":
        return universal_sextic()
    if name == "C2_2":
        return _gamma2_w_covariant()
    if name in MONOMIAL_NAMES:
        return monomial(MONOMIAL_NAMES[name])
    if name == "s51_gen":
        return _combination(S51_COMBINATION)
    if name == "s42_gen":
        return _combination(S42_COMBINATION)
    match = re.fullmatch(r"i([1-5])", name)
    if match:
        return monomial(I1_BASIS[int(match.group(1)) - 1])
    match = re.fullmatch(r"C([1-9]|1\d|2\d)", name)
    if match:
        return c26_basis()[int(match.group(1)) - 1]
    match = re.fullmatch(r"grad4\(([1-6])\)", name)
    if match:
        return grad4(int(match.group(1)))
    match = re.fullmatch(r"theta4\((\(\d{3}\)\(\d{3}\))\)", name)
    if match:
        labels = {p.label: p for p in all_partitions()}
        if match.group(1) in labels:
            return theta4(labels[match.group(1)])
    raise KeyError(f"Unknown covariant name: {name}")


def catalog_names() -> List[str]:
    """Every plain name accepted by named_covariant (the parametrised families excluded)."""
    names = ["I5", "C1_6", "C2_2", *MONOMIAL_NAMES, "s51_gen", "s42_gen"]
    names += [f"i{k}" for k in range(1, 6)]
    names += [f"C{k}" for k in range(1, 30)]
    return names


# ---------------------------------------------------------------------------
# Families


def cij_covariant(i: int, j: int) -> Covariant:
    """
    C_ij = l_i l_j (C16/l_i, C16/l_j)_4, an element of C'_{2,4}.

    Raises:
        ValueError: For indices outside 1..6
    """
    if not (1 <= i <= 6 and 1 <= j <= 6):
        raise ValueError(f"Indices must be in 1..6, got ({i}, {j})")
    sextic = universal_sextic()

    def quintic(k: int) -> Covariant:
        lk = linear_form(k)
        multidegree = tuple(d - (1 if m == k else 0) for m, d in enumerate(sextic.multidegree, start=1))
        return Covariant(multidegree, 5, poly=poly_exact_div(sextic.poly, lk.poly))

    inner = transvectant(quintic(i), quintic(j), 4)
    return linear_form(i) * linear_form(j) * inner


def cij_family() -> List[Covariant]:
    return [cij_covariant(i, j) for i in range(1, 7) for j in range(1, 7)]


def split_sextic_transvectant() -> Covariant:
    """75 (f6, f6)_4 with f6 = l1 ... l6."""
    f6 = GenericCovariant.form("f6")
    return specialize_form(transvectant(f6, f6, 4) * 75, {"f6": (1, 2, 3, 4, 5, 6)})


def _w_halves() -> Tuple[Covariant, Covariant]:
    def half(first: Tuple[int, int, int], second: Tuple[int, int, int]) -> Covariant:
        cubic = linear_form(second[0]) * linear_form(second[1]) * linear_form(second[2])
        prefix = Covariant.one()
        for k in first:
            prefix = prefix * linear_form(k) ** 2
        return prefix * transvectant(cubic, cubic, 2)
    return half((1, 2, 3), (4, 5, 6)), half((4, 5, 6), (1, 2, 3))


def w_generator() -> Covariant:
    """l1^2 l2^2 l3^2 (l4l5l6, l4l5l6)_2 - l4^2 l5^2 l6^2 (l1l2l3, l1l2l3)_2."""
    first, second = _w_halves()
    return first - second


def w_space_28() -> List[Covariant]:
    """Basis of the S6-orbit span of the W generator inside C'_{2,8}."""
    space = symmetric_orbit_span(w_generator())
    logger.info("W space in C'_{2,8} has dimension %d", space.dimension)
    return space.basis


def half_w_span() -> LinearSpace:
    """Orbit span of l1^2 l2^2 l3^2 (l4l5l6, l4l5l6)_2 alone."""
    return symmetric_orbit_span(_w_halves()[0])


# ---------------------------------------------------------------------------
# Quadric invariants


def quadric_invariants() -> Dict[str, GenericCovariant]:
    """
    t_ij = -2 (q_i, q_j)_2 for i <= j, the five basis monomials of I_(2,2,2) and I222.

    Keys: 't11'..'t33', 'basis1'..'basis5', 'I222'.
    """
    q = {k: GenericCovariant.form(f"q{k}") for k in (1, 2, 3)}
    t: Dict[str, GenericCovariant] = {}
    for a in (1, 2, 3):
        for b in range(a, 4):
            t[f"t{a}{b}"] = transvectant(q[a], q[b], 2) * -2
    basis = [
        t["t11"] * t["t23"] ** 2,
        t["t12"] ** 2 * t["t33"],
        t["t13"] ** 2 * t["t22"],
        t["t11"] * t["t22"] * t["t33"],
        t["t12"] * t["t13"] * t["t23"],
    ]
    result: Dict[str, GenericCovariant] = dict(t)
    for k, value in enumerate(basis, start=1):
        result[f"basis{k}"] = value
    result["I222"] = basis[3] - basis[4]
    return result


# Partitions (146)(235), (136)(245), (135)(246), (145)(236)
GAMMA0_PARTITIONS = (1, 2, 3, 4)

# Specialized I222 equals this multiple of gamma0_theta4_sum(); fixed by direct expansion.
QUADRIC_THETA4_COEFFICIENT = 2

QUADRIC_ASSIGNMENT = {"q1": (1, 2), "q2": (3, 4), "q3": (5, 6)}


def specialized_quadric_invariants() -> Dict[str, Covariant]:
    """The quadric invariants after q1 = l1l2, q2 = l3l4, q3 = l5l6."""
    return {name: in_generator_form(specialize_form(value, QUADRIC_ASSIGNMENT))
            for name, value in quadric_invariants().items()}


def gamma0_theta4_sum() -> Covariant:
    """Sum of theta4 over the four partitions whose theta constants stay invariant under Gamma0[2]."""
    table = char_partition_table()
    total = theta4(table[GAMMA0_PARTITIONS[0]])
    for index in GAMMA0_PARTITIONS[1:]:
        total = total + theta4(table[index])
    return total
