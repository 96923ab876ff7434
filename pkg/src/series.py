"""
Fourier Series Engine
Truncated Fourier-Jacobi series in Q1, Q12^(+-1), Q2 with exact Gaussian rational coefficients.
"""

import logging
import re
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .errors import CacheFormatError, LeadingSliceNotInvertible, NotDivisibleInBox
from .exact_core import (
    GaussRat,
    Scalar,
    as_gauss,
    common_denominator,
    gauss,
    gauss_is_zero,
)

logger = logging.getLogger(__name__)

Exponent = Tuple[int, int, int]
Slice = Tuple[int, int]
IntTerms = Dict[Exponent, int]

# TAUT1 <name> N=<box> floor=<f1>,<f2>
CACHE_MAGIC = "TAUT1"
_CACHE_HEADER = re.compile(r"TAUT1 (\S+) N=(\d+) floor=(-?\d+),(-?\d+)")


class FourierSeries:
    """
    Immutable truncated series sum c(e1, e12, e2) Q1^e1 Q12^e12 Q2^e2.

    Coefficients are stored as integer real and imaginary parts over a common
    positive denominator. Every exponent with e1 <= box and e2 <= box is known
    exactly; e12 is unbounded. ``floor`` is a lower bound on (e1, e2).
    """

    __slots__ = ("_re", "_im", "_den", "box", "floor", "_terms")

    def __init__(self, re: IntTerms, im: IntTerms, den: int = 1, box: int = 0,
                 floor: Slice = (0, 0)):
        if den <= 0:
            raise ValueError("Denominator must be positive")
        re = {e: c for e, c in re.items() if c and e[0] <= box and e[2] <= box}
        im = {e: c for e, c in im.items() if c and e[0] <= box and e[2] <= box}
        g = den
        for c in re.values():
            g = gcd(g, c)
        for c in im.values():
            g = gcd(g, c)
        if g > 1:
            re = {e: c // g for e, c in re.items()}
            im = {e: c // g for e, c in im.items()}
            den //= g
        self._re = re
        self._im = im
        self._den = den
        self.box = box
        self.floor = (min(floor[0], 0), min(floor[1], 0))
        self._terms: Optional[Dict[Exponent, GaussRat]] = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Dict[Exponent, Scalar], box: int,
                   floor: Optional[Slice] = None) -> "FourierSeries":
        """Build a series from exponent -> scalar; the floor defaults to the support."""
        values = {e: as_gauss(c) for e, c in terms.items()}
        values = {e: c for e, c in values.items() if not gauss_is_zero(c)}
        den = common_denominator(list(values.values()))
        re: IntTerms = {}
        im: IntTerms = {}
        for e, c in values.items():
            re_part = c.x * den
            im_part = c.y * den
            if re_part:
                re[e] = int(re_part.numerator)
            if im_part:
                im[e] = int(im_part.numerator)
        if floor is None:
            floor = _support_floor(values.keys())
        return cls(re, im, den, box, floor)

    @classmethod
    def zero(cls, box: int) -> "FourierSeries":
        return cls({}, {}, 1, box)

    @classmethod
    def one(cls, box: int) -> "FourierSeries":
        return cls({(0, 0, 0): 1}, {}, 1, box)

    @classmethod
    def monomial(cls, exponent: Exponent, coefficient: Scalar, box: int) -> "FourierSeries":
        return cls.from_terms({exponent: coefficient}, box)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, GaussRat]:
        """Exponent -> Gaussian rational coefficient."""
        if self._terms is None:
            keys = set(self._re) | set(self._im)
            den = self._den
            self._terms = {
                e: gauss(Fraction(self._re.get(e, 0), den), Fraction(self._im.get(e, 0), den))
                for e in keys
            }
        return self._terms

    def coefficient(self, exponent: Exponent) -> GaussRat:
        re = self._re.get(exponent, 0)
        im = self._im.get(exponent, 0)
        return gauss(Fraction(re, self._den), Fraction(im, self._den))

    def support(self) -> List[Exponent]:
        return sorted(set(self._re) | set(self._im))

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def is_real(self) -> bool:
        return not self._im

    def __len__(self) -> int:
        return len(set(self._re) | set(self._im))

    def __repr__(self) -> str:
        return f"FourierSeries(terms={len(self)}, box={self.box}, floor={self.floor})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FourierSeries):
            return NotImplemented
        return (self.box == other.box and self._den == other._den
                and self._re == other._re and self._im == other._im)

    def __hash__(self) -> int:
        return hash((self.box, self._den, frozenset(self._re.items()), frozenset(self._im.items())))

    def agrees_with(self, other: "FourierSeries") -> bool:
        """Equality on the common box."""
        box = min(self.box, other.box)
        return self.restrict(box) == other.restrict(box)

    def restrict(self, box: int) -> "FourierSeries":
        """Truncate to a smaller box."""
        if box > self.box:
            raise ValueError(f"Cannot restrict box {self.box} to larger box {box}")
        return FourierSeries(self._re, self._im, self._den, box, self.floor)

    def min_exponents(self) -> Optional[Slice]:
        """Componentwise minimum of (e1, e2) over the support, None for zero."""
        keys = set(self._re) | set(self._im)
        if not keys:
            return None
        return (min(e[0] for e in keys), min(e[2] for e in keys))

    def has_negative_support(self) -> bool:
        low = self.min_exponents()
        return low is not None and (low[0] < 0 or low[1] < 0)

    def slices(self) -> Dict[Slice, Dict[int, GaussRat]]:
        """Group coefficients by (e1, e2); each slice is a Laurent polynomial in Q12."""
        grouped: Dict[Slice, Dict[int, GaussRat]] = {}
        for e, c in self.terms.items():
            grouped.setdefault((e[0], e[2]), {})[e[1]] = c
        return grouped

    def lowest_slice(self) -> Tuple[Slice, Dict[int, GaussRat]]:
        """The slice at the componentwise minimum, which must be occupied."""
        low = self.min_exponents()
        if low is None:
            raise LeadingSliceNotInvertible("The zero series has no slices")
        grouped = self.slices()
        if low not in grouped:
            raise LeadingSliceNotInvertible(f"No slice at corner {low}")
        return low, grouped[low]

    def semipositive(self, strict: bool = False) -> bool:
        """Every support exponent satisfies e1*e2 >= e12^2 (strict for cusp forms)."""
        for e1, e12, e2 in set(self._re) | set(self._im):
            if e1 < 0 or e2 < 0:
                return False
            lhs, rhs = e1 * e2, e12 * e12
            if lhs < rhs or (strict and lhs == rhs):
                return False
        return True

    def int_parts(self) -> Tuple[IntTerms, IntTerms, int]:
        """Raw integer representation: (real numerators, imaginary numerators, denominator)."""
        return dict(self._re), dict(self._im), self._den

    # -- arithmetic -------------------------------------------------------

    def _aligned(self, other: "FourierSeries", sign: int) -> "FourierSeries":
        box = min(self.box, other.box)
        den = self._den * other._den // gcd(self._den, other._den)
        fa, fb = den // self._den, den // other._den
        re = {e: c * fa for e, c in self._re.items()}
        im = {e: c * fa for e, c in self._im.items()}
        for e, c in other._re.items():
            re[e] = re.get(e, 0) + sign * c * fb
        for e, c in other._im.items():
            im[e] = im.get(e, 0) + sign * c * fb
        floor = (min(self.floor[0], other.floor[0]), min(self.floor[1], other.floor[1]))
        return FourierSeries(re, im, den, box, floor)

    def __add__(self, other: "FourierSeries") -> "FourierSeries":
        return self._aligned(other, 1)

    def __sub__(self, other: "FourierSeries") -> "FourierSeries":
        return self._aligned(other, -1)

    def __neg__(self) -> "FourierSeries":
        return FourierSeries({e: -c for e, c in self._re.items()},
                             {e: -c for e, c in self._im.items()},
                             self._den, self.box, self.floor)

    def scale(self, scalar: Scalar) -> "FourierSeries":
        """Multiply by an exact scalar."""
        value = as_gauss(scalar)
        sden = common_denominator([value])
        sre = int((value.x * sden).numerator)
        sim = int((value.y * sden).numerator)
        re: IntTerms = {}
        im: IntTerms = {}
        for e in set(self._re) | set(self._im):
            a, b = self._re.get(e, 0), self._im.get(e, 0)
            re[e] = a * sre - b * sim
            im[e] = a * sim + b * sre
        return FourierSeries(re, im, self._den * sden, self.box, self.floor)

    def __mul__(self, other: Union["FourierSeries", Scalar]) -> "FourierSeries":
        if isinstance(other, FourierSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FourierSeries":
        if exponent < 0:
            raise ValueError("Negative powers need series_div")
        result = FourierSeries.one(self.box)
        base = self
        while exponent:
            if exponent & 1:
                result = series_mul(result, base)
            exponent >>= 1
            if exponent:
                base = series_mul(base, base)
        return result

    # -- cache codec ------------------------------------------------------

    def to_cache_text(self, name: str) -> str:
        """Serialise to the line-oriented cache format."""
        if not name or any(ch.isspace() for ch in name):
            raise ValueError(f"Cache names cannot be empty or contain whitespace: '{name}'")
        lines = [f"{CACHE_MAGIC} {name} N={self.box} floor={self.floor[0]},{self.floor[1]}"]
        for e in self.support():
            real = Fraction(self._re.get(e, 0), self._den)
            imag = Fraction(self._im.get(e, 0), self._den)
            lines.append(f"{e[0]} {e[1]} {e[2]} "
                         f"{real.numerator}/{real.denominator} {imag.numerator}/{imag.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_cache_text(cls, text: str) -> Tuple[str, "FourierSeries"]:
        """
        Parse the cache format.

        Returns:
            Tuple of (series name, series)

        Raises:
            CacheFormatError: On any malformed line
        """
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        header = _CACHE_HEADER.fullmatch(lines[0]) if lines else None
        if header is None:
            raise CacheFormatError(f"Missing {CACHE_MAGIC} header")
        name = header.group(1)
        box, f1, f2 = (int(header.group(k)) for k in (2, 3, 4))
        try:
            terms: Dict[Exponent, GaussRat] = {}
            for number, line in enumerate(lines[1:], start=2):
                parts = line.split()
                if len(parts) != 5:
                    raise CacheFormatError(f"Line {number}: expected 5 fields, got {len(parts)}")
                e = (int(parts[0]), int(parts[1]), int(parts[2]))
                terms[e] = gauss(Fraction(parts[3]), Fraction(parts[4]))
        except (IndexError, ValueError, ZeroDivisionError) as exc:
            raise CacheFormatError(f"Malformed cache file: {exc}") from exc
        return name, cls.from_terms(terms, box, (f1, f2))


def _support_floor(exponents: Iterable[Exponent]) -> Slice:
    keys = list(exponents)
    if not keys:
        return (0, 0)
    return (min(0, min(e[0] for e in keys)), min(0, min(e[2] for e in keys)))


def _convolve(x: IntTerms, y: List[Tuple[int, int, int, int]], box: int, out: IntTerms,
              sign: int = 1) -> None:
    """Accumulate sign * x * y into out, keeping exponents inside the box; y sorted on e1."""
    for (a1, a12, a2), ca in x.items():
        lim1 = box - a1
        lim2 = box - a2
        for b1, b12, b2, cb in y:
            if b1 > lim1:
                break
            if b2 > lim2:
                continue
            key = (a1 + b1, a12 + b12, a2 + b2)
            out[key] = out.get(key, 0) + sign * ca * cb


def _sorted_terms(terms: IntTerms) -> List[Tuple[int, int, int, int]]:
    return sorted((e[0], e[1], e[2], c) for e, c in terms.items())


def series_mul(a: FourierSeries, b: FourierSeries) -> FourierSeries:
    """
    Truncated product.

    The result box is min(Na + min(0, floor_b), Nb + min(0, floor_a)), so a
    negative floor on one factor shrinks what the other can vouch for.
    """
    box = min(a.box + min(0, *b.floor), b.box + min(0, *a.floor))
    re: IntTerms = {}
    im: IntTerms = {}
    b_re = _sorted_terms(b._re)
    b_im = _sorted_terms(b._im)
    _convolve(a._re, b_re, box, re)
    if a._im or b._im:
        _convolve(a._im, b_im, box, re, sign=-1)
        _convolve(a._re, b_im, box, im)
        _convolve(a._im, b_re, box, im)
    floor = (a.floor[0] + b.floor[0], a.floor[1] + b.floor[1])
    return FourierSeries(re, im, a._den * b._den, box, floor)


def series_product(factors: Iterable[FourierSeries], box: int) -> FourierSeries:
    """Product of several series, starting from one at the given box."""
    result = FourierSeries.one(box)
    for factor in factors:
        result = series_mul(result, factor)
    return result


# ---------------------------------------------------------------------------
# Division

Laurent = Dict[int, GaussRat]


def _laurent_sub_product(target: Laurent, coefficient: GaussRat, poly: Laurent, shift: int) -> None:
    """target -= coefficient * poly * Q12^shift, dropping zeros."""
    for k, c in poly.items():
        key = k + shift
        value = target.get(key, gauss()) - coefficient * c
        if gauss_is_zero(value):
            target.pop(key, None)
        else:
            target[key] = value


def laurent_divide(numerator: Laurent, divisor: Laurent) -> Laurent:
    """
    Exact division of Laurent polynomials in Q12.

    Raises:
        NotDivisibleInBox: If a remainder is left
    """
    remainder = dict(numerator)
    if not remainder:
        return {}
    top = max(divisor)
    bottom = min(divisor)
    unit = divisor[top]
    lowest_quotient = min(remainder) - bottom
    quotient: Laurent = {}
    while remainder:
        k = max(remainder)
        degree = k - top
        if degree < lowest_quotient:
            raise NotDivisibleInBox("Slice is not divisible by the leading slice")
        coefficient = remainder[k] / unit
        quotient[degree] = coefficient
        _laurent_sub_product(remainder, coefficient, divisor, degree)
    return quotient


def _laurent_mul_into(target: Laurent, left: Laurent, right: Laurent) -> None:
    """target -= left * right."""
    for i, a in left.items():
        for j, b in right.items():
            key = i + j
            value = target.get(key, gauss()) - a * b
            if gauss_is_zero(value):
                target.pop(key, None)
            else:
                target[key] = value


def series_div(a: FourierSeries, b: FourierSeries) -> FourierSeries:
    """
    Quotient a / b by slice-wise Laurent long division.

    Let c be the corner (min e1, min e2) of b's support and L the slice of b
    there. Quotient slices are solved in increasing s1 + s2 order from
    q[s] = (a[s + c] - sum_{t != c} b[t] q[s + c - t]) / L.

    Raises:
        LeadingSliceNotInvertible: If b is zero or its corner slice is empty
        NotDivisibleInBox: If a slice leaves a remainder
    """
    (c1, c2), lead = b.lowest_slice()
    a_slices = a.slices()
    b_rest = [(t, s) for t, s in b.slices().items() if t != (c1, c2)]
    low = a.min_exponents()
    if low is None:
        return FourierSeries.zero(a.box - max(c1, c2))
    qf1, qf2 = low[0] - c1, low[1] - c2
    box = min(a.box, b.box + min(0, qf1, qf2)) - max(c1, c2)

    cells = sorted(((s1, s2) for s1 in range(qf1, box + 1) for s2 in range(qf2, box + 1)),
                   key=lambda s: (s[0] + s[1], s[0]))
    quotient: Dict[Slice, Laurent] = {}
    for s1, s2 in cells:
        residual: Laurent = dict(a_slices.get((s1 + c1, s2 + c2), {}))
        for (t1, t2), b_slice in b_rest:
            q_slice = quotient.get((s1 + c1 - t1, s2 + c2 - t2))
            if q_slice:
                _laurent_mul_into(residual, b_slice, q_slice)
        if not residual:
            continue
        try:
            quotient[(s1, s2)] = laurent_divide(residual, lead)
        except NotDivisibleInBox as exc:
            raise NotDivisibleInBox(f"Slice ({s1}, {s2}) left a remainder") from exc

    terms = {(s1, k, s2): c for (s1, s2), sl in quotient.items() for k, c in sl.items()}
    logger.debug("series_div: corner=%s box=%d slices=%d", (c1, c2), box, len(quotient))
    return FourierSeries.from_terms(terms, box)
