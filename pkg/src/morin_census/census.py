"""Closed-form counts of 0-stable singularities for generic maps C^4 -> C^4.

The count of each discrete mono/multi-singularity type (A_1^4, A_1^2 A_2,
A_1 A_3, A_2^2, A_4, I_{2,2}) of a generic map with component degrees
(d_1,d_2,d_3,d_4) is a polynomial in the degrees.  The ingredients:

* the Chern series (1+d_1 a)(1+d_2 a)(1+d_3 a)(1+d_4 a)/(1+a)^4 expanded to
  order 4 -- the divisor is expanded as the geometric series
  sum_i (-4a - 6a^2 - 4a^3 - a^4)^i, all exactly, with coefficients that are
  integer polynomials in the d_i;
* the s-classes s_0 = d_1 d_2 d_3 d_4, s_1 = c_1 s_0, s_2 = c_1^2 s_0,
  s_3 = c_1^3 s_0, s_01 = c_2 s_0, s_11 = c_1 c_2 s_0, s_001 = c_3 s_0;
* six closed-form combinations with prefactors 1/24 and 1/2.

The prefactors are supposed to divide exactly for maps satisfying the
genericity hypotheses; ``census`` verifies this and raises IntegralityError
when a count comes out fractional rather than silently rounding.  (Degree
tuples with exactly one odd entry do produce a half-integral #A_2^2; every
such tuple also fails the eligibility gate, so the formulas are never trusted
where they break.)  Negative counts are possible for ineligible tuples and
are logged as warnings, not errors.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .maps import EligibilityVerdict, eligibility_gate, validate_degrees
from .polynomials import RATIONAL, Polynomial

__all__ = [
    "TruncatedSeries",
    "CensusReport",
    "IntegralityError",
    "degree_symbols",
    "chern_series",
    "chern_coefficients",
    "chern_values",
    "s_classes_symbolic",
    "s_classes",
    "census",
]

logger = logging.getLogger(__name__)

N_SOURCE = 4      # everything here is specific to source and target dimension 4
ORDER = 4         # truncation order of the series: only a^0..a^4 contribute

COUNT_NAMES = ("A1_4", "A1_2A2", "A1A3", "A2_2", "A4", "I22")
S_NAMES = ("s0", "s1", "s2", "s3", "s01", "s11", "s001")


def degree_symbols() -> tuple[Polynomial, ...]:
    """The four degree symbols d1..d4 as exact polynomial generators."""
    return tuple(Polynomial.variable(i, N_SOURCE, RATIONAL) for i in range(N_SOURCE))


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in one formal variable a, truncated past a^ORDER.

    Coefficients are exact polynomials in the degree symbols; multiplication
    discards every term of order > ORDER.
    """

    coefficients: tuple[Polynomial, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if len(coeffs) != ORDER + 1:
            raise ValueError(f"need exactly {ORDER + 1} coefficients")
        object.__setattr__(self, "coefficients", coeffs)

    @staticmethod
    def from_polynomial(constant: Polynomial, linear: Polynomial | None = None) -> "TruncatedSeries":
        zero = constant.zero_like()
        coeffs = [constant, linear if linear is not None else zero]
        coeffs += [zero] * (ORDER + 1 - len(coeffs))
        return TruncatedSeries(tuple(coeffs))

    def coefficient(self, k: int) -> Polynomial:
        return self.coefficients[k]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(tuple(a + b for a, b in
                                     zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        zero = self.coefficients[0].zero_like()
        out = [zero] * (ORDER + 1)
        for i, a in enumerate(self.coefficients):
            if a.is_zero():
                continue
            for j in range(ORDER + 1 - i):
                b = other.coefficients[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(tuple(out))


_chern_cache: TruncatedSeries | None = None


def chern_series() -> TruncatedSeries:
    """(1+d1 a)(1+d2 a)(1+d3 a)(1+d4 a) / (1+a)^4, exactly, to order 4.

    The divisor is handled as 1 / (1 - u) = sum u^i with
    u = -4a - 6a^2 - 4a^3 - a^4; since u has no constant term only i <= 4
    contribute below the truncation order.
    """
    global _chern_cache
    if _chern_cache is not None:
        return _chern_cache
    one = Polynomial.constant(1, N_SOURCE, RATIONAL)
    numerator = TruncatedSeries.from_polynomial(one)
    for d in degree_symbols():
        numerator = numerator * TruncatedSeries.from_polynomial(one, d)
    u = TruncatedSeries(tuple(
        Polynomial.constant(c, N_SOURCE, RATIONAL)
        for c in (0, -4, -6, -4, -1)))
    geometric = TruncatedSeries.from_polynomial(one)
    power = TruncatedSeries.from_polynomial(one)
    for _ in range(ORDER):
        power = power * u
        geometric = geometric + power
    _chern_cache = numerator * geometric
    return _chern_cache


def chern_coefficients() -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
    """The symbolic coefficients c1..c4 of the Chern series."""
    series = chern_series()
    return tuple(series.coefficient(k) for k in range(1, ORDER + 1))


def _require_four(degrees: Sequence[int]) -> tuple[int, ...]:
    degrees = validate_degrees(degrees)
    if len(degrees) != N_SOURCE:
        raise ValueError(f"the census is specific to n = 4, got n = {len(degrees)}")
    return degrees


def _as_int(value) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {value}")
    return value.numerator


def chern_values(degrees: Sequence[int]) -> tuple[int, int, int, int]:
    """c1..c4 evaluated at a concrete degree tuple (exact integers)."""
    degrees = _require_four(degrees)
    return tuple(_as_int(c.evaluate(degrees)) for c in chern_coefficients())


def s_classes_symbolic() -> dict[str, Polynomial]:
    """The seven s-classes as exact polynomials in the degree symbols."""
    d1, d2, d3, d4 = degree_symbols()
    c1, c2, c3, _ = chern_coefficients()
    s0 = d1 * d2 * d3 * d4
    return {
        "s0": s0,
        "s1": c1 * s0,
        "s2": c1 * c1 * s0,
        "s3": c1 * c1 * c1 * s0,
        "s01": c2 * s0,
        "s11": c1 * c2 * s0,
        "s001": c3 * s0,
    }


def s_classes(degrees: Sequence[int]) -> dict[str, int]:
    """The seven s-classes at a concrete degree tuple (exact integers)."""
    degrees = _require_four(degrees)
    c1, c2, c3, _ = chern_values(degrees)
    s0 = degrees[0] * degrees[1] * degrees[2] * degrees[3]
    return {
        "s0": s0,
        "s1": c1 * s0,
        "s2": c1 * c1 * s0,
        "s3": c1 ** 3 * s0,
        "s01": c2 * s0,
        "s11": c1 * c2 * s0,
        "s001": c3 * s0,
    }


class IntegralityError(ArithmeticError):
    """A count whose 1/24 or 1/2 prefactor failed to divide exactly."""

    def __init__(self, degrees, name: str, value: Fraction):
        self.degrees = tuple(degrees)
        self.name = name
        self.value = value
        super().__init__(
            f"count {name} at degrees {self.degrees} is not an integer: {value}")


def _raw_counts(c: Sequence[int], s: dict[str, int]) -> dict[str, Fraction]:
    """The six closed forms, before integrality is enforced."""
    c1, c2, c3, c4 = c
    s1, s2, s3 = s["s1"], s["s2"], s["s3"]
    s01, s11, s001 = s["s01"], s["s11"], s["s001"]
    return {
        "A1_4": Fraction(
            s1 ** 3 * c1 - 12 * s1 * s2 * c1 + 40 * s3 * c1 - 6 * s1 * s01 * c1
            + 56 * s11 * c1 + 24 * s001 * c1 - 12 * s1 ** 2 * c1 ** 2
            + 48 * s2 * c1 ** 2 + 24 * s01 * c1 ** 2 + 120 * s1 * c1 ** 3
            - 672 * c1 ** 4 - 6 * s1 ** 2 * c2 + 24 * s2 * c2 + 12 * s01 * c2
            + 168 * s1 * c1 * c2 - 1776 * c1 ** 2 * c2 - 288 * c2 ** 2
            + 72 * s1 * c3 - 1584 * c1 * c3 - 720 * c4, 24),
        "A1_2A2": Fraction(
            s2 * c1 + s01 * c1 - 6 * c1 ** 3 - 12 * c1 * c2 - 6 * c3, 2),
        "A1A3": Fraction(
            s3 * c1 + 3 * s11 * c1 + 2 * s001 * c1 - 8 * c1 ** 4
            - 36 * c1 ** 2 * c2 - 8 * c2 ** 2 - 44 * c1 * c3 - 24 * c4),
        "A2_2": Fraction(
            s2 * c1 ** 2 + s01 * c1 ** 2 - 9 * c1 ** 4 + s2 * c2 + s01 * c2
            - 36 * c1 ** 2 * c2 - 12 * c2 ** 2 - 39 * c1 * c3 - 24 * c4, 2),
        "A4": Fraction(
            c1 ** 4 + 6 * c1 ** 2 * c2 + 2 * c2 ** 2 + 9 * c1 * c3 + 6 * c4),
        "I22": Fraction(c2 ** 2 - c1 * c3),
    }


@dataclass(frozen=True)
class CensusReport:
    """Exact counts of the six 0-stable singularity types at one degree tuple."""

    degrees: tuple[int, ...]
    eligibility: EligibilityVerdict
    c: tuple[int, int, int, int]
    s: dict
    counts: dict

    def to_dict(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "eligibility": self.eligibility.to_dict(),
            "c": list(self.c),
            "s": dict(self.s),
            "counts": dict(self.counts),
        }


def census(degrees: Sequence[int]) -> CensusReport:
    """Evaluate all six counts at a degree tuple, exactly.

    Tuples failing the eligibility gate are still computed (the formulas are
    polynomial in the degrees) but the report carries the gate's verdict so
    callers know the genericity hypotheses behind the formulas do not hold.
    Raises IntegralityError when a prefactor fails to divide.
    """
    degrees = _require_four(degrees)
    c = chern_values(degrees)
    s = s_classes(degrees)
    raw = _raw_counts(c, s)
    counts = {}
    for name in COUNT_NAMES:
        value = raw[name]
        if value.denominator != 1:
            raise IntegralityError(degrees, name, value)
        counts[name] = value.numerator
        if value < 0:
            logger.warning("count %s at degrees %s is negative (%s); the closed "
                           "forms are only meaningful for eligible tuples",
                           name, degrees, value)
    return CensusReport(degrees, eligibility_gate(degrees), c, s, counts)
