"""Series coefficients, class values, and the six closed-form counts."""

import itertools
from fractions import Fraction

import pytest

from morin_census import (
    IntegralityError,
    Polynomial,
    TruncatedSeries,
    census,
    chern_coefficients,
    chern_series,
    chern_values,
    degree_symbols,
    s_classes,
    s_classes_symbolic,
)


def _elementary_symmetric():
    """e1..e4 in the four degree symbols, plus the constant one."""
    d1, d2, d3, d4 = degree_symbols()
    e1 = d1 + d2 + d3 + d4
    e2 = d1 * d2 + d1 * d3 + d1 * d4 + d2 * d3 + d2 * d4 + d3 * d4
    e3 = d1 * d2 * d3 + d1 * d2 * d4 + d1 * d3 * d4 + d2 * d3 * d4
    e4 = d1 * d2 * d3 * d4
    one = Polynomial(4, {(0, 0, 0, 0): 1})
    return one, e1, e2, e3, e4


# ------------------------------------------------------------- series
def test_series_constant_term_is_one():
    """The quotient series starts at 1."""
    s = chern_series()
    assert s.coefficients[0] == Polynomial(4, {(0, 0, 0, 0): 1})


def test_series_times_denominator_recovers_numerator():
    """(series) * (1+a)^4 == prod(1 + d_i a) through order 4."""
    one, e1, e2, e3, e4 = _elementary_symmetric()
    s = chern_series()
    binom = TruncatedSeries((one, one * 4, one * 6, one * 4, one))
    numerator = TruncatedSeries((one, e1, e2, e3, e4))
    assert s * binom == numerator


def test_symbolic_coefficients_closed_forms():
    """c_k match their closed forms in the elementary symmetric polynomials."""
    one, e1, e2, e3, e4 = _elementary_symmetric()
    c1, c2, c3, c4 = chern_coefficients()
    assert c1 == e1 - one * 4
    assert c2 == e2 - e1 * 4 + one * 10
    assert c3 == e3 - e2 * 4 + e1 * 10 - one * 20
    assert c4 == e4 - e3 * 4 + e2 * 10 - e1 * 20 + one * 35


def test_truncated_series_ring_ops():
    """Sum and product of truncated series agree with direct convolution."""
    one, e1, e2, *_ = _elementary_symmetric()
    zero = Polynomial(4, {})
    a = TruncatedSeries((one, e1, zero, zero, zero))
    b = TruncatedSeries((one, zero, e2, zero, zero))
    prod = a * b
    assert prod.coefficients[1] == e1
    assert prod.coefficients[2] == e2
    assert prod.coefficients[3] == e1 * e2
    assert (a + b).coefficients[0] == one * 2


# ------------------------------------------------------------- values
def test_chern_values_sample_tuple():
    """Frozen values for degrees (2,3,5,7)."""
    assert chern_values((2, 3, 5, 7)) == (13, 43, -7, -73)


def test_s_classes_build_on_chern_values():
    """The seven s-classes follow their defining products."""
    c1, c2, c3, _ = chern_values((2, 3, 5, 7))
    s = s_classes((2, 3, 5, 7))
    s0 = 2 * 3 * 5 * 7
    assert s["s0"] == s0
    assert s["s1"] == c1 * s0
    assert s["s2"] == c1 ** 2 * s0
    assert s["s3"] == c1 ** 3 * s0
    assert s["s01"] == c2 * s0
    assert s["s11"] == c1 * c2 * s0
    assert s["s001"] == c3 * s0


def test_s_classes_symbolic_structure():
    """Symbolic s-classes are the symbolic products of c's and s0."""
    sym = s_classes_symbolic()
    c1, c2, _, _ = chern_coefficients()
    assert sym["s1"] == c1 * sym["s0"]
    assert sym["s11"] == c1 * c2 * sym["s0"]


# ------------------------------------------------------------- counts
def test_counts_frozen_for_sample_tuples():
    """Cross-checked count values for two degree tuples."""
    rep = census((2, 3, 5, 7))
    assert rep.counts == {
        "A1_4": 9669241152,
        "A1_2A2": 279456,
        "A1A3": 10038664,
        "A2_2": 4451346,
        "A4": 74604,
        "I22": 1940,
    }
    rep2 = census((2, 2, 2, 2))
    assert rep2.counts == {
        "A1_4": 5750,
        "A1_2A2": 348,
        "A1A3": 2520,
        "A2_2": 1116,
        "A4": 330,
        "I22": 20,
    }


def test_degenerate_linear_degrees_all_zero():
    """(1,1,1,1) has no singularities: all classes and counts vanish."""
    rep = census((1, 1, 1, 1))
    assert rep.c == (0, 0, 0, 0)
    assert all(v == 0 for v in rep.counts.values())


def test_integrality_error_on_half_integral_tuple():
    """(1,2,2,2) drives the pair-of-cusps count to 81/2 and raises."""
    with pytest.raises(IntegralityError) as exc:
        census((1, 2, 2, 2))
    assert exc.value.value == Fraction(81, 2)
    assert exc.value.name == "A2_2"


def test_counts_permutation_invariant_sampled():
    """Counts only depend on the multiset of degrees."""
    base = census((2, 3, 5, 7)).counts
    for perm in itertools.islice(itertools.permutations((2, 3, 5, 7)), 6):
        assert census(perm).counts == base


def test_census_requires_four_degrees():
    """Anything but exactly four degrees is rejected."""
    with pytest.raises(ValueError):
        census((2, 2, 2))


def test_census_report_serialization():
    """Reports serialize degrees, eligibility, classes and counts."""
    d = census((2, 3, 5, 7)).to_dict()
    assert d["degrees"] == [2, 3, 5, 7]
    assert d["eligibility"]["tag"] == "eligible_generic"
    assert d["c"] == [13, 43, -7, -73]
    assert d["counts"]["I22"] == 1940
    assert set(d["s"]) == {"s0", "s1", "s2", "s3", "s01", "s11", "s001"}
