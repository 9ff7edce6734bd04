"""Exact sparse-polynomial arithmetic, calculus, text round-trips, determinants."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from morin_census import ANY_DEGREE, PolyMatrix, Polynomial, det
from morin_census.polynomials import format_coefficient, parse_coefficient


def P(n, terms, kind="rational"):
    return Polynomial(n, terms, kind)


# ------------------------------------------------------------- construction
def test_zero_coefficients_are_dropped():
    """Terms with zero coefficient never survive normalization."""
    p = P(2, {(1, 0): 1, (0, 1): 0})
    assert (0, 1) not in p.terms
    assert p.coefficient((0, 1)) == 0


def test_zero_polynomial_degree_sentinel():
    """The zero polynomial reports the ANY_DEGREE sentinel, not a number."""
    z = P(2, {})
    assert z.is_zero()
    assert z.total_degree() is None
    assert z.is_homogeneous() is ANY_DEGREE


def test_mixed_kind_rejected():
    """Adding rational and complex polynomials without converting raises."""
    a = P(1, {(1,): 1})
    b = P(1, {(1,): 1j}, kind="complex")
    with pytest.raises(ValueError):
        a + b


def test_bad_exponent_arity_rejected():
    """Exponent tuples must match n_vars."""
    with pytest.raises(ValueError):
        P(2, {(1,): 1})


# ------------------------------------------------------------- arithmetic
exponents = st.tuples(st.integers(0, 3), st.integers(0, 3))
coeffs = st.fractions(min_value=-5, max_value=5)
polys = st.dictionaries(exponents, coeffs, max_size=4).map(lambda t: P(2, t))


@settings(max_examples=60, deadline=None)
@given(a=polys, b=polys, c=polys)
def test_ring_distributivity(a, b, c):
    """a*(b + c) == a*b + a*c over exact rationals."""
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(a=polys, b=polys)
def test_ring_commutativity(a, b):
    """Multiplication and addition commute."""
    assert a * b == b * a
    assert a + b == b + a


@settings(max_examples=60, deadline=None)
@given(a=polys)
def test_additive_inverse(a):
    """a + (-a) is the zero polynomial."""
    assert (a + (-a)).is_zero()


def test_scalar_multiplication():
    """Scalars multiply coefficients exactly."""
    p = P(2, {(1, 1): Fraction(2, 3)})
    assert (p * 3).coefficient((1, 1)) == 2


def test_product_degree_adds():
    """Total degree of a product is the sum of total degrees."""
    a = P(2, {(2, 0): 1, (0, 1): 2})
    b = P(2, {(1, 1): 3})
    assert (a * b).total_degree() == a.total_degree() + b.total_degree()


def test_mul_truncated_drops_high_terms():
    """mul_truncated agrees with full product chopped at the given degree."""
    a = P(2, {(2, 0): 1, (0, 1): 2})
    b = P(2, {(1, 1): 3, (0, 0): 1})
    full = a * b
    cut = a.mul_truncated(b, 2)
    assert cut == Polynomial(2, {e: c for e, c in full.terms.items() if sum(e) <= 2})


# ------------------------------------------------------------- calculus
def test_partial_derivative_product_rule():
    """d(fg) = f dg + g df on a concrete pair."""
    f = P(2, {(2, 1): 1, (0, 0): 5})
    g = P(2, {(1, 1): Fraction(1, 2)})
    for i in range(2):
        assert (f * g).partial(i) == f * g.partial(i) + g * f.partial(i)


def test_gradient_matches_partials():
    """gradient() lists the partials in variable order."""
    f = P(3, {(1, 2, 0): 1})
    assert f.gradient() == [f.partial(i) for i in range(3)]


def test_translate_truncated_is_taylor_jet():
    """translate_truncated(p, m) is the order-m Taylor expansion at p."""
    f = P(2, {(3, 0): 1, (1, 1): 2})   # x^3 + 2xy
    p = (1, -2)
    jet = f.translate_truncated(p, 2)
    # full shift via substitution x -> x+1, y -> y-2
    x_shift = P(2, {(1, 0): 1, (0, 0): 1})
    y_shift = P(2, {(0, 1): 1, (0, 0): -2})
    full = f.substitute([x_shift, y_shift])
    expected = Polynomial(2, {e: c for e, c in full.terms.items() if sum(e) <= 2})
    assert jet == expected
    # constant term is the exact value at p
    assert jet.coefficient((0, 0)) == f.evaluate(p)


def test_evaluate_complex_matches_horner():
    """Float evaluation agrees with direct monomial summation."""
    f = P(2, {(2, 1): 1 + 1j, (0, 0): -3}, kind="complex")
    z = (0.5 + 0.25j, -2.0)
    direct = (1 + 1j) * z[0] ** 2 * z[1] - 3
    assert abs(f.evaluate(z) - direct) < 1e-12


# ------------------------------------------------------------- text form
def test_text_round_trip_rational():
    """to_text/from_text is the identity on rational polynomials."""
    f = P(3, {(2, 0, 1): Fraction(-7, 3), (0, 0, 0): 4, (1, 1, 1): 1})
    assert Polynomial.from_text(f.to_text(), 3) == f


def test_text_renders_integer_fractions_with_denominator():
    """Whole rationals render with an explicit /1 denominator."""
    f = P(1, {(2,): 3})
    assert "3/1" in f.to_text()


def test_text_graded_lex_order():
    """Terms print in graded lexicographic order, highest degree first."""
    f = P(2, {(0, 0): 1, (2, 0): 1, (1, 1): 1})
    text = f.to_text()
    assert text.index("x1^2") < text.index("x1^1*x2^1") < text.index("x1^0*x2^0")


def test_parse_coefficient_forms():
    """Coefficient parser accepts rationals and complex literals."""
    assert parse_coefficient("3/4", "rational") == Fraction(3, 4)
    val = parse_coefficient(format_coefficient(2 - 1j, "complex"), "complex")
    assert val == 2 - 1j


def test_from_text_rejects_garbage():
    """Malformed monomial text raises ValueError."""
    with pytest.raises(ValueError):
        Polynomial.from_text("3/1 * bogus", 2)


# ------------------------------------------------------------- determinants
def test_det_2x2_exact():
    """Exact symbolic 2x2 determinant ad - bc."""
    a = P(2, {(1, 0): 1})
    b = P(2, {(0, 1): 1})
    c = P(2, {(0, 0): 2})
    d = P(2, {(1, 1): 1})
    m = PolyMatrix.from_rows([[a, b], [c, d]])
    assert det(m) == a * d + (-(b * c))


def test_det_matches_numpy_on_constants():
    """Symbolic determinant of a constant matrix equals the numeric one."""
    rng = np.random.default_rng(3)
    vals = rng.integers(-5, 6, size=(4, 4))
    m = PolyMatrix.from_rows([[P(1, {(0,): int(v)}) for v in row] for row in vals])
    got = det(m).coefficient((0,))
    assert got == round(float(np.linalg.det(vals.astype(float))))


def test_det_max_degree_truncates():
    """det(max_degree=k) equals the full determinant chopped at degree k."""
    x = P(2, {(1, 0): 1})
    y = P(2, {(0, 1): 1})
    one = P(2, {(0, 0): 1})
    m = PolyMatrix.from_rows([[x * x + one, y], [y * y, x + one]])
    full = m.det()
    cut = m.det(max_degree=2)
    assert cut == Polynomial(2, {e: c for e, c in full.terms.items() if sum(e) <= 2})


def test_with_row_replaces_single_row():
    """with_row swaps one row and leaves the rest alone."""
    x = P(1, {(1,): 1})
    one = P(1, {(0,): 1})
    m = PolyMatrix.from_rows([[x, one], [one, x]])
    m2 = m.with_row(0, [one, one])
    assert m2.row(0) == [one, one]
    assert m2.row(1) == m.row(1)
