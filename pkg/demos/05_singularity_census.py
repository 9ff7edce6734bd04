"""
Counting 0-stable singularities in closed form (n = 4)
======================================================

For generic degree-(d1,d2,d3,d4) maps the number of points of each
discrete singularity type is a polynomial in the degrees, obtained from
the truncated series (1+d1 a)(1+d2 a)(1+d3 a)(1+d4 a) / (1+a)^4.
"""

from morin_census import (
    IntegralityError,
    census,
    chern_coefficients,
    chern_values,
)

# The symbolic layer: coefficients of the quotient series as exact
# polynomials in the degree symbols d1..d4.
c1, c2, c3, c4 = chern_coefficients()
print("c1 =", c1.to_text())
print("c2 =", c2.to_text())

# Specialize to a degree tuple and build the census.
print("\nc(2,3,5,7) =", chern_values((2, 3, 5, 7)))
report = census((2, 3, 5, 7))
print("eligibility:", report.eligibility.tag)
for name, value in report.counts.items():
    print(f"  #{name:7s} = {value}")

# The linear case is degenerate: no singularities anywhere.
print("\ncounts for (1,1,1,1):", census((1, 1, 1, 1)).counts)

# The count formulas carry 1/24 and 1/2 prefactors.  On degree tuples with
# parity (even, even, even, odd) the pair-of-cusps count lands on a half
# integer -- exactly the tuples the gcd gate rejects, so the closed forms
# are integral on their whole domain of validity.  The census refuses to
# return a non-integer rather than rounding it away.
try:
    census((1, 2, 2, 2))
except IntegralityError as err:
    print(f"\n(1,2,2,2) raises IntegralityError: {err.name} = {err.value}")
