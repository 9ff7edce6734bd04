"""
Exact sparse polynomials: arithmetic, calculus, and text round-trips
====================================================================

The whole toolkit is built on one carrier type: a sparse multivariate
polynomial with either exact rational (fractions.Fraction) or complex
float coefficients.
"""

from fractions import Fraction

from morin_census import PolyMatrix, Polynomial, det

# Terms are a dict {exponent tuple: coefficient}.  Here p = x^2 y - 3/2 y^3.
p = Polynomial(2, {(2, 1): 1, (0, 3): Fraction(-3, 2)})
q = Polynomial(2, {(1, 0): 1, (0, 1): 2})        # q = x + 2y

print("p           =", p.to_text())
print("q           =", q.to_text())
print("p * q       =", (p * q).to_text())
print("p - p       =", (p - p).to_text())

# Calculus is exact too: partial derivatives and gradients.
print("dp/dx       =", p.partial(0).to_text())
print("grad p      =", [g.to_text() for g in p.gradient()])

# Evaluation keeps Fractions when the point is exact.
value = p.evaluate((Fraction(1, 2), Fraction(2)))
print("p(1/2, 2)   =", value, type(value).__name__)

# Text form round-trips losslessly, so maps can live in JSON files.
text = p.to_text()
assert Polynomial.from_text(text, 2) == p
print("text form   =", text)

# Taylor jets: the expansion of p at a point, truncated at a chosen order.
jet = p.translate_truncated((1, -1), 2)
print("2-jet at (1,-1) =", jet.to_text())

# Polynomial matrices support exact determinants with optional degree caps --
# the engine behind the singularity tower.
x = Polynomial(2, {(1, 0): 1})
y = Polynomial(2, {(0, 1): 1})
m = PolyMatrix.from_rows([[x, y], [y, x]])
print("det [[x,y],[y,x]] =", det(m).to_text())
