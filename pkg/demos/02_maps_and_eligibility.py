"""
Homogeneous square maps, coefficient indexing, and the degree gate
==================================================================

A map F: C^n -> C^n with homogeneous components of degrees (d_1,...,d_n)
is the central object.  A gcd condition on the degrees decides whether
generic members of the family can be finitely determined at all.
"""

import numpy as np

from morin_census import (
    coefficient,
    eligibility_gate,
    jdet,
    random_map,
    ray_multiplicity,
    rest_exponents,
)

# Seeded random maps are the workhorse for genericity experiments.
F = random_map((2, 3), seed=4)
for i, comp in enumerate(F.components, start=1):
    print(f"f{i} =", comp.to_text())

# Coefficients are indexed by the exponents of x2..xn; x1 absorbs the rest.
print("\ncoefficient a_{(1,);1} =", coefficient(F, 0, (1,)))
print("all rest-exponent slots of degree 2 in 2 vars:",
      list(rest_exponents(2, 2)))

# The Jacobian determinant J cuts out the critical cone C(F).
print("\nJ(F) =", jdet(F).to_text())

# The eligibility gate is a pure statement about the degree tuple:
#   - gcd(d_1..d_4) > 1           -> never finitely determined
#   - some triple gcd > 1, etc.   -> generic hypothesis fails
#   - otherwise                   -> eligible for generic finiteness
for degrees in ((2, 3, 5, 7), (2, 4, 3, 5), (2, 4, 6, 3), (2, 4, 6, 8)):
    v = eligibility_gate(degrees)
    print(f"gate{degrees}: {v.tag}" + (f"  [{v.witness}]" if v.witness else ""))

# Ray multiplicity: how many points of the ray C*p share the value F(p).
# It is the gcd of the degrees of the components that survive at p.
G = random_map((2, 2, 2, 2), seed=0, kind="complex")
p = np.array([1.0, 0.5, -0.25, 2.0])
print("\nray multiplicity, all degrees even:", ray_multiplicity(G, p))
H = random_map((2, 3, 5, 7), seed=0, kind="complex")
print("ray multiplicity, coprime degrees: ",
      ray_multiplicity(H, np.ones(4)))
