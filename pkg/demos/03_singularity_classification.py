"""
Classifying corank-1 singularities by iterated Jacobian determinants
====================================================================

Around a critical point, replace one row of the Jacobian matrix by the
gradient of J and take determinants again, repeatedly.  The first level k
at which some determinant J_{k,i} survives at the point names the
singularity: A_1 (fold), A_2 (cusp), A_3 (swallowtail), ...
"""

import numpy as np

from morin_census import GeneralMap, Polynomial, classify, morin_tower

X1, X2, X3 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))


def p4(terms):
    return Polynomial(4, terms)


# The textbook cusp: F = (x1, x2, x3, x4^3 + x1 x4).
cusp = GeneralMap((p4({X1: 1}), p4({X2: 1}), p4({X3: 1}),
                   p4({(0, 0, 0, 3): 1, (1, 0, 0, 1): 1})))

tower = morin_tower(cusp, k_max=2)
print("J        =", tower.base.to_text())
print("J_{1,4}  =", tower.level(1, 3).to_text())
print("J_{2,4}  =", tower.level(2, 3).to_text())

# At the origin J and J_{1,4} vanish but J_{2,4} = 6 does not: a cusp.
verdict = classify(cusp, np.zeros(4))
print("\nclass at origin:", verdict.label)
print("serialized:", verdict.to_dict())

# The other reference germs land where they should.
fold = GeneralMap((p4({X1: 1}), p4({X2: 1}), p4({X3: 1}),
                   p4({(0, 0, 0, 2): 1})))
swallowtail = GeneralMap((p4({X1: 1}), p4({X2: 1}), p4({X3: 1}),
                          p4({(0, 0, 0, 4): 1, (1, 0, 0, 2): 1, (0, 1, 0, 1): 1})))
doubled = GeneralMap((p4({X1: 1}), p4({X2: 1}), p4({(0, 0, 2, 0): 1}),
                      p4({(0, 0, 0, 2): 1})))
for name, germ in (("fold", fold), ("swallowtail", swallowtail),
                   ("corank-2 germ", doubled)):
    print(f"{name:14s} ->", classify(germ, np.zeros(4)).label)

# Away from the critical cone the verdict is simply "regular".
print("cusp at (0,0,0,1) ->", classify(cusp, np.array([0, 0, 0, 1.0])).label)
