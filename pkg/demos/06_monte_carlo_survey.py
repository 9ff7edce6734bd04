"""
Monte-Carlo surveys: random lines through the critical cone, cusp hunts
=======================================================================

The critical set of a homogeneous map is a cone of rays through the
origin.  Random affine lines sample its points; classifying them tests
the genericity story empirically: random points of the fold stratum
should be folds, cusps only appear on the codimension-one substratum,
which random 2-plane slices of {J = 0, J_{1,i} = 0} can hit.
"""

import json

import numpy as np

from morin_census import (
    classify,
    critical_points_on_lines,
    cusp_points,
    random_map,
    survey,
)

# Sample the fold cone of an all-quadratic map along 5 random lines.
F = random_map((2, 2, 2, 2), seed=3, kind="complex")
points = critical_points_on_lines(F, lines=5, seed=11)
print(f"{len(points)} critical points from 5 lines; classes:",
      sorted({classify(F, np.asarray(p)).label for p in points}))

# The aggregate survey: maps x lines, per-point class, ray multiplicity,
# residuals, and multi-tolerance stability -- bit-deterministic per seed.
report = survey((2, 2, 2, 2), maps=3, lines=10, seed=42)
d = report.to_dict()
print("\nsurvey histogram :", d["histogram"])
print("outside menu     :", d["outside_menu"])
print("unstable points  :", d["unstable"])
print("one point record :")
print(json.dumps(d["points"][0], indent=2))

# Cusp hunting on a cubic map: eliminate along random 2-planes, polish by
# Newton, and keep only candidates the classifier confirms as cusps.
G = random_map((3, 3, 3, 3), seed=2, kind="complex")
sols = cusp_points(G, planes=2, seed=9)
print(f"\ncusp candidates on 2 planes: {len(sols)}")
for s in sols[:3]:
    label = classify(G, np.asarray(s.point)).label
    print(f"  residuals {max(s.residuals):.2e}  class {label}")
