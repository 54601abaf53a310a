"""CP^1 three ways: homogeneous coordinates, C u {inf}, and the 2-sphere.

Run with:  python demos/05_mobius_sphere.py
"""

import numpy as np

import projgeo as pg
from projgeo import INFINITY

print("== the extended complex plane ==")
for h in ([0.0, 1.0], [1.0, 0.0], [2.0 + 1.0j, 1.0]):
    p = pg.point_from_vector(np.array(h, dtype=complex))
    print(f"  [{h[0]} : {h[1]}]  ->  z = {pg.cp1_affine(p)}")
print(f"  and back: INFINITY -> {np.round(pg.cp1_from_affine(INFINITY).h, 6)}")

print("\n== ... and the round sphere ==")
for z in (0.0, 1.0, 1.0j, INFINITY):
    xyz = pg.cp1_to_sphere(pg.cp1_from_affine(z))
    print(f"  z = {z!s:>8}  ->  {np.round(xyz, 6)}")
print("  (0 is the south pole, inf the north pole, |z| = 1 the equator)")

print("\n== Mobius transformations are projective maps ==")
print("The matrix [[a, b], [c, d]] acting on CP^1 reads (a z + b)/(c z + d)")
print("in the affine coordinate, poles and infinity included.\n")
a, b, c, d = 0, 1, 1, 0  # the inversion z -> 1/z
for z in (2.0, 0.0, INFINITY):
    print(f"  1/z at z = {z!s:>8}:  {pg.mobius_apply(a, b, c, d, z)}")
print(f"  formula agrees with the matrix action everywhere: "
      f"{pg.mobius_matches_projective(a, b, c, d, samples=200)}")

rng = np.random.default_rng(5)
quad = rng.standard_normal(8)
a, b, c, d = (complex(quad[i], quad[i + 1]) for i in range(0, 8, 2))
print(f"  a random quadruple agrees too: "
      f"{pg.mobius_matches_projective(a, b, c, d, samples=200)}")

print("\n== rotating the sphere with a Mobius map ==")
# a rotation of CP^1 around the vertical axis by 90 degrees: z -> i z
rot = pg.map_from_matrix(np.array([[1.0j, 0.0], [0.0, 1.0]]))
z = 1.0
for _ in range(4):
    p = pg.apply_map(rot, pg.cp1_from_affine(z))
    z = pg.cp1_affine(p)
    print(f"  equator point moves to {np.round(pg.cp1_to_sphere(p), 6)}")
    z = z.z
