"""Tour of projective points, maps, and the coordinate-chart atlas.

Run with:  python demos/01_projective_charts.py
"""

import numpy as np

import projgeo as pg

print("== canonical homogeneous coordinates ==")
print("Every nonzero vector of F^(n+1) names a line through the origin;")
print("scalar multiples name the same line and get the same canonical form.\n")
for v in ([2.0, 0.0, 0.0], [-1.0, -1.0, -1.0], [0.5, 1.5, -1.0]):
    p = pg.point_from_vector(v)
    print(f"  {v}  ->  h = {np.round(p.h, 6)}")
q1 = pg.point_from_vector([1j, 1.0])
q2 = pg.point_from_vector([-1.0, 1j])  # i * (i, 1), the identical line in CP^1
print(f"\n  over C: (i, 1) and (-1, i) agree? {pg.points_equal(q1, q2)}")

print("\n== projective maps are matrices modulo scale ==")
a = np.array([[1.0, 2.0], [0.0, 1.0]])
t = pg.map_from_matrix(a)
print(f"  A and 7A induce the same map? {pg.maps_equal(t, pg.map_from_matrix(7 * a))}")
print(f"  group dimension over P^1, P^2, P^3: "
      f"{[pg.group_dimension(n) for n in (1, 2, 3)]}")

p = pg.point_from_vector([1.0, 1.0])
print(f"  shear acting on [1 : 1]: {np.round(pg.apply_map(t, p).h, 6)}")
print(f"  inverse undoes it? "
      f"{pg.points_equal(pg.apply_map(pg.inverse_map(t), pg.apply_map(t, p)), p)}")

print("\n== any point moves to any other ==")
src = pg.point_from_vector([1.0, 0.0, 0.0])
dst = pg.point_from_vector([1.0, 2.0, 3.0])
witness = pg.transitive_witness(src, dst)
print(f"  witness sends e1-line to target? "
      f"{pg.points_equal(pg.apply_map(witness, src), dst)}")

print("\n== the affine chart atlas ==")
print("Chart j embeds F^n as the lines hitting the hyperplane x_j = 1;")
print("the n+1 charts cover everything, each missing one projectivized")
print("hyperplane of dimension n-1.\n")
c1, c2 = pg.AffineChart(1, 1), pg.AffineChart(1, 2)
for tval in (2.0, -0.5):
    w = pg.chart_transition(c1, c2, [tval])
    print(f"  RP^1 transition at t = {tval}: {w}  (expected 1/t = {1 / tval})")
print(f"  t = 0 leaves chart 2: {pg.chart_transition(c1, c2, [0.0])}")

point = pg.point_from_vector([0.0, 3.0, 4.0])
cover = pg.chart_cover(point)
print(f"\n  [0 : 3 : 4] is covered by chart j = {cover.j}; "
      f"coordinates {pg.chart_extract(cover, point)}")
locus = pg.missing_locus(pg.AffineChart(2, 1))
print(f"  chart 1 misses P(H_1), dimension {locus.l}; "
      f"is [0 : 3 : 4] on it? {pg.point_membership(point, locus)}")
