"""The quotient of F^n \\ {0} by integer powers of a scalar.

Run with:  python demos/03_hopf_quotient.py
"""

import numpy as np

import projgeo as pg

two = pg.ScaleGroup(2)

print("== classes under multiplication by powers of 2 ==")
print("Each class keeps one representative with norm in [1, 2).\n")
for v in ([8.0, 0.0], [0.3, 0.4], [1.0, 1.0]):
    h = pg.quotient_project(v, two)
    print(f"  {v}  ->  rep {np.round(h.rep, 6)}  (norm {np.linalg.norm(h.rep):.6f})")

print(f"\n  (1,1) ~ (4,4)?   {pg.hopf_points_equal([1, 1], [4, 4], two)}")
print(f"  (1,1) ~ (2,3)?   {pg.hopf_points_equal([1, 1], [2, 3], two)}")
print(f"  (1,0) ~ (-1,0)?  {pg.hopf_points_equal([1, 0], [-1, 0], two)}"
      "   <- -1 is no power of 2")

print("\n== the quotient sits over projective space ==")
plus = pg.quotient_project([1.0, 0.0], two)
minus = pg.quotient_project([-1.0, 0.0], two)
print(f"  distinct classes, same line: "
      f"{pg.points_equal(pg.to_projective(plus), pg.to_projective(minus))}")
print("  (the fiber over a line is a family of scalars with |alpha| in [1, 2))")

print("\n== linear maps descend to the quotient ==")
rng = np.random.default_rng(11)
g = rng.standard_normal((3, 3))
v = rng.standard_normal(3)
h = pg.quotient_project(v, two)
top = pg.to_projective(pg.induced_linear(g, h))
bottom = pg.apply_map(pg.map_from_matrix(g), pg.to_projective(h))
print(f"  project-then-act equals act-then-project: "
      f"{np.max(np.abs(top.h - bottom.h)):.2e}")

print("\n== other scales work the same way ==")
three = pg.ScaleGroup(3)
print(f"  lambda = 3:  (1,1) ~ (9,9)? {pg.hopf_points_equal([1, 1], [9, 9], three)}")
spin = pg.ScaleGroup(2j)
v = np.array([1.0 + 0j, 2.0])
print(f"  lambda = 2i rotates as it scales: v ~ (2i)^3 v? "
      f"{pg.hopf_points_equal(v, (2j) ** 3 * v, spin)}")
print(f"  ... but v ~ 8 v fails (right norm, wrong phase): "
      f"{pg.hopf_points_equal(v, 8.0 * v, spin)}")

print("\n== traces of linear subspaces ==")
s = pg.subspace_from_span(np.eye(3)[:, :2])
inside = pg.quotient_project([2.0, -4.0, 0.0], two)
outside = pg.quotient_project([0.0, 0.0, 5.0], two)
print(f"  class of (2,-4,0) meets span(e1,e2)? "
      f"{pg.subspace_trace_membership(inside, s)}")
print(f"  class of (0,0,5)?                    "
      f"{pg.subspace_trace_membership(outside, s)}")
