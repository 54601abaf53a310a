"""Subspaces of F^n: graph coordinates, the GL action, and dualities.

Run with:  python demos/02_grassmann_graph_charts.py
"""

import numpy as np

import projgeo as pg

rng = np.random.default_rng(7)

print("== G(2, 5): subspaces as orthonormal frames ==")
span = rng.standard_normal((5, 2))
L = pg.subspace_from_span(span)
print(f"  a random plane in R^5, frame shape {L.basis.shape}")
print(f"  chart parameter count k(n-k) = {pg.grassmann_dimension(2, 5)}")

print("\n== graph coordinates around L ==")
print("With a complement M, planes transverse to M are graphs")
print("{v + A v : v in L}; the matrix A is the chart coordinate.\n")
chart = pg.graph_chart(L)
coeffs = rng.standard_normal((3, 2))
moved = pg.graph_subspace(chart, coeffs)
recovered = pg.chart_coords(chart, moved)
print(f"  A -> graph -> A round trip error: "
      f"{np.max(np.abs(recovered - coeffs)):.2e}")
print(f"  A = 0 returns L itself? "
      f"{pg.subspaces_equal(pg.graph_subspace(chart, np.zeros((3, 2))), L)}")
# in G(2, 4) the complement is itself 2-dimensional but not transverse,
# so it falls outside the chart
square = pg.graph_chart(pg.subspace_from_span(np.eye(4)[:, :2]))
print(f"  a non-transverse plane has no coordinates: "
      f"{pg.chart_coords(square, square.complement)}")

print("\n== the GL(n) action is transitive ==")
other = pg.subspace_from_span(rng.standard_normal((5, 2)))
g = pg.transitive_witness_gr(L, other)
image = pg.apply_gl(g, L)
print(f"  witness moves L onto the target? "
      f"{pg.projector_distance(image.basis, other.basis):.2e} projector distance")
print(f"  scaling G changes nothing: "
      f"{pg.subspaces_equal(pg.apply_gl(3.0 * g, L), image)}")

print("\n== two dualities, same dimension count ==")
line = pg.subspace_from_span(np.array([[1.0], [1.0j]]))  # span{(1, i)} in C^2
comp = pg.orthogonal_complement(line)
ann = pg.annihilator(line)
print(f"  Hermitian complement of span(1, i):  {np.round(comp.basis[:, 0], 6)}")
print(f"  bilinear annihilator of span(1, i):  {np.round(ann.basis[:, 0], 6)}")
print(f"  over C they differ: {not pg.subspaces_equal(comp, ann)}")
print(f"  both are involutions: "
      f"{pg.subspaces_equal(pg.orthogonal_complement(comp), line)}, "
      f"{pg.subspaces_equal(pg.annihilator(ann), line)}")

print("\n== k = 1 recovers projective space ==")
l1 = pg.subspace_from_span(rng.standard_normal((4, 1)))
pt = pg.to_projective_point(l1)
print(f"  a line in R^4 is a point of RP^3: {np.round(pt.h, 6)}")
print(f"  and converts back: "
      f"{pg.projector_distance(pg.from_projective_point(pt).basis, l1.basis):.2e}")
