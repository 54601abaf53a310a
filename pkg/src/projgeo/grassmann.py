"""Grassmannians G(k, n) over R and C.

A k-dimensional linear subspace of F^n is stored as an n x k matrix with
orthonormal columns.  Bases are far from unique, so equality is measured
through the orthogonal projector B B^H, which is canonical.

Around a base subspace L with a chosen complement M, every subspace
transverse to M is the graph {v + A v : v in L} of a unique linear map
A : L -> M; the (n-k) x k coefficient matrices of A in the stored bases
form a coordinate patch whose field-dimension is k(n-k).  Invertible
n x n matrices act on subspaces, transitively; two duality constructions
(Hermitian orthogonal complement, and the annihilator under the plain
bilinear pairing) each identify G(k, n) with G(n-k, n).
"""

from dataclasses import dataclass

import numpy as np

from projgeo import numerics
from projgeo.errors import (
    DimensionMismatch,
    FieldMismatch,
    IllConditioned,
    InvalidRange,
    ShapeMismatch,
)
from projgeo.numerics import (
    DEFAULT_TOLERANCE,
    Tolerance,
    as_matrix,
    dtype_for,
    field_of,
)
from projgeo.projective import ProjPoint, point_from_vector


@dataclass(frozen=True, eq=False)
class Subspace:
    """A k-dimensional linear subspace of F^n with an orthonormal basis."""

    field: str
    n: int
    k: int
    basis: np.ndarray

    def __post_init__(self):
        arr = np.array(self.basis, dtype=dtype_for(self.field))
        if arr.ndim != 2 or arr.shape != (self.n, self.k):
            raise DimensionMismatch(
                f"expected a {self.n}x{self.k} basis, got shape {arr.shape}"
            )
        if not 1 <= self.k < self.n:
            raise InvalidRange("subspace dimension must satisfy 1 <= k < n")
        gram = arr.conj().T @ arr
        if np.max(np.abs(gram - np.eye(self.k))) > 1e-10:
            raise ValueError("basis columns must be orthonormal")
        arr.setflags(write=False)
        object.__setattr__(self, "basis", arr)


@dataclass(frozen=True, eq=False)
class GraphChart:
    """Graph-coordinate patch around ``base`` with complement ``complement``.

    The two subspaces must be complementary: together their bases span
    F^n, checked through the smallest singular value of the stacked
    basis.  Build instances with :func:`graph_chart`.
    """

    base: Subspace
    complement: Subspace

    def __post_init__(self):
        b, m = self.base, self.complement
        if b.field != m.field:
            raise FieldMismatch(f"mixed fields: {b.field} vs {m.field}")
        if b.n != m.n or b.k + m.k != b.n:
            raise DimensionMismatch(
                f"complement of a {b.k}-dimensional subspace of F^{b.n} "
                f"must have dimension {b.n - b.k}, got {m.k}"
            )
        combined = np.hstack([b.basis, m.basis])
        smallest = np.linalg.svd(combined, compute_uv=False)[-1]
        if smallest <= DEFAULT_TOLERANCE.eps_abs:
            raise ValueError("base and complement are not transverse")


def subspace_from_span(
    columns, tol: Tolerance = DEFAULT_TOLERANCE, field: str | None = None
) -> Subspace:
    """Subspace spanned by the columns of ``columns``."""
    mat = as_matrix(columns, field)
    q = numerics.orthonormalize(mat, tol)
    return Subspace(field_of(q), mat.shape[0], q.shape[1], q)


def subspaces_equal(a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Whether two subspaces coincide (projector distance under eps)."""
    _same_grassmannian(a, b)
    return numerics.projector_distance(a.basis, b.basis) < tol.eps_abs


def _same_grassmannian(a: Subspace, b: Subspace) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"mixed fields: {a.field} vs {b.field}")
    if a.n != b.n or a.k != b.k:
        raise DimensionMismatch(
            f"mixed Grassmannians: G({a.k},{a.n}) vs G({b.k},{b.n})"
        )


def graph_chart(
    base: Subspace,
    complement: Subspace | None = None,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> GraphChart:
    """Coordinate patch around ``base``.

    When no complement is given the Hermitian orthogonal complement is
    used; it is deterministic and maximally transverse.
    """
    if complement is None:
        complement = orthogonal_complement(base, tol)
    return GraphChart(base, complement)


def graph_subspace(
    chart: GraphChart, coeffs, tol: Tolerance = DEFAULT_TOLERANCE
) -> Subspace:
    """The graph subspace {v + A v : v in base} for coefficients ``coeffs``.

    ``coeffs`` is the (n-k) x k matrix of A : base -> complement in the
    stored bases; any value is allowed and the result always has
    dimension k.
    """
    base, comp = chart.base, chart.complement
    a = as_matrix(coeffs, base.field)
    if a.shape != (comp.k, base.k):
        raise ShapeMismatch(
            f"expected a {comp.k}x{base.k} coefficient matrix, got {a.shape}"
        )
    q = numerics.orthonormalize(base.basis + comp.basis @ a, tol)
    if q.shape[1] != base.k:
        raise IllConditioned("graph construction dropped rank numerically")
    return Subspace(base.field, base.n, base.k, q)


def chart_coords(
    chart: GraphChart, subspace: Subspace, tol: Tolerance = DEFAULT_TOLERANCE
) -> np.ndarray | None:
    """Coefficient matrix of ``subspace`` in the chart, or None.

    Decomposes each basis vector against [B_L B_M]; the subspace lies in
    the chart exactly when its base-components are invertible, i.e. when
    it is transverse to the complement.  Returns None otherwise.
    """
    base, comp = chart.base, chart.complement
    _same_grassmannian(base, subspace)
    combined = np.hstack([base.basis, comp.basis])
    parts = np.linalg.solve(combined, subspace.basis)
    along_base = parts[: base.k]
    along_comp = parts[base.k :]
    smallest = np.linalg.svd(along_base, compute_uv=False)[-1]
    if smallest <= tol.eps_abs:
        return None
    return along_comp @ np.linalg.inv(along_base)


def grassmann_dimension(k: int, n: int) -> int:
    """Dimension k(n-k) of G(k, n), over the base field."""
    if not 1 <= k < n:
        raise InvalidRange("need 1 <= k < n")
    return k * (n - k)


def apply_gl(g, s: Subspace, tol: Tolerance = DEFAULT_TOLERANCE) -> Subspace:
    """Image of a subspace under an invertible matrix.

    Scalar multiples of ``g`` give the same image, so the action factors
    through the projective linear group.
    """
    gm = as_matrix(g, s.field)
    if gm.shape != (s.n, s.n):
        raise DimensionMismatch(f"expected a {s.n}x{s.n} matrix, got {gm.shape}")
    c = numerics.cond_estimate(gm)
    if c > tol.cond_max:
        raise IllConditioned(
            f"condition estimate {c:.3e} exceeds cap {tol.cond_max:.3e}"
        )
    q = numerics.orthonormalize(gm @ s.basis, tol)
    if q.shape[1] != s.k:
        raise IllConditioned("image dropped rank numerically")
    return Subspace(s.field, s.n, s.k, q)


def transitive_witness_gr(l1: Subspace, l2: Subspace) -> np.ndarray:
    """An invertible matrix G with G(l1) = l2.

    G = [B2 B2_perp] [B1 B1_perp]^H is unitary: it carries the first
    subspace's orthonormal frame onto the second's.
    """
    _same_grassmannian(l1, l2)
    u1 = np.hstack([l1.basis, orthogonal_complement(l1).basis])
    u2 = np.hstack([l2.basis, orthogonal_complement(l2).basis])
    return u2 @ u1.conj().T


def orthogonal_complement(s: Subspace, tol: Tolerance = DEFAULT_TOLERANCE) -> Subspace:
    """Hermitian orthogonal complement, a subspace of dimension n-k."""
    q = numerics.kernel(s.basis.conj().T, tol)
    return Subspace(s.field, s.n, s.n - s.k, q)


def annihilator(s: Subspace, tol: Tolerance = DEFAULT_TOLERANCE) -> Subspace:
    """Annihilator under the bilinear pairing sum(x_i y_i), no conjugation.

    Functionals vanishing on the subspace, identified with vectors of
    F^n; computed as the kernel of the plain transpose of the basis.
    Over R it coincides with the orthogonal complement; over C the two
    constructions generally differ.
    """
    q = numerics.kernel(s.basis.T, tol)
    return Subspace(s.field, s.n, s.n - s.k, q)


def to_projective_point(s: Subspace, tol: Tolerance = DEFAULT_TOLERANCE) -> ProjPoint:
    """The point of P^{n-1} carried by a line (k = 1 subspace)."""
    if s.k != 1:
        raise InvalidRange("only 1-dimensional subspaces are projective points")
    return point_from_vector(s.basis[:, 0], tol)


def from_projective_point(p: ProjPoint) -> Subspace:
    """The line in F^{n+1} underlying a point of P^n."""
    return Subspace(p.field, p.n + 1, 1, p.h[:, None])
