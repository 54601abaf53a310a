"""Dense linear algebra over the real and complex fields.

Vectors and matrices are plain numpy arrays: float64 carries the real
field, complex128 the complex one.  Everything here is a pure function
that never mutates its arguments; the canonical-form modules build on
these primitives.
"""

import math
from dataclasses import dataclass

import numpy as np

from projgeo.errors import (
    FieldMismatch,
    IllConditioned,
    NotSquare,
    RankDeficientToZero,
    ShapeMismatch,
)

REAL = "real"
COMPLEX = "complex"

_DTYPES = {REAL: np.float64, COMPLEX: np.complex128}


@dataclass(frozen=True)
class Tolerance:
    """Comparison threshold and conditioning cap.

    ``eps_abs`` is an absolute threshold; inputs are canonically
    normalized before any comparison, so unit scales make an absolute
    cutoff meaningful.  ``cond_max`` bounds the singular-value-ratio
    condition estimate accepted by inversion-like operations.
    """

    eps_abs: float = 1e-9
    cond_max: float = 1e12

    def __post_init__(self):
        if not self.eps_abs > 0.0:
            raise ValueError("eps_abs must be positive")
        if not self.cond_max > 1.0:
            raise ValueError("cond_max must be greater than 1")


DEFAULT_TOLERANCE = Tolerance()


def dtype_for(field: str) -> type:
    """Numpy dtype backing a field tag."""
    try:
        return _DTYPES[field]
    except KeyError:
        raise ValueError(f"unknown field {field!r}") from None


def field_of(a: np.ndarray) -> str:
    """Field tag of an array, read off its dtype."""
    return COMPLEX if np.iscomplexobj(a) else REAL


def _coerce(arr: np.ndarray, field: str | None) -> np.ndarray:
    if field is None:
        field = field_of(arr)
    elif field == REAL and np.iscomplexobj(arr):
        raise FieldMismatch("complex entries cannot be coerced to the real field")
    out = np.asarray(arr, dtype=dtype_for(field))
    if not np.all(np.isfinite(out)):
        raise ValueError("entries must be finite")
    return out


def as_vector(v, field: str | None = None) -> np.ndarray:
    """Coerce to a finite 1-d float64/complex128 array."""
    arr = _coerce(np.asarray(v), field)
    if arr.ndim != 1:
        raise ShapeMismatch(f"expected a vector, got shape {arr.shape}")
    return arr


def as_matrix(m, field: str | None = None) -> np.ndarray:
    """Coerce to a finite 2-d float64/complex128 array."""
    arr = _coerce(np.asarray(m), field)
    if arr.ndim != 2:
        raise ShapeMismatch(f"expected a matrix, got shape {arr.shape}")
    return arr


def cond_estimate(m) -> float:
    """Singular-value-ratio condition estimate; inf when singular."""
    s = np.linalg.svd(as_matrix(m), compute_uv=False)
    if s.size == 0 or s[-1] == 0.0:
        return math.inf
    return float(s[0] / s[-1])


def invert(m, tol: Tolerance = DEFAULT_TOLERANCE) -> np.ndarray:
    """Matrix inverse, guarded by the conditioning cap."""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"cannot invert a {a.shape[0]}x{a.shape[1]} matrix")
    c = cond_estimate(a)
    if c > tol.cond_max:
        raise IllConditioned(
            f"condition estimate {c:.3e} exceeds cap {tol.cond_max:.3e}"
        )
    return np.linalg.inv(a)


def orthonormalize(m, tol: Tolerance = DEFAULT_TOLERANCE) -> np.ndarray:
    """Orthonormal basis of the column span of ``m``.

    Columns are processed in their given order (Gram-Schmidt with a
    second orthogonalization pass); a column is dropped once its
    residual falls under ``eps_abs`` times the largest input column
    norm.  The result Q satisfies Q^H Q = I and spans the same space
    as the input columns.
    """
    a = as_matrix(m)
    if a.shape[1] == 0:
        raise RankDeficientToZero("matrix has no columns")
    scale = float(np.linalg.norm(a, axis=0).max())
    if scale <= tol.eps_abs:
        raise RankDeficientToZero("all columns are numerically zero")
    cutoff = tol.eps_abs * scale
    basis: list[np.ndarray] = []
    for j in range(a.shape[1]):
        v = a[:, j].copy()
        for _ in range(2):  # second pass keeps Q^H Q = I near machine eps
            for q in basis:
                v = v - q * (q.conj() @ v)
        nv = float(np.linalg.norm(v))
        if nv > cutoff:
            basis.append(v / nv)
    return np.column_stack(basis)


def kernel(m, tol: Tolerance = DEFAULT_TOLERANCE) -> np.ndarray:
    """Orthonormal basis of the null space {x : m @ x = 0}.

    Singular values under ``eps_abs`` relative to the largest one count
    as zero.  The result may legitimately have zero columns.
    """
    a = as_matrix(m)
    _, s, vh = np.linalg.svd(a)
    if s.size and s[0] > 0.0:
        rank = int(np.count_nonzero(s > tol.eps_abs * s[0]))
    else:
        rank = 0
    return vh[rank:].conj().T


def projector_distance(b1: np.ndarray, b2: np.ndarray) -> float:
    """Frobenius distance between the orthogonal projectors of two
    orthonormal basis matrices (the basis-independent comparison)."""
    p1 = b1 @ b1.conj().T
    p2 = b2 @ b2.conj().T
    return float(np.linalg.norm(p1 - p2))
