"""Unit-sphere projections onto projective space and their fibers.

Over R the unit sphere S^n double-covers RP^n: the fiber over a point is
an antipodal pair.  Over C the unit sphere of C^{n+1} maps onto CP^n
with circle fibers {e^{it} h}; distinct fibers never meet, and for n = 1
any two of them form a linked pair of circles in S^3, which is checked
here numerically with a discretized Gauss double integral.

The n = 1 base space CP^1 is also exposed as the extended complex plane
C u {inf} (affine coordinate z = h1/h2) and as the round 2-sphere via
stereographic projection; under that identification projective maps act
as Mobius transformations z -> (a z + b)/(c z + d).
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from projgeo.errors import (
    DegenerateProjection,
    DimensionMismatch,
    FieldMismatch,
    InvalidRange,
    SamePoint,
    SingularCoefficients,
    ZeroVector,
)
from projgeo.numerics import (
    COMPLEX,
    DEFAULT_TOLERANCE,
    REAL,
    Tolerance,
    as_vector,
    dtype_for,
    field_of,
)
from projgeo.projective import ProjPoint, point_from_vector, points_equal


@dataclass(frozen=True, eq=False)
class SpherePoint:
    """A unit vector of F^{n_amb}, i.e. a point of the unit sphere."""

    field: str
    n_amb: int
    x: np.ndarray

    def __post_init__(self):
        arr = np.array(self.x, dtype=dtype_for(self.field))
        if arr.ndim != 1 or arr.shape[0] != self.n_amb:
            raise DimensionMismatch(
                f"expected {self.n_amb} coordinates, got shape {arr.shape}"
            )
        if abs(np.linalg.norm(arr) - 1.0) > 1e-12:
            raise ValueError("sphere points must have unit norm")
        arr.setflags(write=False)
        object.__setattr__(self, "x", arr)


def sphere_point(
    v, tol: Tolerance = DEFAULT_TOLERANCE, field: str | None = None
) -> SpherePoint:
    """Normalize a nonzero vector onto the unit sphere."""
    vec = as_vector(v, field)
    nrm = float(np.linalg.norm(vec))
    if nrm <= tol.eps_abs:
        raise ZeroVector("cannot normalize the zero vector")
    u = vec / nrm
    return SpherePoint(field_of(u), u.shape[0], u)


@dataclass(frozen=True)
class ExtendedComplex:
    """A value of C u {inf}; ``z is None`` encodes the point at infinity."""

    z: complex | None = None

    def __post_init__(self):
        if self.z is not None:
            val = complex(self.z)
            if not (math.isfinite(val.real) and math.isfinite(val.imag)):
                raise ValueError("finite value required; use INFINITY otherwise")
            object.__setattr__(self, "z", val)

    @property
    def is_infinity(self) -> bool:
        return self.z is None

    def __repr__(self):
        return "INFINITY" if self.z is None else f"ExtendedComplex({self.z!r})"


INFINITY = ExtendedComplex(None)


def as_extended(value) -> ExtendedComplex:
    """Coerce a complex number (or ExtendedComplex) to ExtendedComplex."""
    if isinstance(value, ExtendedComplex):
        return value
    return ExtendedComplex(complex(value))


def extended_equal(a, b, eps: float = DEFAULT_TOLERANCE.eps_abs) -> bool:
    """Equality on C u {inf}: inf matches only inf, finite values within eps."""
    ea, eb = as_extended(a), as_extended(b)
    if ea.is_infinity or eb.is_infinity:
        return ea.is_infinity and eb.is_infinity
    return abs(ea.z - eb.z) <= eps


def hopf_project(x: SpherePoint, tol: Tolerance = DEFAULT_TOLERANCE) -> ProjPoint:
    """The point of projective space on the line through a sphere point."""
    return point_from_vector(x.x, tol)


def real_fiber(p: ProjPoint) -> tuple[SpherePoint, SpherePoint]:
    """Both preimages on the sphere of a real projective point.

    The fiber of the double cover S^n -> RP^n is the antipodal pair
    {h, -h} of the canonical unit representative.
    """
    if p.field != REAL:
        raise FieldMismatch("real fibers exist over the real field only")
    return (
        SpherePoint(REAL, p.n + 1, p.h),
        SpherePoint(REAL, p.n + 1, -p.h),
    )


def complex_fiber_sample(p: ProjPoint, m: int) -> list[SpherePoint]:
    """m equally spaced points on the circle fiber over a complex point.

    Sample t is e^{2 pi i t / m} h for t = 0, ..., m-1; every sample
    projects back to ``p`` and chord lengths follow the circle geometry
    |x_t - x_s| = 2 |sin(pi (t - s) / m)|.
    """
    if p.field != COMPLEX:
        raise FieldMismatch("circle fibers exist over the complex field only")
    if m < 1:
        raise InvalidRange("need at least one sample")
    phases = np.exp(2j * np.pi * np.arange(m) / m)
    return [SpherePoint(COMPLEX, p.n + 1, ph * p.h) for ph in phases]


def _fiber_array(h: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    return np.exp(1j * thetas)[:, None] * h[None, :]


def fibers_min_distance(
    p: ProjPoint, q: ProjPoint, m: int, tol: Tolerance = DEFAULT_TOLERANCE
) -> float:
    """Minimum distance between m-point samples of two circle fibers.

    Strictly positive whenever the base points differ; the exact
    distance between the full circles is sqrt(2 - 2 |<h_p, h_q>|), which
    the sampled minimum approaches from above as m grows.
    """
    if p.field != COMPLEX or q.field != COMPLEX:
        raise FieldMismatch("circle fibers exist over the complex field only")
    if p.n != q.n:
        raise DimensionMismatch(f"mixed dimensions: {p.n} vs {q.n}")
    if m < 1:
        raise InvalidRange("need at least one sample")
    if points_equal(p, q, tol):
        raise SamePoint("fibers coincide; disjointness distance is undefined")
    thetas = 2.0 * np.pi * np.arange(m) / m
    xs = _fiber_array(p.h, thetas)
    ys = _fiber_array(q.h, thetas)
    gram = xs @ ys.conj().T
    d2 = np.maximum(2.0 - 2.0 * gram.real, 0.0)
    return float(np.sqrt(d2.min()))


# --- linking of fibers in S^3 -------------------------------------------

# The 3-sphere sits in R^4 = C^2 via (Re h1, Im h1, Re h2, Im h2) and is
# projected to R^3 stereographically from the pole -e4 (the point (0, -i)
# of C^2).  When a fiber passes within this gap of the pole, both fibers
# are first moved by one fixed rotation from the list below.
_POLE_GAP = 1e-3
_FALLBACK_ANGLES = (0.0, 1.0, 2.0)

_GAUSS_CHUNK = 256


def _rotation(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def _pole_clearance(h: np.ndarray) -> float:
    # min over t of |e^{it} h - (0, -i)| = sqrt(2 - 2 |h2|)
    return math.sqrt(max(0.0, 2.0 - 2.0 * abs(h[1])))


def _to_r4(points: np.ndarray) -> np.ndarray:
    return np.stack(
        [points[:, 0].real, points[:, 0].imag, points[:, 1].real, points[:, 1].imag],
        axis=-1,
    )


def _stereo_r3(points4: np.ndarray) -> np.ndarray:
    return points4[:, :3] / (1.0 + points4[:, 3:4])


def _clear_pole(*reps: np.ndarray) -> tuple[np.ndarray, ...]:
    for angle in _FALLBACK_ANGLES:
        rot = _rotation(angle)
        moved = tuple(rot @ h for h in reps)
        if all(_pole_clearance(h) > _POLE_GAP for h in moved):
            return moved
    raise DegenerateProjection("no pole-avoiding rotation found")


def fiber_stereo_samples(p: ProjPoint, m: int) -> np.ndarray:
    """R^3 stereographic coordinates of m fiber samples over a CP^1 point.

    The fiber is rotated by a fixed rotation first whenever it passes
    near the projection pole, so the output is always finite.
    """
    if p.field != COMPLEX or p.n != 1:
        raise FieldMismatch("stereographic fiber coordinates need a CP^1 point")
    if m < 1:
        raise InvalidRange("need at least one sample")
    (h,) = _clear_pole(p.h)
    thetas = 2.0 * np.pi * np.arange(m) / m
    return _stereo_r3(_to_r4(_fiber_array(h, thetas)))


def linking_integral(
    p: ProjPoint, q: ProjPoint, m: int, tol: Tolerance = DEFAULT_TOLERANCE
) -> float:
    """Gauss double integral of the two fibers, before rounding.

    Both fibers are projected stereographically to R^3 and discretized
    into m segments each; the integrand is evaluated with the midpoint
    rule.  The summation order is fixed, so the result is deterministic
    for a given m.
    """
    if p.field != COMPLEX or q.field != COMPLEX or p.n != 1 or q.n != 1:
        raise FieldMismatch("linking is computed for fibers over CP^1 points")
    if m < 64:
        raise InvalidRange("need at least 64 segments per fiber")
    if p.n != q.n:
        raise DimensionMismatch(f"mixed dimensions: {p.n} vs {q.n}")
    if points_equal(p, q, tol):
        raise SamePoint("a fiber is not linked with itself")
    hp, hq = _clear_pole(p.h, q.h)

    edges = 2.0 * np.pi * np.arange(m) / m
    mids = edges + np.pi / m

    def curve(h: np.ndarray, thetas: np.ndarray) -> np.ndarray:
        return _stereo_r3(_to_r4(_fiber_array(h, thetas)))

    a_edge, a_mid = curve(hp, edges), curve(hp, mids)
    b_edge, b_mid = curve(hq, edges), curve(hq, mids)
    a_seg = np.roll(a_edge, -1, axis=0) - a_edge
    b_seg = np.roll(b_edge, -1, axis=0) - b_edge

    partial: list[float] = []
    for i0 in range(0, m, _GAUSS_CHUNK):
        i1 = min(i0 + _GAUSS_CHUNK, m)
        r = a_mid[i0:i1, None, :] - b_mid[None, :, :]
        cross = np.cross(a_seg[i0:i1, None, :], b_seg[None, :, :])
        num = np.einsum("ijk,ijk->ij", cross, r)
        d2 = np.einsum("ijk,ijk->ij", r, r)
        partial.append(float(np.sum(num / (d2 * np.sqrt(d2)))))
    return math.fsum(partial) / (4.0 * math.pi)


def linking_number(
    p: ProjPoint, q: ProjPoint, m: int, tol: Tolerance = DEFAULT_TOLERANCE
) -> int:
    """Linking number of the fibers over two distinct CP^1 points.

    Nearest integer of :func:`linking_integral`; at m >= 2048 the raw
    integral sits within 0.05 of the returned integer.
    """
    return int(round(linking_integral(p, q, m, tol)))


# --- CP^1 as the extended plane and the 2-sphere ------------------------


def cp1_affine(p: ProjPoint, tol: Tolerance = DEFAULT_TOLERANCE) -> ExtendedComplex:
    """Affine coordinate z = h1/h2 of a CP^1 point; [1 : 0] maps to inf."""
    if p.field != COMPLEX or p.n != 1:
        raise FieldMismatch("affine coordinates are defined on CP^1")
    if abs(p.h[1]) <= tol.eps_abs:
        return INFINITY
    return ExtendedComplex(complex(p.h[0] / p.h[1]))


def cp1_from_affine(z, tol: Tolerance = DEFAULT_TOLERANCE) -> ProjPoint:
    """CP^1 point with affine coordinate ``z``; inf maps to [1 : 0]."""
    ez = as_extended(z)
    if ez.is_infinity:
        return point_from_vector(np.array([1.0, 0.0]), tol, field=COMPLEX)
    val = ez.z
    if abs(val) <= 1.0:
        vec = np.array([val, 1.0], dtype=np.complex128)
    else:  # the same line, scaled to stay well-conditioned for huge |z|
        vec = np.array([1.0, 1.0 / val], dtype=np.complex128)
    return point_from_vector(vec, tol)


def cp1_to_sphere(p: ProjPoint, tol: Tolerance = DEFAULT_TOLERANCE) -> np.ndarray:
    """Unit point of S^2 in R^3 identified with a CP^1 point.

    This is the inverse stereographic image of the affine coordinate,
    z -> (2 Re z, 2 Im z, |z|^2 - 1) / (|z|^2 + 1), written directly in
    homogeneous coordinates so that inf lands on the north pole
    (0, 0, 1) by the same formula.
    """
    if p.field != COMPLEX or p.n != 1:
        raise FieldMismatch("the sphere identification is defined on CP^1")
    h1, h2 = complex(p.h[0]), complex(p.h[1])
    w = h1 * h2.conjugate()
    return np.array([2.0 * w.real, 2.0 * w.imag, abs(h1) ** 2 - abs(h2) ** 2])


def sphere_to_cp1(xyz, tol: Tolerance = DEFAULT_TOLERANCE) -> ProjPoint:
    """CP^1 point identified with a unit vector of R^3.

    Stereographic projection from the north pole back to the affine
    coordinate; the pole itself maps to [1 : 0].
    """
    v = as_vector(xyz, REAL)
    if v.shape[0] != 3:
        raise DimensionMismatch(f"expected 3 coordinates, got {v.shape[0]}")
    if abs(np.linalg.norm(v) - 1.0) > 1e-6:
        raise ValueError("expected a unit vector of R^3")
    if 1.0 - v[2] <= tol.eps_abs:
        return cp1_from_affine(INFINITY, tol)
    return cp1_from_affine(complex(v[0], v[1]) / (1.0 - v[2]), tol)


# --- Mobius transformations ---------------------------------------------


def mobius_apply(
    a, b, c, d, z, tol: Tolerance = DEFAULT_TOLERANCE
) -> ExtendedComplex:
    """Evaluate z -> (a z + b) / (c z + d) on C u {inf}.

    Follows the usual conventions: a vanishing denominator sends a
    finite point to inf, and inf itself goes to a/c (or stays at inf
    when c = 0).  Vanishing is judged against ``tol.eps_abs``.
    """
    a, b, c, d = complex(a), complex(b), complex(c), complex(d)
    if abs(a * d - b * c) <= tol.eps_abs:
        raise SingularCoefficients("need a d - b c != 0")
    ez = as_extended(z)
    if ez.is_infinity:
        if abs(c) <= tol.eps_abs:
            return INFINITY
        return ExtendedComplex(a / c)
    den = c * ez.z + d
    if abs(den) <= tol.eps_abs:
        return INFINITY
    return ExtendedComplex((a * ez.z + b) / den)


def mobius_matches_projective(
    a,
    b,
    c,
    d,
    samples: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    rng: np.random.Generator | None = None,
    agreement_eps: float = 1e-9,
) -> bool:
    """Check the Mobius form against the projective action on CP^1.

    Routes ``samples`` random affine values (plus 0, inf, and the pole
    -d/c when it exists) through the matrix [[a, b], [c, d]] acting on
    CP^1 and compares with the direct formula; True when every value
    agrees within ``agreement_eps``, with inf matching only inf.
    """
    from projgeo.projective import apply_map, map_from_matrix

    a, b, c, d = complex(a), complex(b), complex(c), complex(d)
    if abs(a * d - b * c) <= tol.eps_abs:
        raise SingularCoefficients("need a d - b c != 0")
    if rng is None:
        rng = np.random.default_rng(0)
    t = map_from_matrix(np.array([[a, b], [c, d]]), tol, field=COMPLEX)

    zs: list[ExtendedComplex] = [ExtendedComplex(0j), INFINITY]
    if abs(c) > tol.eps_abs:
        zs.append(ExtendedComplex(-d / c))
    for _ in range(samples):
        zs.append(ExtendedComplex(complex(rng.standard_normal(), rng.standard_normal())))

    for z in zs:
        direct = mobius_apply(a, b, c, d, z, tol)
        via_cp1 = cp1_affine(apply_map(t, cp1_from_affine(z, tol), tol), tol)
        if not extended_equal(direct, via_cp1, agreement_eps):
            return False
    return True
