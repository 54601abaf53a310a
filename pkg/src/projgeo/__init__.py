"""Projective spaces, Grassmannians, and Hopf fibrations over R and C.

Numerical coordinates throughout: every quotient object is held by a
canonical representative so that equality of classes reduces to a
coordinatewise comparison at an absolute tolerance.
"""

from projgeo.errors import (
    DegenerateProjection,
    DimensionMismatch,
    FieldMismatch,
    IllConditioned,
    InvalidRange,
    NotSquare,
    ProjGeoError,
    RankDeficientToZero,
    SamePoint,
    ShapeMismatch,
    SingularCoefficients,
    ZeroVector,
)
from projgeo.grassmann import (
    GraphChart,
    Subspace,
    annihilator,
    apply_gl,
    chart_coords,
    from_projective_point,
    graph_chart,
    graph_subspace,
    grassmann_dimension,
    orthogonal_complement,
    subspace_from_span,
    subspaces_equal,
    to_projective_point,
    transitive_witness_gr,
)
from projgeo.hopf_fibration import (
    INFINITY,
    ExtendedComplex,
    SpherePoint,
    complex_fiber_sample,
    cp1_affine,
    cp1_from_affine,
    cp1_to_sphere,
    extended_equal,
    fiber_stereo_samples,
    fibers_min_distance,
    hopf_project,
    linking_integral,
    linking_number,
    mobius_apply,
    mobius_matches_projective,
    real_fiber,
    sphere_point,
    sphere_to_cp1,
)
from projgeo.hopf_manifold import (
    HopfPoint,
    ScaleGroup,
    hopf_points_equal,
    induced_linear,
    quotient_project,
    subspace_trace_membership,
    to_projective,
)
from projgeo.numerics import (
    COMPLEX,
    DEFAULT_TOLERANCE,
    REAL,
    Tolerance,
    cond_estimate,
    invert,
    kernel,
    orthonormalize,
    projector_distance,
)
from projgeo.projective import (
    AffineChart,
    ProjMap,
    ProjPoint,
    ProjSubspace,
    apply_map,
    chart_cover,
    chart_embed,
    chart_extract,
    chart_transition,
    compose,
    group_dimension,
    identity_map,
    inverse_map,
    map_from_matrix,
    maps_equal,
    missing_locus,
    point_from_vector,
    point_membership,
    points_equal,
    proj_subspace_from_span,
    subspace_image,
    transitive_witness,
)

__version__ = "0.1.0"
