import cmath

import numpy as np
import pytest
from numpy.testing import assert_allclose

from projgeo import (
    INFINITY,
    ExtendedComplex,
    FieldMismatch,
    InvalidRange,
    SamePoint,
    SingularCoefficients,
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
    point_from_vector,
    points_equal,
    real_fiber,
    sphere_point,
    sphere_to_cp1,
)
from projgeo.suites import rand_distinct_points, rand_proj_point

CP = {"field": "complex"}


def cpoint(*coords):
    return point_from_vector(np.array(coords, dtype=complex))


# --- projection and fibers ---------------------------------------------------


def test_project_axis_point():
    x = sphere_point([1.0, 0.0, 0.0])
    assert points_equal(hopf_project(x), point_from_vector([1.0, 0.0, 0.0]))


def test_antipodes_project_together():
    rng = np.random.default_rng(41)
    x = sphere_point(rng.standard_normal(4))
    y = sphere_point(-x.x)
    assert points_equal(hopf_project(x), hopf_project(y))


def test_phase_orbit_projects_together():
    rng = np.random.default_rng(42)
    x = sphere_point(rng.standard_normal(3) + 1j * rng.standard_normal(3))
    for theta in rng.uniform(0.0, 2.0 * np.pi, size=8):
        y = sphere_point(np.exp(1j * theta) * x.x)
        assert points_equal(hopf_project(x), hopf_project(y))


def test_real_fiber_axis():
    a, b = real_fiber(point_from_vector([1.0, 0.0]))
    assert_allclose(a.x, [1.0, 0.0])
    assert_allclose(b.x, [-1.0, 0.0])


def test_real_fiber_properties():
    rng = np.random.default_rng(43)
    for _ in range(50):
        p = rand_proj_point(rng, 3, "real")
        a, b = real_fiber(p)
        assert np.array_equal(a.x, -b.x)
        assert abs(np.linalg.norm(a.x) - 1.0) < 1e-12
        assert points_equal(hopf_project(a), p)
        assert points_equal(hopf_project(b), p)


def test_real_fiber_rejects_complex():
    with pytest.raises(FieldMismatch):
        real_fiber(cpoint(1.0, 0.0))


def test_complex_fiber_axis_quarters():
    samples = complex_fiber_sample(cpoint(1.0, 0.0), 4)
    expected = [(1, 0), (1j, 0), (-1, 0), (-1j, 0)]
    for got, want in zip(samples, expected):
        assert np.max(np.abs(got.x - np.array(want, dtype=complex))) < 1e-15


def test_complex_fiber_projects_to_base():
    rng = np.random.default_rng(44)
    p = rand_proj_point(rng, 2, "complex")
    for x in complex_fiber_sample(p, 64):
        assert np.max(np.abs(hopf_project(x).h - p.h)) < 1e-10


def test_complex_fiber_chord_lengths():
    rng = np.random.default_rng(45)
    p = rand_proj_point(rng, 1, "complex")
    m = 32
    samples = complex_fiber_sample(p, m)
    for _ in range(20):
        t1, t2 = rng.integers(0, m, size=2)
        chord = np.linalg.norm(samples[t1].x - samples[t2].x)
        assert abs(chord - 2.0 * abs(np.sin(np.pi * (t1 - t2) / m))) < 1e-12


def test_complex_fiber_guards():
    with pytest.raises(FieldMismatch):
        complex_fiber_sample(point_from_vector([1.0, 0.0]), 4)
    with pytest.raises(InvalidRange):
        complex_fiber_sample(cpoint(1.0, 0.0), 0)


# --- disjointness ------------------------------------------------------------


def test_orthogonal_fibers_distance_sqrt2():
    for m in (3, 16, 101):
        d = fibers_min_distance(cpoint(1.0, 0.0), cpoint(0.0, 1.0), m)
        assert abs(d - np.sqrt(2.0)) < 1e-12


def test_min_distance_monotone_refinement():
    rng = np.random.default_rng(46)
    p, q = rand_distinct_points(rng, 1, "complex")
    exact = np.sqrt(2.0 - 2.0 * abs(np.vdot(p.h, q.h)))
    last = np.inf
    for m in (16, 32, 64, 256):
        d = fibers_min_distance(p, q, m)
        assert exact - 1e-12 <= d <= last + 1e-12
        last = d
    assert last > 0.9 * exact


def test_min_distance_same_point_rejected():
    p = cpoint(1.0, 2.0j)
    with pytest.raises(SamePoint):
        fibers_min_distance(p, p, 16)


# --- linking -----------------------------------------------------------------


def test_linking_of_axis_fibers():
    p, q = cpoint(1.0, 0.0), cpoint(0.0, 1.0)
    raw = linking_integral(p, q, 2048)
    assert abs(abs(raw) - 1.0) < 0.05
    assert abs(linking_number(p, q, 2048)) == 1


def test_linking_symmetric_in_arguments():
    rng = np.random.default_rng(47)
    p, q = rand_distinct_points(rng, 1, "complex")
    assert linking_number(p, q, 256) == linking_number(q, p, 256)


def test_linking_guards():
    p = cpoint(1.0, 1.0)
    with pytest.raises(SamePoint):
        linking_number(p, p, 256)
    with pytest.raises(InvalidRange):
        linking_number(cpoint(1.0, 0.0), cpoint(0.0, 1.0), 32)


def test_fiber_stereo_samples_finite_even_through_pole():
    # the fiber over [0 : 1] passes through the default projection pole
    xyz = fiber_stereo_samples(cpoint(0.0, 1.0), 64)
    assert np.all(np.isfinite(xyz))


# --- the extended plane and the 2-sphere -------------------------------------


def test_affine_coordinates():
    assert extended_equal(cp1_affine(cpoint(0.0, 1.0)), 0.0)
    assert cp1_affine(cpoint(1.0, 0.0)).is_infinity
    assert extended_equal(cp1_affine(cpoint(2.0 + 1.0j, 1.0)), 2.0 + 1.0j, eps=1e-12)


def test_affine_inverse():
    assert points_equal(cp1_from_affine(0.0), cpoint(0.0, 1.0))
    assert points_equal(cp1_from_affine(INFINITY), cpoint(1.0, 0.0))


def test_affine_round_trip():
    rng = np.random.default_rng(48)
    for _ in range(100):
        z = ExtendedComplex(complex(*rng.standard_normal(2)) * rng.uniform(0.1, 20.0))
        back = cp1_affine(cp1_from_affine(z))
        assert extended_equal(z, back, eps=1e-12 * max(1.0, abs(z.z)))
    assert cp1_affine(cp1_from_affine(INFINITY)).is_infinity


def test_sphere_poles():
    assert_allclose(cp1_to_sphere(cp1_from_affine(0.0)), [0.0, 0.0, -1.0])
    assert_allclose(cp1_to_sphere(cp1_from_affine(INFINITY)), [0.0, 0.0, 1.0])


def test_sphere_equator():
    rng = np.random.default_rng(49)
    for theta in rng.uniform(0.0, 2.0 * np.pi, size=16):
        xyz = cp1_to_sphere(cp1_from_affine(cmath.exp(1j * theta)))
        assert abs(xyz[2]) < 1e-12


def test_sphere_matches_stereographic_formula():
    rng = np.random.default_rng(50)
    for _ in range(50):
        z = complex(*rng.standard_normal(2)) * rng.uniform(0.1, 5.0)
        got = cp1_to_sphere(cp1_from_affine(z))
        want = np.array([2.0 * z.real, 2.0 * z.imag, abs(z) ** 2 - 1.0]) / (abs(z) ** 2 + 1.0)
        assert np.max(np.abs(got - want)) < 1e-12


def test_sphere_round_trip():
    rng = np.random.default_rng(51)
    for _ in range(50):
        p = rand_proj_point(rng, 1, "complex")
        xyz = cp1_to_sphere(p)
        assert abs(np.linalg.norm(xyz) - 1.0) < 1e-10
        assert np.max(np.abs(sphere_to_cp1(xyz).h - p.h)) < 1e-10


# --- Mobius transformations ---------------------------------------------------


def test_mobius_identity():
    for z in (ExtendedComplex(0.0), ExtendedComplex(3.0 - 2.0j), INFINITY):
        assert extended_equal(mobius_apply(1, 0, 0, 1, z), z, eps=1e-15)


def test_mobius_inversion_conventions():
    assert mobius_apply(0, 1, 1, 0, 0.0).is_infinity
    assert extended_equal(mobius_apply(0, 1, 1, 0, INFINITY), 0.0)
    assert extended_equal(mobius_apply(0, 1, 1, 0, 2.0), 0.5, eps=1e-15)


def test_mobius_affine_fixes_infinity():
    assert mobius_apply(1, 1, 0, 1, INFINITY).is_infinity


def test_mobius_rejects_singular_coefficients():
    with pytest.raises(SingularCoefficients):
        mobius_apply(1, 2, 2, 4, 1.0)
    with pytest.raises(SingularCoefficients):
        mobius_matches_projective(1, 2, 2, 4, 5)


def test_mobius_matches_projective_examples():
    assert mobius_matches_projective(1, 0, 0, 1, 100)
    assert mobius_matches_projective(0, 1, 1, 0, 100)


def test_mobius_matches_projective_random():
    rng = np.random.default_rng(52)
    for _ in range(50):
        while True:
            a, b, c, d = (complex(*rng.standard_normal(2)) for _ in range(4))
            if abs(a * d - b * c) > 0.1:
                break
        sub = np.random.default_rng(int(rng.integers(0, 2**63)))
        assert mobius_matches_projective(a, b, c, d, 100, rng=sub)
