import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from brocard_loci import brocard_triangles as bt
from brocard_loci import geometry, homothetic
from brocard_loci.errors import DegenerateFamily, GeometryError
from brocard_loci.homothetic import HomotheticPair
from brocard_loci.locus import fit_conic

SQRT3 = math.sqrt(3)
PAIR = HomotheticPair(2.0, 1.0)
T64 = 2 * math.pi * np.arange(64) / 64

aspect = st.floats(1.05, 6.0)
minor = st.floats(0.2, 5.0)
angle = st.floats(0, 2 * math.pi)


def pairs():
    return st.builds(lambda r, b: HomotheticPair(r * b, b), aspect, minor)


def test_requires_major_axis_on_x():
    with pytest.raises(GeometryError):
        HomotheticPair(1.0, 2.0)
    with pytest.raises(DegenerateFamily):
        homothetic.brocard_locus_conic(HomotheticPair(1.0, 1.0), 1)


def test_vertices_at_t0():
    np.testing.assert_allclose(
        homothetic.periodic_vertices(PAIR, 0.0), [[2, 0], [-1, SQRT3 / 2], [-1, -SQRT3 / 2]], atol=1e-15
    )


@given(angle)
def test_circle_case_gives_equilaterals(t):
    tri = homothetic.periodic_vertices(HomotheticPair(1.0, 1.0), t)
    assert geometry.is_equilateral(tri)
    np.testing.assert_allclose(np.linalg.norm(tri, axis=1), 1.0, rtol=1e-14)


@given(pairs())
def test_sides_are_tangent_to_the_caustic(pair):
    tris = homothetic.periodic_vertices(pair, T64)
    assert np.max(homothetic.tangency_residuals(pair, tris)) < 1e-10


@given(pairs())
def test_family_conserves_area_angle_and_side_sum(pair):
    tris = homothetic.periodic_vertices(pair, T64)
    area = np.abs(geometry.signed_area(tris))
    omega = geometry.brocard_angle(tris)
    sides = geometry.side_lengths_sq(tris).sum(axis=-1)
    for q in (area, omega, sides):
        assert np.ptp(q) < 1e-10 * np.max(np.abs(q))
    assert area[0] == pytest.approx(homothetic.periodic_area(pair), rel=1e-12)


# --- Brocard point ellipses -------------------------------------------------------


def test_first_locus_coefficients():
    e1 = homothetic.brocard_locus_conic(PAIR, 1)
    assert e1.B == pytest.approx(-10 * SQRT3 / 3, rel=1e-14)
    assert e1.A == pytest.approx((7 * 16 + 6 * 4 + 3) / (4 * 9), rel=1e-14)
    assert e1.C == pytest.approx((3 * 16 + 6 * 4 + 7) / 9, rel=1e-14)
    assert homothetic.brocard_locus_conic(PAIR, 2).B == pytest.approx(10 * SQRT3 / 3, rel=1e-14)


@given(pairs())
def test_brocard_points_lie_on_their_ellipses(pair):
    w1, w2 = geometry.brocard_points(homothetic.periodic_vertices(pair, T64))
    e1 = homothetic.brocard_locus_conic(pair, 1)
    e2 = homothetic.brocard_locus_conic(pair, 2)
    assert np.max(np.abs(e1(w1[:, 0], w1[:, 1]))) < 1e-9
    assert np.max(np.abs(e2(w2[:, 0], w2[:, 1]))) < 1e-9


def test_fitted_ellipse_aspect_ratio_and_tilt():
    t = 2 * math.pi * np.arange(256) / 256
    w1, w2 = geometry.brocard_points(homothetic.periodic_vertices(PAIR, t))
    f1, f2 = fit_conic(w1), fit_conic(w2)
    assert f1.semi_axes[0] / f1.semi_axes[1] == pytest.approx(2.0, abs=1e-9)
    assert math.tan(homothetic.locus_tilt_angle(PAIR)) == pytest.approx(40 * SQRT3 / 59, rel=1e-14)
    between = abs(f1.tilt - f2.tilt) % math.pi
    assert min(between, math.pi - between) == pytest.approx(math.atan(40 * SQRT3 / 59), abs=1e-7)


def test_tilt_tends_to_sixty_degrees_near_the_circle():
    pair = HomotheticPair(1 + 1e-6, 1.0)
    assert homothetic.locus_tilt_angle(pair) == pytest.approx(math.pi / 3, abs=1e-6)


@given(pairs())
def test_y_intercept_is_on_the_first_ellipse(pair):
    y = homothetic.brocard_locus_y_intercept(pair)
    e1 = homothetic.brocard_locus_conic(pair, 1)
    assert abs(e1(0.0, y)) < 1e-12 * max(1.0, abs(e1.C) * y * y)


def test_special_ratios():
    r_tangency, r_intercept = homothetic.special_ratio_roots()
    assert r_tangency == pytest.approx(math.sqrt(5), abs=1e-6)
    assert r_intercept == pytest.approx(homothetic.intercept_ratio_closed_form(), abs=1e-9)
    assert r_intercept == pytest.approx(3.8, abs=0.05)
    r = homothetic.intercept_ratio_closed_form()
    assert r**4 - 14 * r**2 - 3 == pytest.approx(0.0, abs=1e-12)


# --- first Brocard triangle ------------------------------------------------------------


def test_vertex_map_example():
    assert homothetic.first_brocard_ratio(PAIR) == pytest.approx(0.3, rel=1e-15)
    np.testing.assert_allclose(homothetic.t1_vertex(PAIR, 0.0, 1), [0.3, 3 * SQRT3 / 20], atol=1e-15)


@given(pairs(), angle)
def test_vertex_map_matches_construction(pair, t):
    built = bt.first_brocard_triangle(homothetic.periodic_vertices(pair, t))
    scale = pair.a
    # the map's vertex i is the construction's vertex i + 1 (cyclically)
    for i in (1, 2, 3):
        np.testing.assert_allclose(homothetic.t1_vertex(pair, t, i), built[i % 3], atol=1e-9 * scale)


def test_first_brocard_constants():
    assert homothetic.t1_locus_axes(PAIR) == pytest.approx((0.6, 0.3), abs=1e-15)
    assert homothetic.t1_area(PAIR) == pytest.approx(27 * SQRT3 / 200, rel=1e-14)
    assert homothetic.similarity_ratio(PAIR) == pytest.approx(10 / 3, rel=1e-14)
    a1, b1 = homothetic.t1_locus_axes(PAIR)
    assert a1 < PAIR.a / 2 and b1 < PAIR.b / 2


@given(pairs())
def test_t1_area_and_shape_are_constant(pair):
    tris = homothetic.periodic_vertices(pair, T64)
    t1 = bt.first_brocard_triangle(tris)
    area = np.abs(geometry.signed_area(t1))
    assert np.max(np.abs(area - homothetic.t1_area(pair))) < 1e-10 * pair.a * pair.b
    ratio = geometry.perimeter(tris) / geometry.perimeter(t1)
    np.testing.assert_allclose(ratio, homothetic.similarity_ratio(pair), rtol=1e-9)


@given(pairs())
def test_t1_vertex_locus_is_inside_the_caustic(pair):
    a1, b1 = homothetic.t1_locus_axes(pair)
    assert a1 < pair.a / 2 and b1 < pair.b / 2


# --- circumcircle and Brocard circle ---------------------------------------------------------


def test_circumradius_of_circle_case():
    np.testing.assert_allclose(homothetic.circumradius_sq(HomotheticPair(1.0, 1.0), T64), 1.0, rtol=1e-15)


@given(pairs())
def test_circumradius_formula_matches_construction(pair):
    tris = homothetic.periodic_vertices(pair, T64)
    r2 = np.sum((tris[:, 0] - geometry.triangle_center(tris, 3)) ** 2, axis=-1)
    np.testing.assert_allclose(homothetic.circumradius_sq(pair, T64), r2, rtol=1e-10)


def test_circle_area_ratio():
    assert homothetic.brocard_circle_area_ratio(PAIR) == pytest.approx(100 / 9, rel=1e-14)
    tris = homothetic.periodic_vertices(PAIR, T64)
    ratio = geometry.circumcircle(tris).radius ** 2 / geometry.brocard_circle(tris).radius ** 2
    np.testing.assert_allclose(ratio, 100 / 9, rtol=1e-9)


def test_brocard_circle_conic_axes():
    _, axes, _ = homothetic.homothetic_brocard_circle_conic(PAIR).geometry()
    np.testing.assert_allclose(axes, homothetic.t1_locus_axes(PAIR), rtol=1e-12)


def test_x182_locus_is_centrally_symmetric():
    # the family at t + pi/3 is the point reflection of the family at t
    p = homothetic.x182_locus(PAIR, T64[:8])
    q = homothetic.x182_locus(PAIR, T64[:8] + math.pi / 3)
    np.testing.assert_allclose(q, -p, atol=1e-12)
