import math

import numpy as np
import pytest
from conftest import random_triangles, triangles
from hypothesis import given
from hypothesis import strategies as st

from brocard_loci import geometry as g
from brocard_loci.errors import DegenerateInput, UnsupportedCenter

EQUILATERAL = np.array([[0.0, 0.0], [2.0, 0.0], [1.0, math.sqrt(3)]])


def cot(x):
    return 1 / math.tan(x)


# --- Brocard angle -----------------------------------------------------------


@given(triangles)
def test_brocard_angle_cot_identity(tri):
    A, B, C = g.angles(tri)
    assert cot(g.brocard_angle(tri)) == pytest.approx(cot(A) + cot(B) + cot(C), rel=1e-9)


@given(triangles)
def test_brocard_angle_at_most_thirty_degrees(tri):
    assert 0 < g.brocard_angle(tri) <= math.pi / 6 + 1e-15


@given(triangles)
def test_cevians_make_the_brocard_angle_with_the_sides(tri):
    w1, w2 = g.brocard_points(tri)
    omega = g.brocard_angle(tri)
    for i in range(3):
        p, q, r = tri[i], tri[(i + 1) % 3], tri[(i - 1) % 3]
        # angle at vertex i between a side and the cevian to each point
        ang1 = _angle(q - p, w1 - p)
        ang2 = _angle(r - p, w2 - p)
        assert ang1 == pytest.approx(omega, abs=1e-8)
        assert ang2 == pytest.approx(omega, abs=1e-8)


def _angle(u, v):
    return math.atan2(abs(g.cross(u, v)), float(np.dot(u, v)))


def test_equilateral_angle():
    assert g.brocard_angle(EQUILATERAL) == pytest.approx(math.pi / 6, abs=1e-15)
    assert g.brocard_angle(5 * EQUILATERAL + 3) == pytest.approx(math.pi / 6, abs=1e-15)


def test_right_isosceles_angle():
    # angles 45, 45, 90 degrees: cot sum is 1 + 1 + 0
    tri = np.array([[-1.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    assert cot(g.brocard_angle(tri)) == pytest.approx(2.0, rel=1e-14)


def test_constructive_angle_matches_cot_formula(rng):
    for tri in random_triangles(rng, 20):
        assert g.brocard_angle_constructive(tri) == pytest.approx(g.brocard_angle(tri), abs=1e-12)


def test_brocard_angle_is_constant_over_homothetic_family():
    from brocard_loci.homothetic import HomotheticPair, periodic_vertices

    t = np.linspace(0, 2 * math.pi, 97)
    omega = g.brocard_angle(periodic_vertices(HomotheticPair(2.0, 1.0), t))
    assert np.ptp(omega) < 1e-13


# --- Brocard points ----------------------------------------------------------


@given(triangles)
def test_cevian_points_match_barycentric_form(tri):
    w1, w2 = g.brocard_points(tri, check=False)
    b1, b2 = g.brocard_points_barycentric(tri)
    scale = g.diameter(tri)
    assert np.linalg.norm(w1 - b1) < 1e-9 * scale
    assert np.linalg.norm(w2 - b2) < 1e-9 * scale


@given(triangles)
def test_reversing_vertex_order_swaps_the_points(tri):
    w1, w2 = g.brocard_points(tri)
    r1, r2 = g.brocard_points(tri[::-1])
    scale = g.diameter(tri)
    assert np.linalg.norm(w1 - r2) < 1e-9 * scale
    assert np.linalg.norm(w2 - r1) < 1e-9 * scale


@given(triangles, st.floats(-math.pi, math.pi), st.floats(0.1, 10))
def test_points_follow_similarity_maps(tri, angle, scale):
    w1, w2 = g.brocard_points(tri)
    moved = scale * g.rotate(tri, angle) + np.array([1.5, -2.0])
    m1, m2 = g.brocard_points(moved)
    tol = 1e-9 * scale * g.diameter(tri)
    assert np.linalg.norm(m1 - (scale * g.rotate(w1, angle) + [1.5, -2.0])) < tol
    assert np.linalg.norm(m2 - (scale * g.rotate(w2, angle) + [1.5, -2.0])) < tol


def test_points_of_unit_right_triangle():
    w1, w2 = g.brocard_points(np.array([[0.0, 0.0], [0.0, 1.0], [1.0, 0.0]]))
    np.testing.assert_allclose(w2, [0.4, 0.2], atol=1e-15)
    np.testing.assert_allclose(w1, [0.2, 0.4], atol=1e-15)


def test_points_of_right_isosceles():
    w1, w2 = g.brocard_points(np.array([[-1.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))
    np.testing.assert_allclose(w1, [-0.2, 0.4], atol=1e-15)
    np.testing.assert_allclose(w2, [0.2, 0.4], atol=1e-15)


def test_equilateral_points_coincide_at_centroid():
    w1, w2 = g.brocard_points(EQUILATERAL)
    centroid = EQUILATERAL.mean(axis=0)
    assert np.linalg.norm(w1 - centroid) < 1e-12
    assert np.linalg.norm(w2 - centroid) < 1e-12


def test_batched_matches_single(rng):
    tris = random_triangles(rng, 8)
    w1, w2 = g.brocard_points(tris)
    for k, tri in enumerate(tris):
        s1, s2 = g.brocard_points(tri)
        np.testing.assert_array_equal(w1[k], s1)
        np.testing.assert_array_equal(w2[k], s2)


@pytest.mark.parametrize("tri", [
    [[0, 0], [1, 1], [2, 2]],
    [[0, 0], [0, 0], [1, 0]],
    [[1, 2], [1, 2], [1, 2]],
])
def test_degenerate_triangles_raise(tri):
    with pytest.raises(DegenerateInput):
        g.brocard_points(np.array(tri, float))
    with pytest.raises(DegenerateInput):
        g.brocard_angle(np.array(tri, float))


# --- centres and circles -----------------------------------------------------


def test_right_triangle_circumcenter():
    tri = np.array([[0.0, 0.0], [4.0, 0.0], [0.0, 3.0]])
    np.testing.assert_allclose(g.triangle_center(tri, 3), [2.0, 1.5], atol=1e-15)


@given(triangles)
def test_circumcenter_is_equidistant(tri):
    d = np.linalg.norm(tri - g.triangle_center(tri, 3), axis=1)
    assert np.ptp(d) < 1e-9 * d.max()


@pytest.mark.parametrize("k", g.SUPPORTED_CENTERS)
def test_equilateral_centers_coincide(k):
    assert np.linalg.norm(g.triangle_center(EQUILATERAL, k) - EQUILATERAL.mean(axis=0)) < 1e-12


def test_symmedian_point_barycentrics():
    tri = np.array([[0.0, 0.0], [4.0, 0.0], [1.0, 3.0]])
    a2, b2, c2 = g.side_lengths_sq(tri)
    expected = (a2 * tri[0] + b2 * tri[1] + c2 * tri[2]) / (a2 + b2 + c2)
    np.testing.assert_allclose(g.triangle_center(tri, 6), expected, atol=1e-14)


def test_unsupported_center():
    with pytest.raises(UnsupportedCenter):
        g.triangle_center(EQUILATERAL, 4)


@given(triangles)
def test_brocard_points_are_on_the_brocard_circle(tri):
    circle = g.brocard_circle(tri)
    w1, w2 = g.brocard_points(tri)
    scale = g.diameter(tri)
    for p in (w1, w2, g.triangle_center(tri, 3), g.triangle_center(tri, 6)):
        assert abs(np.linalg.norm(p - circle.center) - circle.radius) < 1e-9 * scale


def test_brocard_circle_of_unit_right_triangle():
    tri = np.array([[0.0, 0.0], [0.0, 1.0], [1.0, 0.0]])
    circle = g.brocard_circle(tri)
    for p in g.brocard_points(tri):
        assert abs(np.linalg.norm(p - circle.center) - circle.radius) < 1e-10


def test_equilateral_brocard_circle_has_zero_radius():
    circle = g.brocard_circle(EQUILATERAL)
    assert circle.radius < 1e-12
    np.testing.assert_allclose(circle.center, EQUILATERAL.mean(axis=0), atol=1e-12)


def test_brocard_circle_is_centered_at_x182():
    tri = np.array([[0.0, 0.0], [4.0, 0.0], [1.0, 3.0]])
    np.testing.assert_allclose(g.brocard_circle(tri).center, g.triangle_center(tri, 182), atol=1e-15)
