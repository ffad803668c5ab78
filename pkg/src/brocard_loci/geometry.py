"""Plane triangle primitives.

Brocard angle and points, the triangle centers X2, X3, X6 and X182,
circumcircle and Brocard circle.

Triangles are float arrays of shape ``(..., 3, 2)`` (vertices p1, p2, p3 in
order) and points are arrays of shape ``(..., 2)``.  Every function broadcasts
over the leading axes, so a whole sampled family can go through one call.

Brocard point labels follow vertex order, not orientation: the first Brocard
point satisfies ``angle(W1 p1 p2) = angle(W1 p2 p3) = angle(W1 p3 p1) = omega``,
which in barycentrics is ``1/b^2 : 1/c^2 : 1/a^2``.  Reversing the vertex
order (equivalently, reflecting the triangle while keeping the rotation sense
fixed) swaps the two points.
"""

import logging
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq

from .errors import DegenerateInput, GeometryError, UnsupportedCenter

log = logging.getLogger(__name__)

#: |signed area| below this times (longest side)^2 counts as degenerate.
DEGENERACY_RATIO = 1e-12

SUPPORTED_CENTERS = (2, 3, 6, 182)


class Circle(NamedTuple):
    center: np.ndarray
    radius: np.ndarray

    def contains(self, points, tol=1e-9):
        """True where ``points`` lie on the circle within ``tol`` (absolute)."""
        d = np.linalg.norm(np.asarray(points, float) - self.center, axis=-1)
        return np.abs(d - self.radius) <= tol


def as_points(points):
    arr = np.asarray(points, dtype=float)
    if arr.shape[-1:] != (2,):
        raise GeometryError(f"expected trailing dimension 2, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise GeometryError("non-finite coordinates")
    return arr


def as_triangle(tri):
    arr = as_points(tri)
    if arr.shape[-2:] != (3, 2):
        raise GeometryError(f"expected shape (..., 3, 2), got {arr.shape}")
    return arr


def cross(u, v):
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def rotate(v, angle):
    """Rotate vectors ``v`` counterclockwise by ``angle`` (broadcasting)."""
    c, s = np.cos(angle), np.sin(angle)
    return np.stack([c * v[..., 0] - s * v[..., 1], s * v[..., 0] + c * v[..., 1]], axis=-1)


def signed_area(tri):
    tri = np.asarray(tri, float)
    return 0.5 * cross(tri[..., 1, :] - tri[..., 0, :], tri[..., 2, :] - tri[..., 0, :])


def side_lengths_sq(tri):
    """Squared side lengths ``(a^2, b^2, c^2)``; side i is opposite vertex i."""
    tri = np.asarray(tri, float)
    p1, p2, p3 = tri[..., 0, :], tri[..., 1, :], tri[..., 2, :]
    return np.stack(
        [
            np.sum((p2 - p3) ** 2, axis=-1),
            np.sum((p3 - p1) ** 2, axis=-1),
            np.sum((p1 - p2) ** 2, axis=-1),
        ],
        axis=-1,
    )


def diameter(tri):
    """Longest side length."""
    return np.sqrt(side_lengths_sq(tri).max(axis=-1))


def perimeter(tri):
    return np.sqrt(side_lengths_sq(tri)).sum(axis=-1)


def degenerate_mask(tri):
    tri = np.asarray(tri, float)
    longest_sq = side_lengths_sq(tri).max(axis=-1)
    return np.abs(signed_area(tri)) <= DEGENERACY_RATIO * longest_sq


def require_nondegenerate(tri):
    tri = as_triangle(tri)
    bad = degenerate_mask(tri)
    if np.any(bad):
        raise DegenerateInput(f"{int(np.sum(bad))} degenerate triangle(s)")
    return tri


def is_equilateral(tri, rtol=1e-9):
    sq = side_lengths_sq(tri)
    return np.ptp(sq, axis=-1) <= rtol * sq.max(axis=-1)


def angles(tri):
    """Interior angles at p1, p2, p3."""
    a2, b2, c2 = np.moveaxis(side_lengths_sq(tri), -1, 0)
    two_area = 2.0 * np.abs(signed_area(tri))
    # atan2(2*area, dot) is accurate for all angle sizes
    A = np.arctan2(two_area, 0.5 * (b2 + c2 - a2))
    B = np.arctan2(two_area, 0.5 * (c2 + a2 - b2))
    C = np.arctan2(two_area, 0.5 * (a2 + b2 - c2))
    return np.stack([A, B, C], axis=-1)


def brocard_angle(tri):
    """Brocard angle from ``cot w = cot A + cot B + cot C = (a^2+b^2+c^2)/(4 area)``."""
    tri = require_nondegenerate(tri)
    cot_w = side_lengths_sq(tri).sum(axis=-1) / (4.0 * np.abs(signed_area(tri)))
    return np.arctan2(1.0, cot_w)


def _cevians(tri, which, omega=None):
    """Anchor points and directions of the three Brocard cevians.

    For the first point the cevian at p_i is side p_i -> p_{i+1} turned by
    ``omega`` towards the interior; for the second it is p_i -> p_{i-1} turned
    the other way.
    """
    if omega is None:
        omega = brocard_angle(tri)
    sense = np.sign(signed_area(tri))[..., None]
    turn = (sense * np.asarray(omega)[..., None]) if which == 1 else (-sense * np.asarray(omega)[..., None])
    shift = -1 if which == 1 else 1
    sides = np.roll(tri, shift, axis=-2) - tri
    return tri, rotate(sides, turn)


def _unit_normals(directions):
    n = np.stack([-directions[..., 1], directions[..., 0]], axis=-1)
    return n / np.linalg.norm(n, axis=-1, keepdims=True)


def lines_meet(anchors, directions):
    """Least-squares meeting point of k lines, shapes ``(..., k, 2)``.

    Returns the point and the largest point-to-line distance.
    """
    n = _unit_normals(directions)
    offsets = np.sum(n * anchors, axis=-1)
    M = np.einsum("...ki,...kj->...ij", n, n)
    rhs = np.einsum("...ki,...k->...i", n, offsets)
    x = np.linalg.solve(M, rhs[..., None])[..., 0]
    spread = np.abs(np.sum(n * x[..., None, :], axis=-1) - offsets).max(axis=-1)
    return x, spread


def line_intersection(p, d, q, e):
    """Intersection of lines ``p + s d`` and ``q + u e`` (broadcasting)."""
    p, d, q, e = (np.asarray(v, float) for v in (p, d, q, e))
    den = cross(d, e)
    s = cross(q - p, e) / den
    return p + s[..., None] * d


def brocard_points(tri, check=True):
    """First and second Brocard points by cevian concurrence.

    Each point is the least-squares meeting point of its three rotated cevians.
    With ``check`` the result is compared with the barycentric closed form and a
    warning is logged if they disagree by more than 1e-8 of the diameter.

    Raises
    ------
    DegenerateInput
        If any triangle has (numerically) zero area.
    """
    tri = require_nondegenerate(tri)
    omega = brocard_angle(tri)
    w1, _ = lines_meet(*_cevians(tri, 1, omega))
    w2, _ = lines_meet(*_cevians(tri, 2, omega))
    if check:
        b1, b2 = brocard_points_barycentric(tri)
        gap = np.maximum(np.linalg.norm(w1 - b1, axis=-1), np.linalg.norm(w2 - b2, axis=-1))
        worst = np.max(gap / diameter(tri))
        if worst > 1e-8:
            log.warning("cevian and barycentric Brocard points differ by %.3g (relative)", worst)
    return w1, w2


def cevian_concurrence(tri, which=1):
    """Largest cevian-to-meeting-point distance, relative to the diameter."""
    tri = require_nondegenerate(tri)
    _, spread = lines_meet(*_cevians(tri, which))
    return spread / diameter(tri)


def from_barycentric(tri, weights):
    w = np.asarray(weights, float)
    return np.einsum("...k,...kj->...j", w, tri) / w.sum(axis=-1)[..., None]


def brocard_points_barycentric(tri):
    """Brocard points from barycentrics ``1/b^2:1/c^2:1/a^2`` and ``1/c^2:1/a^2:1/b^2``."""
    tri = require_nondegenerate(tri)
    inv = 1.0 / side_lengths_sq(tri)
    return from_barycentric(tri, np.roll(inv, -1, axis=-1)), from_barycentric(tri, np.roll(inv, -2, axis=-1))


def _concurrence_defect(tri, theta):
    anchors, dirs = _cevians(tri, 1, theta)
    x = line_intersection(anchors[0], dirs[0], anchors[1], dirs[1])
    n = _unit_normals(dirs[2])
    return float(np.dot(n, x - anchors[2]))


def brocard_angle_constructive(tri):
    """Brocard angle as the turning angle at which the three cevians concur.

    Single triangle only.  Root-finds the signed miss distance of the third
    cevian, so it shares nothing with the cotangent identity.
    """
    tri = require_nondegenerate(tri)
    if tri.shape != (3, 2):
        raise GeometryError("brocard_angle_constructive takes a single triangle")
    lo, hi = 1e-12, float(angles(tri).min())
    return brentq(lambda th: _concurrence_defect(tri, th), lo, hi * (1 - 1e-12), xtol=1e-15, rtol=1e-15)


def circumcenter(tri):
    tri = np.asarray(tri, float)
    a = tri[..., 1, :] - tri[..., 0, :]
    b = tri[..., 2, :] - tri[..., 0, :]
    d = 2.0 * cross(a, b)
    aa, bb = np.sum(a * a, axis=-1), np.sum(b * b, axis=-1)
    ux = (b[..., 1] * aa - a[..., 1] * bb) / d
    uy = (a[..., 0] * bb - b[..., 0] * aa) / d
    return tri[..., 0, :] + np.stack([ux, uy], axis=-1)


def triangle_center(tri, k):
    """Kimberling center X_k for k in {2, 3, 6, 182}."""
    if k not in SUPPORTED_CENTERS:
        raise UnsupportedCenter(f"X{k} is not supported; choose from {SUPPORTED_CENTERS}")
    tri = require_nondegenerate(tri)
    if k == 2:
        return tri.mean(axis=-2)
    if k == 3:
        return circumcenter(tri)
    x6 = from_barycentric(tri, side_lengths_sq(tri))
    if k == 6:
        return x6
    return 0.5 * (circumcenter(tri) + x6)


def circumcircle(tri):
    tri = require_nondegenerate(tri)
    c = circumcenter(tri)
    return Circle(c, np.linalg.norm(tri[..., 0, :] - c, axis=-1))


def brocard_circle(tri):
    """Circle on diameter X3 X6; radius 0 for an equilateral triangle."""
    tri = require_nondegenerate(tri)
    x3 = circumcenter(tri)
    x6 = triangle_center(tri, 6)
    return Circle(0.5 * (x3 + x6), 0.5 * np.linalg.norm(x6 - x3, axis=-1))
