"""First, second and seventh Brocard triangles.

* T1: vertex i is where the first-point cevian of the next vertex meets the
  second-point cevian of the vertex after it.
* T2: second intersections of the symmedians P_i X6 with the Brocard circle.
* T7: second intersections of the lines P_i X3 with the Brocard circle.

Since X3 and X6 are antipodal on the Brocard circle, the T2 vertex on line
P_i X6 is also the foot of the perpendicular from X3, and symmetrically for
T7; the tests use that as an oracle.
"""

import logging

import numpy as np

from . import geometry

log = logging.getLogger(__name__)

KINDS = ("first", "second", "seventh")


def first_brocard_triangle(tri):
    """T1 by line intersections.  An equilateral input collapses to its centroid."""
    tri = geometry.require_nondegenerate(tri)
    w1, w2 = geometry.brocard_points(tri)
    nxt = np.roll(tri, -1, axis=-2)  # P2, P3, P1
    after = np.roll(tri, -2, axis=-2)  # P3, P1, P2
    w1 = w1[..., None, :]
    w2 = w2[..., None, :]
    eq = geometry.is_equilateral(tri)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = geometry.line_intersection(nxt, w1 - nxt, after, w2 - after)
    if np.any(eq):
        log.debug("equilateral input: first Brocard triangle collapses to the centroid")
        centroid = np.broadcast_to(tri.mean(axis=-2)[..., None, :], out.shape)
        out = np.where(eq[..., None, None], centroid, out)
    return out


def second_circle_hit(anchor, direction, center, radius):
    """The intersection of ``anchor + s direction`` with a circle farthest from ``anchor``.

    ``anchor`` is expected on (or very near) the circle.  Roots come from the
    cancellation-free quadratic form; a tangent line returns the touching point.
    """
    anchor, direction, center = (np.asarray(v, float) for v in (anchor, direction, center))
    radius = np.asarray(radius, float)
    off = anchor - center
    qa = np.sum(direction * direction, axis=-1)
    qb = 2 * np.sum(direction * off, axis=-1)
    qc = np.sum(off * off, axis=-1) - radius * radius
    disc = np.maximum(qb * qb - 4 * qa * qc, 0.0)
    q = -0.5 * (qb + np.where(qb >= 0, 1.0, -1.0) * np.sqrt(disc))
    with np.errstate(divide="ignore", invalid="ignore"):
        s1 = np.where(qa != 0, q / qa, 0.0)
        s2 = np.where(q != 0, qc / q, 0.0)
    s = np.where(np.abs(s1) >= np.abs(s2), s1, s2)
    tangent = disc <= 1e-24 * qa * np.maximum(radius * radius, 1e-300)
    if np.any(tangent):
        log.info("cevian tangent to the Brocard circle; vertex set to the touching point")
    return anchor + s[..., None] * direction


def _line_circle_triangle(tri, pivot):
    circle = geometry.brocard_circle(tri)
    piv = np.broadcast_to(pivot[..., None, :], tri.shape)
    out = second_circle_hit(piv, tri - piv, circle.center[..., None, :], circle.radius[..., None])
    eq = geometry.is_equilateral(tri)
    if np.any(eq):
        centroid = np.broadcast_to(tri.mean(axis=-2)[..., None, :], out.shape)
        out = np.where(eq[..., None, None], centroid, out)
    return out


def second_brocard_triangle(tri):
    tri = geometry.require_nondegenerate(tri)
    return _line_circle_triangle(tri, geometry.triangle_center(tri, 6))


def seventh_brocard_triangle(tri):
    tri = geometry.require_nondegenerate(tri)
    return _line_circle_triangle(tri, geometry.triangle_center(tri, 3))


def line_circle_brocard_vertex(tri, kind, i):
    """Vertex ``i`` (1-based) of the second or seventh Brocard triangle."""
    if i not in (1, 2, 3):
        raise ValueError("i must be 1, 2 or 3")
    if kind == "second":
        return second_brocard_triangle(tri)[..., i - 1, :]
    if kind == "seventh":
        return seventh_brocard_triangle(tri)[..., i - 1, :]
    raise ValueError(f"kind must be 'second' or 'seventh', got {kind!r}")


def brocard_triangle(tri, kind):
    if kind == "first":
        return first_brocard_triangle(tri)
    if kind == "second":
        return second_brocard_triangle(tri)
    if kind == "seventh":
        return seventh_brocard_triangle(tri)
    raise ValueError(f"unknown Brocard triangle {kind!r}; choose from {KINDS}")


def similarity_fit(src, dst):
    """Best linear map (after centring) taking triangle ``src`` to ``dst``.

    Returns the singular values and determinant of the 2x2 map.  Equal singular
    values mean a similarity; a negative determinant means it reverses
    orientation.
    """
    src = np.asarray(src, float)
    dst = np.asarray(dst, float)
    s = src - src.mean(axis=-2, keepdims=True)
    d = dst - dst.mean(axis=-2, keepdims=True)
    # dst = s @ L.T in least squares
    L = np.linalg.lstsq(s, d, rcond=None)[0].T
    return np.linalg.svd(L, compute_uv=False), float(np.linalg.det(L))
