"""The Brocard porism: 3-periodics between a fixed circumcircle and a fixed
Brocard inellipse with semi-axes (a, b), major axis on x, centred at the origin.

Every member has its Brocard points at the inellipse foci ``(+-c, 0)``,
``c = sqrt(a^2 - b^2)``.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import brocard_triangles as bt
from . import geometry
from .errors import GeometryError, PorismClosureError
from .locus import circle_fit

CLOSURE_RTOL = 1e-9


@dataclass(frozen=True)
class PorismConfig:
    a: float
    b: float

    def __post_init__(self):
        if not (self.a >= self.b > 0):
            raise GeometryError("need a >= b > 0")

    @property
    def c(self):
        return math.sqrt(self.a**2 - self.b**2)

    @property
    def delta1(self):
        return math.sqrt(4 * self.a**2 - self.b**2)

    @property
    def foci(self):
        return np.array([[-self.c, 0.0], [self.c, 0.0]])


def porism_frame(cfg):
    """Circumcenter, circumradius and Brocard angle of the family."""
    center = np.array([0.0, -cfg.c * cfg.delta1 / cfg.b])
    R = 2 * cfg.a**2 / cfg.b
    omega = math.atan2(cfg.b, cfg.delta1)
    return center, R, omega


def _next_vertex(cfg, q, center):
    """Follow the tangent from ``q`` that keeps the inellipse on the left."""
    u, v = q[0] / cfg.a, q[1] / cfg.b
    rho = math.hypot(u, v)
    if rho <= 1:
        raise GeometryError("starting point is not outside the inellipse")
    base, spread = math.atan2(v, u), math.acos(1 / rho)
    for phi in (base + spread, base - spread):
        touch = np.array([cfg.a * math.cos(phi), cfg.b * math.sin(phi)])
        d = touch - q
        if geometry.cross(d, -q) > 0:
            s = -2 * np.dot(d, q - center) / np.dot(d, d)
            return q + s * d
    raise GeometryError("no counterclockwise tangent found")  # unreachable for rho > 1


def porism_triangle(cfg, theta, return_closure=False):
    """Counterclockwise family member starting at ``center + R (cos theta, sin theta)``.

    Raises
    ------
    PorismClosureError
        If the fourth tangent-chord step misses the start by more than
        ``CLOSURE_RTOL * R``.
    """
    center, R, _ = porism_frame(cfg)
    q = center + R * np.array([math.cos(theta), math.sin(theta)])
    pts = [q]
    for _ in range(3):
        pts.append(_next_vertex(cfg, pts[-1], center))
    closure = float(np.linalg.norm(pts[3] - pts[0]))
    if closure > CLOSURE_RTOL * R:
        raise PorismClosureError(f"orbit misses its start by {closure:.3g} (R = {R:.6g})")
    tri = np.array(pts[:3])
    return (tri, closure) if return_closure else tri


def porism_family(cfg, n, return_closure=False):
    """``n`` members at evenly spaced starting angles; shape ``(n, 3, 2)``."""
    thetas = 2 * math.pi * np.arange(n) / n
    members = [porism_triangle(cfg, th, return_closure=True) for th in thetas]
    tris = np.array([m[0] for m in members])
    if return_closure:
        return tris, np.array([m[1] for m in members])
    return tris


def _drift(points):
    """Largest distance of any point from the first one."""
    pts = np.asarray(points, float).reshape(-1, 2)
    return float(np.max(np.linalg.norm(pts - pts[0], axis=1)))


def _collinearity(p, q, r):
    """Twice the triangle area ``p q r``, the collinearity test quantity."""
    return np.abs(geometry.cross(q - p, r - p))


def porism_observations(cfg, n=128):
    """Measure the Brocard-triangle claims over ``n`` family members.

    Returns a dict of measured quantities:

    ``circle_drift``
        movement of the family's Brocard circle (centre and radius)
    ``on_circle``
        worst distance of a T1, T2 or T7 vertex from the first member's Brocard circle
    ``t2_brocard_drift``
        movement of each Brocard point of T2
    ``collinearity``
        worst |cross| for the triples (W1, X6 of T2, W1 of T2) and (W2, X6 of T2, W2 of T2)
    ``c1_fit``
        circle fitted to both Brocard points of T1: (center, radius, rms)
    ``foci_error``
        worst distance of the family's Brocard points from the inellipse foci
    """
    if cfg.a == cfg.b:
        raise GeometryError("observations need a non-circular inellipse (a > b)")
    tris = porism_family(cfg, n)
    circles = geometry.brocard_circle(tris)
    ref_center, ref_radius = circles.center[0], circles.radius[0]
    circle_drift = max(_drift(circles.center), float(np.ptp(circles.radius)))

    on_circle = {}
    for kind in bt.KINDS:
        verts = bt.brocard_triangle(tris, kind)
        dist = np.linalg.norm(verts - ref_center, axis=-1)
        on_circle[kind] = float(np.max(np.abs(dist - ref_radius)))

    w1, w2 = geometry.brocard_points(tris)
    t2 = bt.second_brocard_triangle(tris)
    q1, q2 = geometry.brocard_points(t2)
    x6_t2 = geometry.triangle_center(t2, 6)
    collinearity = float(max(np.max(_collinearity(w1, x6_t2, q1)), np.max(_collinearity(w2, x6_t2, q2))))

    t1 = bt.first_brocard_triangle(tris)
    r1, r2 = geometry.brocard_points(t1)
    c1 = circle_fit(np.concatenate([r1, r2]))

    f0, f1 = cfg.foci
    direct = np.maximum(np.linalg.norm(w1 - f0, axis=-1), np.linalg.norm(w2 - f1, axis=-1))
    swapped = np.maximum(np.linalg.norm(w1 - f1, axis=-1), np.linalg.norm(w2 - f0, axis=-1))
    foci_error = float(np.max(np.minimum(direct, swapped)))
    return {
        "circle_drift": circle_drift,
        "brocard_circle": (ref_center, float(ref_radius)),
        "on_circle": on_circle,
        "t2_brocard_drift": (_drift(q1), _drift(q2)),
        "collinearity": collinearity,
        "c1_fit": c1,
        "foci_error": foci_error,
    }
