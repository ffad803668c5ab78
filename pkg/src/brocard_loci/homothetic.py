"""Poncelet 3-periodics of the homothetic ellipse pair.

The outer ellipse has semi-axes (a, b), the inner caustic (a/2, b/2).  Each
3-periodic is the affine image of an equilateral triangle inscribed in the
unit circle, ``P_k = (a cos(t + 2k pi/3), b sin(t + 2k pi/3))``; the closure
residual is checked by :func:`tangency_residuals` rather than assumed.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh
from scipy.optimize import brentq

from . import geometry
from .errors import DegenerateFamily, GeometryError
from .locus import Conic

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class HomotheticPair:
    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise GeometryError("semi-axes must be positive")
        if self.a < self.b:
            raise GeometryError("expected a >= b (major axis along x)")

    @property
    def caustic(self):
        return self.a / 2, self.b / 2

    def require_distinct(self):
        if self.a == self.b:
            raise DegenerateFamily("closed form is singular for a circular pair (a == b)")


def periodic_vertices(pair, t):
    """The 3-periodic at parameter ``t`` (array or scalar), shape ``(..., 3, 2)``."""
    t = np.asarray(t, float)[..., None] + 2 * math.pi * np.arange(3) / 3
    return np.stack([pair.a * np.cos(t), pair.b * np.sin(t)], axis=-1)


def tangency_residuals(pair, tri):
    """How far each side line is from tangency with the caustic.

    For a line ``n . p = h`` and the ellipse x^2/p^2 + y^2/q^2 = 1, tangency
    means ``p^2 n_x^2 + q^2 n_y^2 = h^2``.  Returned relative to ``h^2``,
    shape ``(..., 3)``.
    """
    p, q = pair.caustic
    tri = np.asarray(tri, float)
    d = np.roll(tri, -1, axis=-2) - tri
    n = np.stack([-d[..., 1], d[..., 0]], axis=-1)
    n = n / np.linalg.norm(n, axis=-1, keepdims=True)
    h = np.sum(n * tri, axis=-1)
    return np.abs(p * p * n[..., 0] ** 2 + q * q * n[..., 1] ** 2 - h * h) / (h * h)


def brocard_locus_conic(pair, which):
    """Ellipse traced by the ``which`` Brocard point; ``F = -1`` normalisation."""
    pair.require_distinct()
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    a2, b2 = pair.a**2, pair.b**2
    d = a2 - b2
    A = (7 * a2 * a2 + 6 * a2 * b2 + 3 * b2 * b2) / (a2 * d * d)
    C = (3 * a2 * a2 + 6 * a2 * b2 + 7 * b2 * b2) / (b2 * d * d)
    B = 4 * SQRT3 * (a2 + b2) / (pair.a * pair.b * d)
    return Conic(A, -B if which == 1 else B, C, 0.0, 0.0, -1.0)


def locus_tilt_angle(pair):
    """Angle between the major axes of the two Brocard-point ellipses."""
    pair.require_distinct()
    a2, b2 = pair.a**2, pair.b**2
    return math.atan2(4 * SQRT3 * (a2 + b2) * pair.a * pair.b, 3 * a2 * a2 + 2 * a2 * b2 + 3 * b2 * b2)


def brocard_locus_y_intercept(pair):
    """Positive y where the first Brocard ellipse crosses the y axis."""
    pair.require_distinct()
    a2, b2 = pair.a**2, pair.b**2
    return pair.b * (a2 - b2) / math.sqrt(3 * a2 * a2 + 6 * a2 * b2 + 7 * b2 * b2)


def first_brocard_ratio(pair):
    """``k1 = (a^2 - b^2) / (2 (a^2 + b^2))``, the scale from 3-periodic to T1."""
    pair.require_distinct()
    return (pair.a**2 - pair.b**2) / (2 * (pair.a**2 + pair.b**2))


def t1_vertex(pair, t, i):
    """Vertex ``i`` of the first Brocard triangle via ``P'_i = k1 Rx P_{sigma(i)}``.

    ``sigma = (2, 3, 1)`` and ``Rx(x, y) = (-x, y)``.  The result is vertex
    ``i % 3`` (0-based) of :func:`brocard_loci.brocard_triangles.first_brocard_triangle`.
    """
    if i not in (1, 2, 3):
        raise ValueError("i must be 1, 2 or 3")
    k1 = first_brocard_ratio(pair)
    src = periodic_vertices(pair, t)[..., i % 3, :]
    return k1 * src * np.array([-1.0, 1.0])


def t1_locus_axes(pair):
    k1 = first_brocard_ratio(pair)
    return pair.a * k1, pair.b * k1


def t1_area(pair):
    if pair.a == pair.b:
        return 0.0
    a2, b2 = pair.a**2, pair.b**2
    return 3 * SQRT3 * pair.a * pair.b * (a2 - b2) ** 2 / (16 * (a2 + b2) ** 2)


def periodic_area(pair):
    """Conserved 3-periodic area, ``3 sqrt(3) a b / 4``."""
    return 3 * SQRT3 * pair.a * pair.b / 4


def similarity_ratio(pair):
    pair.require_distinct()
    return 2 * (pair.a**2 + pair.b**2) / (pair.a**2 - pair.b**2)


def circumradius_sq(pair, t):
    a2, b2 = pair.a**2, pair.b**2
    t = np.asarray(t, float)
    return (-((a2 - b2) ** 3) * np.cos(6 * t) + (a2 + b2) * (a2 * a2 + 14 * a2 * b2 + b2 * b2)) / (32 * a2 * b2)


def brocard_circle_area_ratio(pair):
    """Circumcircle area over Brocard-circle area, ``4 (a^2+b^2)^2 / (a^2-b^2)^2``."""
    pair.require_distinct()
    a2, b2 = pair.a**2, pair.b**2
    return 4 * (a2 + b2) ** 2 / (a2 - b2) ** 2


def homothetic_brocard_circle_conic(pair):
    """Axis-aligned ellipse with the T1 vertex-locus semi-axes; ``F = -1``."""
    pair.require_distinct()
    a2, b2 = pair.a**2, pair.b**2
    num = 4 * (a2 + b2) ** 2
    return Conic(num / (a2 * (a2 - b2) ** 2), 0.0, num / (b2 * (a2 - b2) ** 2), 0.0, 0.0, -1.0)


def _caustic_excess(ratio):
    """Max of the caustic form (2x/a)^2 + (2y/b)^2 over the first Brocard ellipse, minus 1 (b = 1)."""
    pair = HomotheticPair(ratio, 1.0)
    caustic = np.diag([4 / pair.a**2, 4 / pair.b**2])
    locus = brocard_locus_conic(pair, 1).quadratic_form
    # max of x'Qx subject to x'Mx = 1 is the top generalised eigenvalue of (Q, M)
    return eigh(caustic, locus, eigvals_only=True)[-1] - 1.0


def _intercept_excess(ratio):
    pair = HomotheticPair(ratio, 1.0)
    # y-intercept of the conic itself (x = 0 gives C y^2 = 1)
    return 1.0 / math.sqrt(brocard_locus_conic(pair, 1).C) - pair.b / 2


def special_ratio_roots():
    """Aspect ratios a/b where the Brocard ellipses touch the caustic, and where
    they cross the y axis at the caustic's top vertex ``b/2``.

    Both are found numerically with Brent's method; the second has the closed
    form :func:`intercept_ratio_closed_form`.
    """
    r_tangency = brentq(_caustic_excess, 1.5, 3.0, xtol=1e-15, rtol=1e-15)
    r_intercept = brentq(_intercept_excess, 2.0, 6.0, xtol=1e-15, rtol=1e-15)
    return r_tangency, r_intercept


def intercept_ratio_closed_form():
    """Root of ``r^4 - 14 r^2 - 3 = 0``: ``sqrt(7 + 2 sqrt(13))``."""
    return math.sqrt(7 + 2 * math.sqrt(13))


def x182_locus(pair, t):
    """Brocard-circle centre X182 of the 3-periodics at parameters ``t``."""
    return geometry.triangle_center(periodic_vertices(pair, t), 182)
