"""Circle- and ellipse-mounted triangle families.

Two vertices stay fixed and the third, ``P(t) = (a cos t, b sin t)``, sweeps
the boundary.  The module carries closed forms for the Brocard loci of three
mounts on a circle of radius ``a``:

* center-top: V1 = (0, 0), V2 = (0, a)
* left-top:   V1 = (0, a), V2 = (a, 0)
* antipodal:  V1 = (-a, 0), V2 = (a, 0)

plus the enclosed-area formulas for V1 = (x1, 0), V2 = (-a, 0).

Label conventions.  The sampled loci use vertex-order labels on the triangle
(V1, V2, P) (see :mod:`brocard_loci.geometry`).  With that convention the
center-top and antipodal closed forms carry the same labels, while the
left-top closed forms and the (A1, A2) areas come out swapped: left-top
``which=1`` is the second Brocard point of (V1, V2, P), and ``A1`` is the area
of the second point's locus.  :data:`CLOSED_FORM_LABELS` records this.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from . import geometry
from .errors import DegenerateInput, GeometryError, OutOfRange
from .locus import LocusSamples

log = logging.getLogger(__name__)

#: closed-form label -> vertex-order label on (V1, V2, P)
CLOSED_FORM_LABELS = {
    "center-top": {1: 1, 2: 2},
    "left-top": {1: 2, 2: 1},
    "antipodal": {1: 1, 2: 2},
    "areas": {1: 2, 2: 1},
}


@dataclass(frozen=True)
class MountedFamily:
    """Two fixed vertices and a third on a circle (``b is None``) or ellipse."""

    a: float
    v1: tuple
    v2: tuple
    b: float | None = None

    def __post_init__(self):
        if not self.a > 0 or (self.b is not None and not self.b > 0):
            raise GeometryError("boundary semi-axes must be positive")
        v1 = tuple(float(c) for c in self.v1)
        v2 = tuple(float(c) for c in self.v2)
        if v1 == v2:
            raise GeometryError("fixed vertices must differ")
        object.__setattr__(self, "v1", v1)
        object.__setattr__(self, "v2", v2)

    @property
    def semi_minor(self):
        return self.a if self.b is None else self.b

    def boundary_point(self, t):
        t = np.asarray(t, float)
        return np.stack([self.a * np.cos(t), self.semi_minor * np.sin(t)], axis=-1)

    def triangles(self, t):
        """Triangles (V1, V2, P(t)), shape ``(..., 3, 2)``; no degeneracy check."""
        p = self.boundary_point(t)
        v1 = np.broadcast_to(self.v1, p.shape)
        v2 = np.broadcast_to(self.v2, p.shape)
        return np.stack([v1, v2, p], axis=-2)

    @classmethod
    def center_top(cls, a=1.0):
        return cls(a, (0.0, 0.0), (0.0, a))

    @classmethod
    def left_top(cls, a=1.0):
        return cls(a, (0.0, a), (a, 0.0))

    @classmethod
    def antipodal(cls, a=1.0):
        return cls(a, (-a, 0.0), (a, 0.0))

    @classmethod
    def ellipse_antipodal(cls, a=1.5, b=1.0):
        return cls(a, (-a, 0.0), (a, 0.0), b)

    @classmethod
    def sliding(cls, a=1.0, x1=0.0):
        """V1 = (x1, 0) on the horizontal diameter, V2 = (-a, 0)."""
        if abs(x1) > a:
            raise OutOfRange(f"|x1| = {abs(x1)} exceeds a = {a}")
        return cls(a, (x1, 0.0), (-a, 0.0))


def mounted_triangle(cfg, t):
    """The family member at parameter ``t``.

    Raises
    ------
    DegenerateInput
        If P(t) (nearly) coincides with a fixed vertex or the three are collinear.
    """
    return geometry.require_nondegenerate(cfg.triangles(float(t)))


def _check_which(which):
    if which not in (1, 2):
        raise ValueError(f"which must be 1 or 2, got {which!r}")


def omega_center_top(a, t, which):
    """Closed-form Brocard loci for V1 = (0, 0), V2 = (0, a).

    The first point runs on the circle of radius a/3 about (0, 2a/3); the
    second traces a teardrop.
    """
    _check_which(which)
    t = np.asarray(t, float)
    s, c = np.sin(t), np.cos(t)
    den = 5 - 4 * s
    if which == 1:
        xy = [c / den, (2 - s) / den]
    else:
        xy = [(2 * c - np.sin(2 * t)) / den, (2 * s + np.cos(2 * t)) / den]
    return a * np.stack(xy, axis=-1)


def omega_left_top(a, t, which):
    """Closed-form Brocard loci for V1 = (0, a), V2 = (a, 0).

    The two teardrops are mirror images across the diagonal:
    ``omega_left_top(a, t, 2) == swap_xy(omega_left_top(a, pi/2 - t, 1))``.
    """
    _check_which(which)
    t = np.asarray(t, float)
    s, c = np.sin(t), np.cos(t)
    den = (s - 2) * c - 2 * s + 3
    if which == 1:
        xy = [(s * s + c - s) / den, (1 - c) / den]
    else:
        xy = [(1 - s) / den, (c * c - c + s) / den]
    return a * np.stack(xy, axis=-1)


def omega_antipodal(a, t, which):
    """Closed-form Brocard loci for V1 = (-a, 0), V2 = (a, 0).

    The second locus is the mirror of the first across the y axis, traversed
    backwards: ``omega_antipodal(a, t, 2) == mirror_x(omega_antipodal(a, pi - t, 1))``.
    """
    _check_which(which)
    t = np.asarray(t, float)
    c, c2 = np.cos(t), np.cos(2 * t)
    den = c2 - 9
    if which == 1:
        xy = [(-c2 - 8 * c + 1) / den, (-2 * np.sin(2 * t) - 4 * np.sin(t)) / den]
    else:
        xy = [(-8 * c + c2 - 1) / den, (2 * np.sin(2 * t) - 4 * np.sin(t)) / den]
    return a * np.stack(xy, axis=-1)


def antipodal_quartic(a, p, which):
    """Implicit quartic of the antipodal Brocard loci at points ``p``.

    ``B2(x, y) = a^2 (a^2 - 2 a x - 4 y^2) + 2 a x (x^2 + y^2) - (x^2 + y^2)^2``
    and ``B1(x, y) = B2(-x, y)``.
    """
    _check_which(which)
    p = np.asarray(p, float)
    x, y = p[..., 0], p[..., 1]
    if which == 1:
        x = -x
    r2 = x * x + y * y
    return a * a * (a * a - 2 * a * x - 4 * y * y) + 2 * a * x * r2 - r2 * r2


def displayed_antipodal_quartic(p):
    """The expanded unit-radius quartic ``x^4 - 2x^3 + 2x^2y^2 + 2x - 2xy^2 - 1 + y^4 + 4y^2``.

    Algebraically equal to ``-antipodal_quartic(1, p, 2)``.
    """
    p = np.asarray(p, float)
    x, y = p[..., 0], p[..., 1]
    return x**4 - 2 * x**3 + 2 * y * y * x * x + 2 * x - 2 * y * y * x - 1 + y**4 + 4 * y * y


def analytic_areas(a, x1):
    """Areas ``(A1, A2)`` enclosed by the Brocard loci for V1 = (x1, 0), V2 = (-a, 0).

    Raises
    ------
    OutOfRange
        If ``|x1| > a``.
    """
    if abs(x1) > a:
        raise OutOfRange(f"|x1| = {abs(x1)} exceeds a = {a}")
    common = (3 * a * a + x1 * x1) ** 2 * math.sqrt(4 * a * a + x1 * x1)
    a1 = 4 * (x1 + a) ** 2 * a**5 * math.pi / common
    a2 = (2 * a * a - a * x1 + x1 * x1) * (x1 + a) ** 3 * a * a * math.pi / common
    return a1, a2


def sample_mounted_locus(cfg, which, n, phase=0.0):
    """Brocard-point locus sampled by construction (no closed forms).

    ``t_k = 2 pi (k + phase) / n``.  Degenerate members are skipped and
    recorded in ``LocusSamples.skipped``; a half-step ``phase`` avoids the
    parameters where P(t) hits a fixed vertex on the symmetric mounts.
    """
    _check_which(which)
    if n < 16:
        raise ValueError("n must be at least 16")
    t = 2 * math.pi * (np.arange(n) + phase) / n
    tris = cfg.triangles(t)
    bad = geometry.degenerate_mask(tris)
    if np.any(bad):
        log.info("skipping %d degenerate parameter(s): %s", int(bad.sum()), t[bad])
    good = ~bad
    if not np.any(good):
        raise DegenerateInput("every sampled member is degenerate")
    points = geometry.brocard_points(tris[good])[which - 1]
    return LocusSamples(t[good], points, closed=True, skipped=tuple(float(v) for v in t[bad]))


def sample_both(cfg, n, phase=0.0):
    """Both Brocard loci at once; returns ``(locus1, locus2)``."""
    t = 2 * math.pi * (np.arange(n) + phase) / n
    tris = cfg.triangles(t)
    good = ~geometry.degenerate_mask(tris)
    w1, w2 = geometry.brocard_points(tris[good])
    skipped = tuple(float(v) for v in t[~good])
    return (
        LocusSamples(t[good], w1, closed=True, skipped=skipped),
        LocusSamples(t[good], w2, closed=True, skipped=skipped),
    )
