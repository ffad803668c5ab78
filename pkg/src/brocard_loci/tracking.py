"""Named families and tracked points, shared by the CLI and the figures."""

import math

import numpy as np

from . import brocard_triangles as bt
from . import geometry, homothetic, mounted, porism
from .locus import LocusSamples

FAMILIES = (
    "center-top",
    "left-top",
    "antipodal",
    "ellipse-mounted",
    "custom-mounted",
    "homothetic",
    "porism",
)

MOUNTED = {"center-top", "left-top", "antipodal", "ellipse-mounted", "custom-mounted"}

DEFAULTS = {
    "center-top": {"a": 1.0},
    "left-top": {"a": 1.0},
    "antipodal": {"a": 1.0},
    "ellipse-mounted": {"a": 1.5, "b": 1.0},
    "custom-mounted": {"a": 1.0, "x1": 0.0},
    "homothetic": {"a": 2.0, "b": 1.0},
    "porism": {"a": 1.0, "b": 0.8},
}


def _center(k):
    return lambda tris: geometry.triangle_center(tris, k)


def _vertex(kind, i):
    return lambda tris: bt.brocard_triangle(tris, kind)[..., i, :]


def _derived_brocard(kind, which):
    return lambda tris: geometry.brocard_points(bt.brocard_triangle(tris, kind))[which]


TRACKS = {
    "omega1": lambda tris: geometry.brocard_points(tris)[0],
    "omega2": lambda tris: geometry.brocard_points(tris)[1],
    "x2": _center(2),
    "x3": _center(3),
    "x6": _center(6),
    "x182": _center(182),
    "t1-omega1": _derived_brocard("first", 0),
    "t1-omega2": _derived_brocard("first", 1),
    "t2-omega1": _derived_brocard("second", 0),
    "t2-omega2": _derived_brocard("second", 1),
    "t2-x6": lambda tris: geometry.triangle_center(bt.second_brocard_triangle(tris), 6),
}
for _tag, _kind in (("t1", "first"), ("t2", "second"), ("t7", "seventh")):
    for _i in range(3):
        TRACKS[f"{_tag}-v{_i + 1}"] = _vertex(_kind, _i)


def resolve_params(family, a=None, b=None, x1=None, v1=None, v2=None):
    if family not in DEFAULTS:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    params = dict(DEFAULTS[family])
    for key, val in (("a", a), ("b", b), ("x1", x1), ("v1", v1), ("v2", v2)):
        if val is not None:
            params[key] = val
    return params


def build_family(family, **params):
    """Family object for ``family`` (MountedFamily, HomotheticPair or PorismConfig)."""
    p = resolve_params(family, **params)
    a = p["a"]
    if family == "center-top":
        return mounted.MountedFamily.center_top(a)
    if family == "left-top":
        return mounted.MountedFamily.left_top(a)
    if family == "antipodal":
        return mounted.MountedFamily.antipodal(a)
    if family == "ellipse-mounted":
        return mounted.MountedFamily.ellipse_antipodal(a, p["b"])
    if family == "custom-mounted":
        if "v1" in p or "v2" in p:
            base = mounted.MountedFamily.sliding(a, p["x1"])
            return mounted.MountedFamily(a, p.get("v1", base.v1), p.get("v2", base.v2))
        return mounted.MountedFamily.sliding(a, p["x1"])
    if family == "homothetic":
        return homothetic.HomotheticPair(a, p["b"])
    return porism.PorismConfig(a, p["b"])


def family_triangles(fam, n, phase=0.0):
    """``(t, triangles, skipped_t)`` for ``n`` evenly spaced parameters."""
    t = 2 * math.pi * (np.arange(n) + phase) / n
    if isinstance(fam, mounted.MountedFamily):
        tris = fam.triangles(t)
        bad = geometry.degenerate_mask(tris)
        return t[~bad], tris[~bad], tuple(float(v) for v in t[bad])
    if isinstance(fam, homothetic.HomotheticPair):
        return t, homothetic.periodic_vertices(fam, t), ()
    return t, np.array([porism.porism_triangle(fam, th) for th in t]), ()


def sample_track(family, track, n, phase=0.0, **params):
    if track not in TRACKS:
        raise ValueError(f"unknown track {track!r}; choose from {sorted(TRACKS)}")
    fam = build_family(family, **params)
    t, tris, skipped = family_triangles(fam, n, phase)
    return LocusSamples(t, TRACKS[track](tris), closed=True, skipped=skipped)
