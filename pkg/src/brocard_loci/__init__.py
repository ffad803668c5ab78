"""Brocard points, Brocard triangles and their loci over triangle families."""

from .errors import (
    DegenerateFamily,
    DegenerateFit,
    DegenerateInput,
    GeometryError,
    OpenCurveError,
    OutOfRange,
    PorismClosureError,
    UnsupportedCenter,
)
from .geometry import brocard_angle, brocard_circle, brocard_points, triangle_center
from .locus import Conic, LocusSamples, circle_fit, fit_conic, green_area

__all__ = [
    "Conic",
    "DegenerateFamily",
    "DegenerateFit",
    "DegenerateInput",
    "GeometryError",
    "LocusSamples",
    "OpenCurveError",
    "OutOfRange",
    "PorismClosureError",
    "UnsupportedCenter",
    "brocard_angle",
    "brocard_circle",
    "brocard_points",
    "circle_fit",
    "fit_conic",
    "green_area",
    "triangle_center",
]
