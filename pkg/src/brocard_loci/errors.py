"""Exception hierarchy shared by all modules."""


class GeometryError(ValueError):
    """Base class for invalid geometric input or output."""


class DegenerateInput(GeometryError):
    """A triangle (or family member) has (numerically) zero area."""


class UnsupportedCenter(GeometryError):
    pass


class OutOfRange(GeometryError):
    pass


class DegenerateFamily(GeometryError):
    """The family parameters make a closed form singular (e.g. a == b)."""


class DegenerateFit(GeometryError):
    pass


class OpenCurveError(GeometryError):
    pass


class PorismClosureError(ArithmeticError):
    """A Poncelet orbit failed to close within tolerance."""
