"""Family-agnostic locus tools.

Sampled loci, algebraic conic and circle fitting, Green's-theorem areas,
implicit residuals and CSV round-tripping.
"""

import csv
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import simpson

from .errors import DegenerateFit, GeometryError, OpenCurveError

#: rms residual above this times (bounding-box diagonal)^2 marks a locus as non-conic.
NON_CONIC_RATIO = 1e-4


@dataclass(frozen=True)
class LocusSamples:
    """Ordered samples ``(t, x, y)`` of one tracked point over a family.

    ``skipped`` holds parameter values dropped because the family member was
    degenerate there.
    """

    t: np.ndarray
    xy: np.ndarray
    closed: bool = True
    period: float = 2 * math.pi
    skipped: tuple = field(default=())

    def __post_init__(self):
        t = np.asarray(self.t, float)
        xy = np.asarray(self.xy, float).reshape(-1, 2)
        if t.shape != (len(xy),):
            raise GeometryError("t and xy lengths differ")
        if len(t) > 1 and np.any(np.diff(t) <= 0):
            raise GeometryError("t must be strictly increasing")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "xy", xy)

    def __len__(self):
        return len(self.t)

    @property
    def x(self):
        return self.xy[:, 0]

    @property
    def y(self):
        return self.xy[:, 1]

    def is_uniform(self, rtol=1e-9):
        """True if samples are evenly spaced and wrap around one full period."""
        if len(self.t) < 2:
            return False
        h = self.period / len(self.t)
        return bool(np.allclose(np.diff(self.t), h, rtol=rtol, atol=0))

    def to_csv(self, path):
        """Write ``t,x,y`` rows with round-trip float text; ``path`` may be an open text stream."""
        if hasattr(path, "write"):
            self._write_rows(path)
            return
        with open(path, "w", newline="") as fh:
            self._write_rows(fh)

    def _write_rows(self, fh):
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t", "x", "y"])
        for t, (x, y) in zip(self.t, self.xy):
            writer.writerow([repr(float(t)), repr(float(x)), repr(float(y))])

    @classmethod
    def from_csv(cls, path, closed=True):
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            if header != ["t", "x", "y"]:
                raise GeometryError(f"unexpected CSV header {header}")
            rows = [[float(v) for v in row] for row in reader]
        arr = np.array(rows, dtype=float).reshape(-1, 3)
        return cls(arr[:, 0], arr[:, 1:], closed=closed)


def _xy(points):
    if isinstance(points, LocusSamples):
        return points.xy
    return np.asarray(points, float).reshape(-1, 2)


@dataclass(frozen=True)
class Conic:
    """Implicit conic ``A x^2 + B xy + C y^2 + D x + E y + F = 0``."""

    A: float
    B: float
    C: float
    D: float
    E: float
    F: float

    @classmethod
    def from_vector(cls, v):
        return cls(*(float(c) for c in v))

    @property
    def vector(self):
        return np.array([self.A, self.B, self.C, self.D, self.E, self.F])

    def __call__(self, x, y):
        return self.A * x * x + self.B * x * y + self.C * y * y + self.D * x + self.E * y + self.F

    def normalized(self):
        """Unit coefficient norm; first nonzero of (A, B, C) made positive."""
        v = self.vector
        v = v / np.linalg.norm(v)
        lead = next((c for c in v[:3] if abs(c) > 1e-14), v[0])
        return Conic.from_vector(v if lead > 0 else -v)

    def with_unit_constant(self):
        """Scale so that F = -1 (unchanged if F is zero)."""
        if self.F == 0:
            return self
        return Conic.from_vector(self.vector / -self.F)

    @property
    def discriminant(self):
        return self.B * self.B - 4 * self.A * self.C

    @property
    def quadratic_form(self):
        return np.array([[self.A, self.B / 2], [self.B / 2, self.C]])

    @property
    def matrix(self):
        return np.array(
            [
                [self.A, self.B / 2, self.D / 2],
                [self.B / 2, self.C, self.E / 2],
                [self.D / 2, self.E / 2, self.F],
            ]
        )

    def center(self):
        return np.linalg.solve(self.quadratic_form, [-self.D / 2, -self.E / 2])

    def geometry(self):
        """Center, semi-axes (major first) and major-axis direction of a central ellipse."""
        c = self.center()
        k = -(self(c[0], c[1]))
        w, V = np.linalg.eigh(self.quadratic_form)
        if k * w[0] <= 0 or k * w[1] <= 0:
            raise DegenerateFit("conic is not a real ellipse")
        axes = np.sqrt(k / w)  # w ascending, so axes descending
        major = V[:, 0]
        tilt = math.atan2(major[1], major[0]) % math.pi
        return c, (float(axes[0]), float(axes[1])), tilt

    def classify(self, rtol=1e-9):
        v = self.normalized()
        scale = max(abs(v.A), abs(v.B), abs(v.C))
        if scale < rtol:
            return "degenerate"
        det3 = np.linalg.det(v.matrix)
        if abs(det3) < rtol * scale:
            return "degenerate"
        disc = v.discriminant
        if abs(disc) < rtol * scale * scale:
            return "parabola"
        if disc > 0:
            return "hyperbola"
        # real ellipse iff the constant at the center has sign opposite to A
        if det3 * v.A > 0:
            return "degenerate"
        if abs(v.B) < rtol * scale and abs(v.A - v.C) < rtol * scale:
            return "circle"
        return "ellipse"


@dataclass(frozen=True)
class FitReport:
    conic: Conic
    rms_residual: float
    classification: str
    center: np.ndarray | None
    semi_axes: tuple | None
    tilt: float | None
    is_conic: bool


def implicit_residual(conic, points):
    """Max and rms of the unit-normalised conic evaluated at ``points``."""
    xy = _xy(points)
    q = conic.normalized()
    r = np.abs(q(xy[:, 0], xy[:, 1]))
    return float(r.max()), float(np.sqrt(np.mean(r * r)))


def _normalizing_transform(xy):
    mu = xy.mean(axis=0)
    s = np.sqrt(2) / np.mean(np.linalg.norm(xy - mu, axis=1))
    return mu, s


def fit_conic(points, class_rtol=1e-7):
    """Algebraic least-squares conic through ``points`` (at least 6).

    The coefficient vector is the right singular vector of the monomial design
    matrix with the smallest singular value, computed on centred and scaled
    coordinates and mapped back.

    Raises
    ------
    DegenerateFit
        Fewer than 6 points, collinear points, or a rank-deficient design
        (more than one conic fits exactly).
    """
    xy = _xy(points)
    if len(xy) < 6:
        raise DegenerateFit("need at least 6 points for a conic fit")
    mu, s = _normalizing_transform(xy)
    u, v = ((xy - mu) * s).T
    design = np.column_stack([u * u, u * v, v * v, u, v, np.ones_like(u)])
    _, sv, vt = np.linalg.svd(design, full_matrices=False)
    if sv[-2] <= 1e-10 * sv[0]:
        raise DegenerateFit("design matrix is rank deficient (collinear or too few distinct points)")
    a, b, c, d, e, f = vt[-1]
    # substitute u = s (x - mx), v = s (y - my)
    mx, my = mu
    A, B, C = a * s * s, b * s * s, c * s * s
    D = -2 * A * mx - B * my + d * s
    E = -2 * C * my - B * mx + e * s
    F = A * mx * mx + B * mx * my + C * my * my - d * s * mx - e * s * my + f
    conic = Conic(A, B, C, D, E, F).normalized()

    rms = implicit_residual(conic, xy)[1]
    diag = float(np.linalg.norm(np.ptp(xy, axis=0)))
    is_conic = rms <= NON_CONIC_RATIO * diag * diag
    kind = conic.classify(class_rtol)
    center = axes = tilt = None
    if kind in ("circle", "ellipse"):
        center, axes, tilt = conic.geometry()
    return FitReport(conic, rms, kind, center, axes, tilt, bool(is_conic))


def circle_fit(points):
    """Algebraic (Kasa) least-squares circle.

    Returns ``(center, radius, rms)`` with ``rms`` the RMS of the radial
    residuals ``|p - center| - radius``.
    """
    xy = _xy(points)
    if len(xy) < 3:
        raise DegenerateFit("need at least 3 points for a circle fit")
    mu = xy.mean(axis=0)
    p = xy - mu
    design = np.column_stack([p, np.ones(len(p))])
    rhs = np.sum(p * p, axis=1)
    sol, _, rank, sv = np.linalg.lstsq(design, rhs, rcond=None)
    if rank < 3 or sv[-1] <= 1e-10 * sv[0]:
        raise DegenerateFit("points are collinear")
    c = sol[:2] / 2
    radius = math.sqrt(sol[2] + c @ c)
    radial = np.linalg.norm(p - c, axis=1) - radius
    return c + mu, radius, float(np.sqrt(np.mean(radial * radial)))


def _spectral_derivative(values, period):
    n = len(values)
    k = np.fft.fftfreq(n, d=period / (2 * math.pi * n))
    spec = np.fft.fft(values) * (1j * k)
    if n % 2 == 0:
        spec[n // 2] = 0  # Nyquist mode has no consistent real derivative
    return np.real(np.fft.ifft(spec))


def _central_derivative(t, values, period):
    tt = np.concatenate([[t[-1] - period], t, [t[0] + period]])
    vv = np.concatenate([[values[-1]], values, [values[0]]])
    return np.gradient(vv, tt)[1:-1]


def green_area(samples, derivatives=None, method="spectral"):
    """Signed area enclosed by a closed sampled curve, ``1/2 \\oint x dy - y dx``.

    Positive for counterclockwise traversal.  The integrand is integrated with
    composite Simpson over one period.

    Parameters
    ----------
    samples : LocusSamples
        Must be flagged closed and cover exactly one period.
    derivatives : array (n, 2), optional
        Exact ``(dx/dt, dy/dt)`` at the sample parameters.
    method : {"spectral", "central"}
        Derivative estimate when ``derivatives`` is not given.  ``"spectral"``
        (FFT) needs a uniform grid and falls back to ``"central"`` otherwise.
    """
    if not samples.closed:
        raise OpenCurveError("green_area needs a closed curve")
    t, x, y = samples.t, samples.x, samples.y
    if derivatives is not None:
        dx, dy = np.asarray(derivatives, float).T
    elif method == "spectral" and samples.is_uniform():
        dx = _spectral_derivative(x, samples.period)
        dy = _spectral_derivative(y, samples.period)
    elif method in ("spectral", "central"):
        dx = _central_derivative(t, x, samples.period)
        dy = _central_derivative(t, y, samples.period)
    else:
        raise ValueError(f"unknown method {method!r}")
    integrand = 0.5 * (x * dy - y * dx)
    tt = np.append(t, t[0] + samples.period)
    return float(simpson(np.append(integrand, integrand[0]), x=tt))
