"""Matplotlib figures of the families and their loci, written as SVG."""

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.patches import Circle as CirclePatch  # noqa: E402
from matplotlib.patches import Ellipse  # noqa: E402

from . import brocard_triangles as bt  # noqa: E402
from . import geometry, homothetic, mounted, porism, tracking  # noqa: E402
from .locus import green_area  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.titlesize": 9,
    "lines.linewidth": 1.0,
    "svg.fonttype": "none",
    "svg.hashsalt": "brocard-loci",
}

OMEGA1 = "tab:red"
OMEGA2 = "tab:green"
TRIANGLE = "tab:blue"
DERIVED = "tab:orange"


def new_axes(ax=None, size=5.0):
    if ax is None:
        fig, ax = plt.subplots(figsize=(size, size))
    ax.set_aspect("equal")
    ax.axis("off")
    return ax


def save_svg(fig, path):
    with matplotlib.rc_context(STYLE):
        fig.savefig(path, format="svg", metadata={"Date": None}, bbox_inches="tight")
    plt.close(fig)


def _closed(xy):
    return np.vstack([xy, xy[:1]])


def _triangle(ax, tri, color=TRIANGLE, **kw):
    ax.plot(*_closed(tri).T, color=color, **kw)


def _boundary(ax, width, height, center=(0.0, 0.0), **kw):
    kw.setdefault("edgecolor", "black")
    ax.add_patch(Ellipse(center, 2 * width, 2 * height, fill=False, **kw))


def draw_mounted(ax, fam, n=720, sample_t=None):
    _boundary(ax, fam.a, fam.semi_minor)
    l1, l2 = mounted.sample_both(fam, n, phase=0.5)
    ax.plot(*_closed(l1.xy).T, color=OMEGA1, label="W1")
    ax.plot(*_closed(l2.xy).T, color=OMEGA2, label="W2")
    ax.plot(*np.array([fam.v1, fam.v2]).T, "ko", ms=3)
    if sample_t is not None:
        _triangle(ax, mounted.mounted_triangle(fam, sample_t))
    return l1, l2


def draw_homothetic(ax, pair, n=360, t=0.3):
    _boundary(ax, pair.a, pair.b)
    _boundary(ax, *pair.caustic, edgecolor="gray")
    tris = homothetic.periodic_vertices(pair, 2 * math.pi * np.arange(n) / n)
    w1, w2 = geometry.brocard_points(tris)
    ax.plot(*_closed(w1).T, color=OMEGA1, label="W1")
    ax.plot(*_closed(w2).T, color=OMEGA2, label="W2")
    a1, b1 = homothetic.t1_locus_axes(pair)
    _boundary(ax, a1, b1, edgecolor=DERIVED, linestyle="--")
    tri = homothetic.periodic_vertices(pair, t)
    _triangle(ax, tri)
    _triangle(ax, bt.first_brocard_triangle(tri), color=DERIVED)


def draw_porism(ax, cfg, t=0.7):
    center, R, _ = porism.porism_frame(cfg)
    ax.add_patch(CirclePatch(center, R, fill=False, edgecolor="black"))
    _boundary(ax, cfg.a, cfg.b)
    ax.plot(*cfg.foci.T, "ko", ms=3)
    tri = porism.porism_triangle(cfg, t)
    _triangle(ax, tri)
    circle = geometry.brocard_circle(tri)
    ax.add_patch(CirclePatch(circle.center, circle.radius, fill=False, edgecolor="tab:green"))
    styles = {"first": ("o", DERIVED), "second": ("s", "tab:purple"), "seventh": ("^", "tab:brown")}
    for kind, (marker, color) in styles.items():
        verts = bt.brocard_triangle(tri, kind)
        _triangle(ax, verts, color=color, linewidth=0.6)
        ax.plot(*verts.T, marker, color=color, ms=3, label=kind)


def render_family(family, path, n=720, **params):
    """One SVG with the family's boundary conics, a sample member and its loci."""
    fam = tracking.build_family(family, **params)
    ax = new_axes()
    if isinstance(fam, mounted.MountedFamily):
        sample_t = math.pi / 6 if family == "center-top" else 2.0
        draw_mounted(ax, fam, n, sample_t)
        if family == "center-top":
            s = math.sqrt(3) / 6
            eq = fam.a * np.array([[s, 0.5], [-s, 0.5], [0.0, 1.0]])
            _triangle(ax, eq, color=DERIVED)
    elif isinstance(fam, homothetic.HomotheticPair):
        draw_homothetic(ax, fam, n)
    else:
        draw_porism(ax, fam)
    ax.set_title(family)
    ax.autoscale_view()
    save_svg(ax.figure, path)


def sweep_panels(a=1.0, count=16, n=1024):
    """Loci and areas for V1 = (x1, 0), V2 = (-a, 0) with ``count`` values of x1 in [0, a]."""
    panels = []
    labels = mounted.CLOSED_FORM_LABELS["areas"]
    for x1 in np.linspace(0.0, a, count):
        fam = mounted.MountedFamily.sliding(a, float(x1))
        loci = mounted.sample_both(fam, n, phase=0.5)
        disk = math.pi * a * a
        analytic = mounted.analytic_areas(a, float(x1))
        measured = tuple(abs(green_area(loci[labels[k] - 1])) for k in (1, 2))
        panels.append({
            "x1": float(x1),
            "loci": loci,
            "area_ratio": tuple(m / disk for m in measured),
            "analytic_ratio": tuple(v / disk for v in analytic),
        })
    return panels


def render_sweep(path, a=1.0, count=16, n=1024):
    """Multi-panel SVG of the Brocard loci as V1 slides along the diameter."""
    panels = sweep_panels(a, count, n)
    cols = math.ceil(math.sqrt(count))
    rows = math.ceil(count / cols)
    fig, axes = plt.subplots(rows, cols, figsize=(2.2 * cols, 2.4 * rows))
    for ax, panel in zip(np.ravel(axes), panels):
        new_axes(ax)
        _boundary(ax, a, a)
        l1, l2 = panel["loci"]
        ax.plot(*_closed(l1.xy).T, color=OMEGA1)
        ax.plot(*_closed(l2.xy).T, color=OMEGA2)
        (r1, r2), (e1, e2) = panel["area_ratio"], panel["analytic_ratio"]
        ax.set_title(
            f"x1={panel['x1']:.3f}\nA1/pi a^2={r1:.4f} ({e1:.4f})\nA2/pi a^2={r2:.4f} ({e2:.4f})",
            fontsize=6,
        )
        ax.set_xlim(-1.05 * a, 1.05 * a)
        ax.set_ylim(-1.05 * a, 1.05 * a)
    for ax in np.ravel(axes)[len(panels):]:
        ax.axis("off")
    save_svg(fig, path)
    return panels
