import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

coordinate = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def _well_shaped(tri, min_angle=math.radians(5)):
    """Reject near-degenerate draws: every angle at least ``min_angle``."""
    a = np.asarray(tri)
    for i in range(3):
        u = a[(i + 1) % 3] - a[i]
        v = a[(i + 2) % 3] - a[i]
        nu, nv = np.linalg.norm(u), np.linalg.norm(v)
        if nu < 1e-3 or nv < 1e-3:
            return False
        cos = np.clip(u @ v / (nu * nv), -1, 1)
        if math.acos(cos) < min_angle:
            return False
    return True


triangles = (
    st.lists(st.tuples(coordinate, coordinate), min_size=3, max_size=3)
    .map(lambda pts: np.array(pts, dtype=float))
    .filter(_well_shaped)
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_triangles(rng, count):
    """``count`` well-shaped triangles with coordinates in [-5, 5]."""
    out = []
    while len(out) < count:
        tri = rng.uniform(-5, 5, size=(3, 2))
        if _well_shaped(tri):
            out.append(tri)
    return np.array(out)


# one line per acceptance criterion, collected by tests/test_acceptance.py
CRITERION_RESULTS = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for key, value in report.user_properties:
        if key == "criterion":
            CRITERION_RESULTS[value] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERION_RESULTS):
        status = "PASS" if CRITERION_RESULTS[k] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d}: {status}")
