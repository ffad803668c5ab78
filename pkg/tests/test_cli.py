import json
import math

import numpy as np
import pytest

from brocard_loci import cli, homothetic, tracking
from brocard_loci.figures import sweep_panels
from brocard_loci.locus import LocusSamples


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# --- locus -------------------------------------------------------------------------


def test_locus_writes_requested_rows(tmp_path, capsys):
    path = tmp_path / "o.csv"
    code, _, _ = run(capsys, "locus", "--family", "center-top", "--a", "1", "--n", "1024",
                     "--track", "omega1", "--out", str(path))
    assert code == 0
    samples = LocusSamples.from_csv(path)
    assert len(samples.t) == 1024
    d = np.linalg.norm(samples.xy - [0, 2 / 3], axis=1)
    assert np.max(np.abs(d - 1 / 3)) < 1e-9


def test_locus_to_stdout_satisfies_second_ellipse(tmp_path, capsys):
    code, out, _ = run(capsys, "locus", "--family", "homothetic", "--a", "2", "--b", "1", "--track", "omega2")
    assert code == 0
    path = tmp_path / "e2.csv"
    path.write_text(out)
    xy = LocusSamples.from_csv(path).xy
    e2 = homothetic.brocard_locus_conic(homothetic.HomotheticPair(2.0, 1.0), 2)
    assert np.max(np.abs(e2(xy[:, 0], xy[:, 1]))) < 1e-9


def test_porism_second_triangle_brocard_point_is_stationary():
    samples = tracking.sample_track("porism", "t2-omega1", 64, a=1.0, b=0.8)
    assert np.max(np.ptp(samples.xy, axis=0)) < 1e-8


@pytest.mark.parametrize("track", sorted(tracking.TRACKS))
def test_every_track_samples_every_family(track):
    for family in tracking.FAMILIES:
        samples = tracking.sample_track(family, track, 16, phase=0.5)
        assert np.all(np.isfinite(samples.xy))


def test_custom_mount_vertices():
    fam = tracking.build_family("custom-mounted", v1=(0.2, 0.1), v2=(0.0, 1.0))
    assert fam.v1 == (0.2, 0.1) and fam.v2 == (0.0, 1.0)


@pytest.mark.parametrize("argv", [
    ["locus", "--family", "homothetic", "--a", "1", "--b", "2"],
    ["locus", "--family", "custom-mounted", "--x1", "3"],
    ["locus", "--family", "nowhere"],
    ["locus", "--v1", "1;2"],
    ["verify", "--only", "prop99"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


# --- verify ----------------------------------------------------------------------------


def test_verify_group_passes(capsys):
    code, out, _ = run(capsys, "verify", "--only", "prop1")
    assert code == 0
    report = json.loads(out)
    ids = [e["id"] for e in report["entries"]]
    assert "center-top.area-omega1" in ids and "center-top.area-omega2" in ids
    assert report["summary"] == {"pass": len(ids), "fail": 0}
    assert set(report["entries"][0]) >= {"id", "paper_ref", "expected", "measured", "tol", "pass"}


def test_verify_porism_with_parameters(capsys):
    code, out, _ = run(capsys, "verify", "--only", "porism", "--a", "1", "--b", "0.8")
    assert code == 0
    ids = {e["id"] for e in json.loads(out)["entries"]}
    assert any("closure" in i for i in ids)
    assert any("stationary" in i or "drift" in i for i in ids)


def test_verify_failure_exits_1_and_lists_entries(capsys):
    code, _, err = run(capsys, "verify", "--only", "left-top")
    assert code == 1
    assert "FAIL left-top.diagonal-symmetry" in err


def test_verify_is_deterministic(tmp_path, capsys):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for path in (first, second):
        run(capsys, "verify", "--only", "antipodal", "--only", "homothetic-loci", "--out", str(path))
    assert first.read_bytes() == second.read_bytes()


# --- figures ---------------------------------------------------------------------------------


@pytest.mark.parametrize("family", tracking.FAMILIES)
def test_render_writes_svg(tmp_path, capsys, family):
    path = tmp_path / f"{family}.svg"
    code, _, _ = run(capsys, "render", "--family", family, "--n", "128", "--out", str(path))
    assert code == 0
    text = path.read_text()
    assert text.lstrip().startswith("<?xml") and "<svg" in text


def test_render_is_deterministic(tmp_path, capsys):
    paths = [tmp_path / "p1.svg", tmp_path / "p2.svg"]
    for p in paths:
        run(capsys, "render", "--family", "porism", "--out", str(p))
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_sweep_writes_svg_and_reports_areas(tmp_path, capsys):
    path = tmp_path / "sweep.svg"
    code, out, _ = run(capsys, "sweep", "--n", "256", "--out", str(path))
    assert code == 0 and path.exists()
    assert len(out.splitlines()) == 16


def test_sweep_end_panels():
    panels = sweep_panels(1.0, count=16, n=1024)
    assert len(panels) == 16
    first, last = panels[0], panels[-1]
    assert first["x1"] == 0.0 and last["x1"] == 1.0
    for r in last["area_ratio"]:
        assert r == pytest.approx(0.4472, abs=1e-3)
    for measured, analytic in zip(first["area_ratio"], first["analytic_ratio"]):
        assert measured == pytest.approx(analytic, rel=1e-6)
    assert sorted(first["analytic_ratio"]) == pytest.approx([1 / 9, 2 / 9], rel=1e-12)
    # the two end loci are mirror images, so their areas agree
    assert last["area_ratio"][0] == pytest.approx(last["area_ratio"][1], rel=1e-9)
    assert math.isclose(last["analytic_ratio"][0], 1 / math.sqrt(5), rel_tol=1e-12)
