import json
import math
import subprocess
import sys

import numpy as np
import pytest

from hypmetrics.analysis import suites as suites_mod
from hypmetrics.cli import main

DISK = '{"shape":"ball","center":[0,0],"radius":1}'
HALF = '{"shape":"half_space","normal":[0,1],"offset":0}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_disk(capsys):
    code, out, _ = run(capsys, "eval", "--domain", DISK, "--pair", "0,0;0.5,0", "--metric", "j,zeta,zeta_prime,h")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "x0,x1,y0,y1,j,zeta,zeta_prime,h"
    vals = [float(v) for v in row.split(",")]
    assert vals[4] == pytest.approx(math.log(2), abs=1e-11)
    assert vals[5] == pytest.approx(math.log(7 / 3), abs=1e-11)
    assert vals[6] == pytest.approx(0.770222520474, abs=1e-11)
    assert vals[7] == pytest.approx(math.log(3), abs=1e-11)
    assert row.split(",")[4] == "0.69314718056"


def test_eval_identical_points(capsys):
    code, out, _ = run(capsys, "eval", "--domain", DISK, "--pair", "0.1,0.2;0.1,0.2", "--metric", "j,j_prime,zeta,zeta_prime")
    assert code == 0
    assert [float(v) for v in out.splitlines()[1].split(",")[4:]] == [0, 0, 0, 0]


def test_eval_half_plane_unbounded_convention(capsys):
    code, out, _ = run(capsys, "eval", "--domain", HALF, "--pair", "0,1;2,3", "--pair", "0.5,0.1;-1,0.4", "--metric", "j,zeta")
    assert code == 0
    for row in out.splitlines()[1:]:
        c = row.split(",")
        assert c[4] == c[5]


def test_eval_pairs_csv_json_and_estimates(tmp_path, capsys):
    pairs = tmp_path / "pairs.csv"
    pairs.write_text("x0,x1,y0,y1\n0,0,0.5,0\n0.1,0.1,-0.2,0.3\n")
    dom = tmp_path / "d.json"
    dom.write_text(DISK)
    code, out, _ = run(capsys, "eval", "--domain", str(dom), "--pairs", str(pairs), "--metric", "zeta,m", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 2
    assert rows[0]["m_estimate"] == pytest.approx(math.log(3), rel=5e-3)
    assert rows[0]["m_resolution"] > 0


def test_eval_writes_out_file(tmp_path, capsys):
    out = tmp_path / "t.csv"
    code, _, _ = run(capsys, "eval", "--domain", DISK, "--pair", "0,0;0.5,0", "--out", str(out))
    assert code == 0 and out.read_text().startswith("x0,x1,y0,y1,j,zeta")


def test_eval_byte_stable(capsys):
    argv = ["eval", "--domain", DISK, "--pair", "0.1,0.3;-0.4,0.2", "--metric", "j,zeta,k"]
    a = run(capsys, *argv)[1]
    b = run(capsys, *argv)[1]
    assert a == b


@pytest.mark.parametrize(
    "argv, code",
    [
        (["eval", "--domain", DISK, "--pair", "0,0;1.5,0"], 3),
        (["eval", "--domain", "{not json", "--pair", "0,0;0.5,0"], 2),
        (["eval", "--domain", '{"shape":"blob"}', "--pair", "0,0;0.5,0"], 2),
        (["eval", "--domain", DISK, "--pair", "0,0,0;0.5,0,0"], 2),
        (["eval", "--domain", DISK, "--pair", "0,0;0.5,0", "--metric", "q"], 2),
        (["eval", "--domain", '{"shape":"annulus","center":[0,0],"r":1,"R":2}', "--pair", "1.5,0;0,1.5", "--metric", "h"], 2),
        (["verify", "--suite", "nope"], 2),
    ],
)
def test_error_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["exit_code"] == code and payload["error"] and payload["message"]


def test_geodesic_csv_and_svg(tmp_path, capsys):
    svg = tmp_path / "g.svg"
    code, out, _ = run(capsys, "geodesic", "--domain", DISK, "--from", "0,0", "--to", "0.5,0", "--density", "m", "--svg", str(svg))
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# value=")
    assert float(lines[0].split("=")[1]) == pytest.approx(math.log(3), rel=5e-3)
    assert lines[1] == "x0,x1"
    text = svg.read_text()
    assert text.startswith("<svg") and "<polyline" in text


def test_balls_svg_radii(tmp_path, capsys):
    svg = tmp_path / "b.svg"
    argv = ["balls", "--domain", DISK, "--center", "0,0", "--s", str(math.log(2)), "--metric", "zeta", "--svg", str(svg)]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    info = json.loads(out)
    assert info["inner_radius"] == pytest.approx(0.25) and info["outer_radius"] == pytest.approx(0.5)
    text = svg.read_text()
    assert 'data-radius="0.25"' in text and 'data-radius="0.5"' in text
    first = text
    run(capsys, *argv)
    assert svg.read_text() == first


def test_balls_large_s_clamps(tmp_path, capsys):
    svg = tmp_path / "b.svg"
    code, _, _ = run(capsys, "balls", "--domain", DISK, "--center", "0,0", "--s", "50", "--metric", "zeta", "--svg", str(svg))
    assert code == 0 and "<polygon" in svg.read_text()


def test_balls_m_warns(tmp_path, capsys):
    svg = tmp_path / "m.svg"
    code, _, err = run(capsys, "balls", "--domain", DISK, "--center", "0,0", "--s", "0.5", "--metric", "m", "--svg", str(svg), "--rays", "8")
    assert code == 0 and "estimate" in err.lower()


def test_balls_point_cloud(tmp_path, capsys):
    svg = tmp_path / "p.svg"
    code, _, _ = run(capsys, "balls", "--domain", DISK, "--center", "0.2,0", "--s", "1", "--metric", "j", "--svg", str(svg), "--point-cloud", "200")
    assert code == 0 and svg.read_text().count("<circle") > 50


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    assert len(out.strip().splitlines()) == 25
    assert out.startswith("lemma2.1")


def test_verify_suite_passes(tmp_path, capsys):
    rpt = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--suite", "prop3.6", "--report", str(rpt))
    assert code == 0
    assert json.loads(out)["ok"] is True
    full = json.loads(rpt.read_text())
    assert full["suites"][0]["theorem"] == "prop3.6" and full["suites"][0]["checked"] > 0


def test_verify_seed_env_override(monkeypatch, capsys):
    monkeypatch.setenv("HYPMETRICS_SEED", "5")
    code, out, _ = run(capsys, "verify", "--suite", "cor4.6", "--pairs", "20", "--seed", "1")
    assert code == 0 and json.loads(out)["seed"] == 5


def test_verify_corrupted_metric_exits_one(monkeypatch, capsys):
    real = suites_mod.METRICS["zeta"]
    monkeypatch.setitem(suites_mod.METRICS, "zeta", lambda D, x, y: 3.0 * np.asarray(real(D, x, y)))
    code, out, _ = run(capsys, "verify", "--suite", "prop3.6")
    assert code == 1
    rep = json.loads(out)
    assert rep["total_violations"] > 0
    assert rep["suites"][0]["violations"][0]["x"]


def test_verify_is_byte_stable(capsys):
    a = run(capsys, "verify", "--suite", "thm3.2,prop4.9", "--pairs", "30")[1]
    b = run(capsys, "verify", "--suite", "thm3.2,prop4.9", "--pairs", "30")[1]
    assert a == b


def test_uniformity_command(capsys):
    code, out, _ = run(capsys, "uniformity", "--domain", DISK, "--pairs", "3")
    assert code == 0
    rep = json.loads(out)
    assert rep["pairs_tested"] == 3 and 1 <= rep["max_ratio"] <= 2.04


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "hypmetrics.cli", "eval", "--domain", DISK, "--pair", "0,0;0.5,0"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[1].endswith("0.69314718056,0.847297860387")
