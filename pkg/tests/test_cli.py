import json
import math

import pytest

from railbeam import read_pattern_csv, write_pattern_csv
from railbeam.cli import main


def test_requirements_tables(tmp_path):
    out = tmp_path / "req"
    assert main(["requirements", "--out", str(out)]) == 0
    stopping = (out / "requirements_stopping.csv").read_text().splitlines()
    assert stopping[0] == "vehicle_speed_mph,dry_m,wet_m"
    assert "65.0000,105.0000,210.0000" in stopping
    notification = (out / "requirements_notification.csv").read_text().splitlines()
    assert notification[0] == "train_speed_mph,lead_s,distance_m"
    row30 = [r for r in notification if r.startswith("79.0000,30.0000")]
    assert row30 and abs(float(row30[0].split(",")[2]) - 1059.0) <= 1.0
    assert (out / "requirements.png").exists()


def test_requirements_empty_lead_list(tmp_path):
    out = tmp_path / "req"
    assert main(["requirements", "--out", str(out), "--lead-s", "--no-plot"]) == 0
    notification = (out / "requirements_notification.csv").read_text().splitlines()
    assert notification == ["train_speed_mph,lead_s,distance_m"]


def test_requirements_json_format(tmp_path):
    out = tmp_path / "req"
    assert main(["requirements", "--out", str(out), "--format", "json", "--no-plot"]) == 0
    rows = json.loads((out / "requirements_stopping.json").read_text())
    assert {"vehicle_speed_mph": 65.0, "dry_m": 105.0, "wet_m": 210.0} in rows


def test_synthesize_outputs(tmp_path):
    out = tmp_path / "syn"
    assert main(["synthesize", "--out", str(out)]) == 0
    metrics = json.loads((out / "envelope_metrics.json").read_text())
    assert metrics["peak_gain_dbi"] == pytest.approx(24.8, abs=0.2)
    assert metrics["boundary_angle_deg"] == pytest.approx(11.21, abs=0.01)
    assert metrics["dimensions"]["phi_max_deg"] == pytest.approx(6.4, rel=0.07)
    assert (out / "envelope.csv").exists()
    assert (out / "envelope.png").exists()


def test_synthesize_deterministic(tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    for out in (out1, out2):
        assert main(["synthesize", "--out", str(out), "--no-plot"]) == 0
    assert (out1 / "envelope.csv").read_bytes() == (out2 / "envelope.csv").read_bytes()
    assert (out1 / "envelope_metrics.json").read_bytes() == (
        out2 / "envelope_metrics.json"
    ).read_bytes()


def test_synthesize_with_config(tmp_path):
    cfg = tmp_path / "crossing.cfg"
    cfg.write_text("lead_time_s = 15\nn = 3\n")
    out = tmp_path / "syn"
    assert main(["synthesize", "--config", str(cfg), "--out", str(out), "--no-plot"]) == 0
    metrics = json.loads((out / "envelope_metrics.json").read_text())
    assert metrics["peak_gain_dbi"] == pytest.approx(16.5, abs=0.2)


def test_synthesize_flag_overrides_config(tmp_path):
    cfg = tmp_path / "crossing.cfg"
    cfg.write_text("lead_time_s = 15\n")
    out = tmp_path / "syn"
    assert main(
        ["synthesize", "--config", str(cfg), "--lead-s", "30", "--out", str(out), "--no-plot"]
    ) == 0
    metrics = json.loads((out / "envelope_metrics.json").read_text())
    assert metrics["peak_gain_dbi"] == pytest.approx(24.8, abs=0.2)


def test_synthesize_resolution_out_of_bounds(tmp_path, capsys):
    out = tmp_path / "syn"
    assert main(["synthesize", "--out", str(out), "--resolution-deg", "9", "--no-plot"]) == 2
    assert "resolution" in capsys.readouterr().err


def test_bad_config_exits_2(tmp_path, capsys):
    cfg = tmp_path / "crossing.cfg"
    cfg.write_text("lead_time_s = soon\n")
    out = tmp_path / "syn"
    assert main(["synthesize", "--config", str(cfg), "--out", str(out), "--no-plot"]) == 2
    assert "line 1" in capsys.readouterr().err


def test_size_rows(tmp_path):
    out = tmp_path / "size"
    assert main(
        ["size", "--out", str(out), "--lead-s", "30", "15",
         "--n", "2", "3", "4", "--format", "json", "--no-plot"]
    ) == 0
    rows = json.loads((out / "sizes.json").read_text())
    assert len(rows) == 6
    row = next(r for r in rows if r["lead_s"] == 30.0 and r["n"] == 3.0)
    assert row["max_gain_dbi"] == pytest.approx(24.8, abs=0.2)
    assert row["length_m"] == pytest.approx(0.407, rel=0.07)
    row2 = next(r for r in rows if r["lead_s"] == 30.0 and r["n"] == 2.0)
    assert row2["phi_max_deg"] == 360.0


def test_size_figure(tmp_path):
    out = tmp_path / "size"
    assert main(["size", "--out", str(out), "--lead-s", "30", "--n", "3"]) == 0
    assert (out / "sizing.png").exists()


def test_verify_pass_and_fail(tmp_path):
    syn = tmp_path / "syn"
    assert main(["synthesize", "--out", str(syn), "--no-plot"]) == 0
    ver = tmp_path / "ver"
    assert main(
        ["verify", "--pattern", str(syn / "envelope.csv"), "--out", str(ver), "--no-plot"]
    ) == 0
    report = json.loads((ver / "coverage.json").read_text())
    assert report["pass"] is True
    assert report["min_margin_db"] >= -0.01

    # knock the written envelope down 0.2 dB and it must fail
    env = read_pattern_csv(syn / "envelope.csv")
    low_path = tmp_path / "low.csv"
    write_pattern_csv(env.scaled_db(-0.2), low_path, rounding="down")
    assert main(["verify", "--pattern", str(low_path), "--out", str(ver), "--no-plot"]) == 1
    report = json.loads((ver / "coverage.json").read_text())
    assert report["pass"] is False


def test_verify_renders_margin_trace(tmp_path):
    syn = tmp_path / "syn"
    assert main(["synthesize", "--out", str(syn), "--no-plot"]) == 0
    ver = tmp_path / "ver"
    assert main(["verify", "--pattern", str(syn / "envelope.csv"), "--out", str(ver)]) == 0
    assert (ver / "verify_margin.png").exists()


def test_verify_malformed_csv(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("theta_deg,gain_dbi\n0.0000,5.0\n90.0000,5.0\n45.0000,5.0\n")
    assert main(["verify", "--pattern", str(bad), "--out", str(tmp_path), "--no-plot"]) == 2
    assert "line 4" in capsys.readouterr().err


def test_verify_missing_pattern(tmp_path, capsys):
    assert main(
        ["verify", "--pattern", str(tmp_path / "nope.csv"), "--out", str(tmp_path), "--no-plot"]
    ) == 2
    capsys.readouterr()


def test_array_default_demo_fails(tmp_path):
    out = tmp_path / "arr"
    assert main(["array", "--out", str(out)]) == 1
    compliance = json.loads((out / "compliance.json").read_text())
    assert compliance["pass"] is False
    assert compliance["margin_db"] < 0.0
    assert compliance["violations"]
    metrics = json.loads((out / "array_metrics.json").read_text())
    assert metrics["peak_gain_dbi"] == pytest.approx(21.0, abs=0.05)
    assert metrics["array_length_m"] == pytest.approx(0.28)
    assert (out / "array_pattern.csv").exists()
    assert (out / "array.png").exists()


def test_array_element_estimate(tmp_path):
    out = tmp_path / "arr"
    assert main(
        ["array", "--out", str(out), "--element-gain-dbi", "15",
         "--spacing-m", "0.025", "--elements", "10", "--no-plot"]
    ) == 1
    metrics = json.loads((out / "array_metrics.json").read_text())
    assert metrics["element_count_estimate"] == 10
    assert metrics["estimated_array_length_m"] == pytest.approx(0.25)


def test_array_grades_pattern_file(tmp_path):
    arr = tmp_path / "arr"
    assert main(["array", "--out", str(arr), "--no-plot"]) == 1
    graded = tmp_path / "graded"
    assert main(
        ["array", "--pattern", str(arr / "array_pattern.csv"), "--out", str(graded), "--no-plot"]
    ) == 1
    compliance = json.loads((graded / "compliance.json").read_text())
    assert compliance["pass"] is False

    syn = tmp_path / "syn"
    assert main(["synthesize", "--out", str(syn), "--no-plot"]) == 0
    ok = tmp_path / "ok"
    assert main(
        ["array", "--pattern", str(syn / "envelope.csv"), "--out", str(ok), "--no-plot"]
    ) == 0
    compliance = json.loads((ok / "compliance.json").read_text())
    assert compliance["pass"] is True


def test_array_pattern_round_trips(tmp_path):
    out = tmp_path / "arr"
    assert main(["array", "--out", str(out), "--no-plot"]) == 1
    pat = read_pattern_csv(out / "array_pattern.csv")
    peak_dbi = 10.0 * math.log10(pat.peak_gain())
    assert peak_dbi == pytest.approx(21.03, abs=0.01)
