import json
import math

import numpy as np
import pytest
from click.testing import CliRunner

from qie.cli import main

PI = math.pi

X_FLAGS = [
    "--temp-ratio", "0.2", "--delta-e", "4", "--hbar-omega", "1.5",
    "--g-eff-sq", "0.4", "--tau", str(PI / 3),
]


@pytest.fixture
def runner():
    return CliRunner()


def _read_csv(path):
    lines = [ln for ln in path.read_text().splitlines() if not ln.startswith("#")]
    header = lines[0].split(",")
    return header, [dict(zip(header, ln.split(","))) for ln in lines[1:]]


# ---------------------------------------------------------------------------
# evaluate
# ---------------------------------------------------------------------------

def test_evaluate_reference_point(runner):
    result = runner.invoke(main, ["evaluate", *X_FLAGS])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["metrics"]["eta_info"] == pytest.approx(0.9266, abs=5e-4)
    assert doc["metrics"]["regime"] == "heat_engine"
    assert doc["thermo"]["n_prime"] == 1
    # 17-significant-digit floats round-trip
    assert doc["params"]["tau"] == PI / 3


def test_evaluate_zero_time_idle(runner):
    result = runner.invoke(main, [
        "evaluate", "--temp-ratio", "0.2", "--delta-e", "4", "--hbar-omega", "1.5",
        "--g-eff-sq", "0.4", "--tau", "0",
    ])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["metrics"]["regime"] == "idle"
    assert doc["thermo"]["w_meas"] == 0.0
    assert doc["thermo"]["w_ext"] == 0.0
    assert doc["thermo"]["w_net"] == 0.0


def test_evaluate_validation_error_exit_2(runner):
    result = runner.invoke(main, [
        "evaluate", "--temp-ratio", "0", "--delta-e", "4", "--hbar-omega", "1.5",
        "--g-eff-sq", "0.4", "--tau", "1",
    ])
    assert result.exit_code == 2


def test_evaluate_truncation_cap_exit_3(runner):
    result = runner.invoke(main, [
        "evaluate", "--temp-ratio", "0.2", "--delta-e", "4", "--hbar-omega", "1.5",
        "--g-eff-sq", "1e12", "--tau", str(PI / 1.5),
    ])
    assert result.exit_code == 3


def test_evaluate_distribution_export(runner, tmp_path):
    out = tmp_path / "dist.csv"
    result = runner.invoke(main, ["evaluate", *X_FLAGS, "--distribution-out", str(out)])
    assert result.exit_code == 0
    header, rows = _read_csv(out)
    assert header == ["n", "p_joint_0", "p_joint_1", "p_cond_0", "p_cond_1", "marginal"]
    total = sum(float(r["marginal"]) for r in rows)
    assert total == pytest.approx(1.0, abs=1e-10)


# ---------------------------------------------------------------------------
# sweep / heatmap
# ---------------------------------------------------------------------------

def test_sweep_csv_contents(runner, tmp_path):
    out = tmp_path / "sweep.csv"
    result = runner.invoke(main, [
        "sweep", "--axis", "temp_ratio", "--start", "0.05", "--stop", "0.5",
        "--points", "6", "--scale", "linear",
        "--delta-e", "4", "--hbar-omega", "1.5", "--g-eff-sq", "0.4",
        "--tau", str(PI / 3), "-o", str(out),
    ])
    assert result.exit_code == 0, result.output
    header, rows = _read_csv(out)
    assert len(rows) == 6
    assert rows[0]["temp_ratio"] == "0.050000000000000003"
    assert "eta_info" in header and "regime" in header and "n_prime" in header
    etas = [float(r["eta_info"]) for r in rows]
    # non-monotone in detail (kinks at threshold jumps) but decreasing overall
    assert etas[0] > etas[-1]
    assert all(0.0 <= e <= 1.0 for e in etas)


def test_sweep_zero_points_header_only(runner, tmp_path):
    out = tmp_path / "empty.csv"
    result = runner.invoke(main, [
        "sweep", "--axis", "tau", "--start", "0.1", "--stop", "1.0", "--points", "0",
        "--temp-ratio", "0.2", "--delta-e", "4", "--hbar-omega", "1.5",
        "--g-eff-sq", "0.4", "--tau", "1.0", "-o", str(out),
    ])
    assert result.exit_code == 0
    header, rows = _read_csv(out)
    assert rows == []
    assert header[0] == "index"


def test_sweep_config_file_with_flag_override(runner, tmp_path):
    cfg = tmp_path / "run.toml"
    cfg.write_text(
        "[params]\n"
        "temp_ratio = 0.2\ndelta_e = 4.0\nhbar_omega = 1.5\ng_eff_sq = 0.4\ntau = 1.0\n"
        "[sweep]\n"
        'axis = "tau"\nstart = 0.1\nstop = 2.0\npoints = 4\noutput = "cfg_sweep.csv"\n'
    )
    out = tmp_path / "override.csv"
    result = runner.invoke(main, ["sweep", "--config", str(cfg), "--points", "3",
                                  "-o", str(out)])
    assert result.exit_code == 0, result.output
    _, rows = _read_csv(out)
    assert len(rows) == 3  # flag wins over config


def test_heatmap_single_cell(runner, tmp_path):
    out = tmp_path / "hm.csv"
    result = runner.invoke(main, [
        "heatmap",
        "--axis1", "g_eff_sq", "--start1", "0.4", "--stop1", "0.4", "--points1", "1",
        "--axis2", "temp_ratio", "--start2", "0.2", "--stop2", "0.2", "--points2", "1",
        "--delta-e", "4", "--hbar-omega", "1.5", "--tau", str(PI / 3),
        "--temp-ratio", "0.2", "--g-eff-sq", "0.4",
        "-o", str(out),
    ])
    assert result.exit_code == 0, result.output
    header, rows = _read_csv(out)
    assert len(rows) == 1
    assert rows[0]["regime"] == "heat_engine"
    assert float(rows[0]["eta_he"]) == pytest.approx(0.5102, abs=2e-4)


def test_heatmap_sign_regions(runner, tmp_path):
    out = tmp_path / "hm2.csv"
    result = runner.invoke(main, [
        "heatmap",
        "--axis1", "g_eff_sq", "--start1", "0.04", "--stop1", "40", "--points1", "7",
        "--scale1", "log",
        "--axis2", "temp_ratio", "--start2", "0.02", "--stop2", "0.9", "--points2", "7",
        "--delta-e", "4", "--hbar-omega", "1.5", "--tau", str(PI / 3),
        "--temp-ratio", "0.2", "--g-eff-sq", "0.4",
        "-o", str(out),
    ])
    assert result.exit_code == 0, result.output
    _, rows = _read_csv(out)
    regimes = {r["regime"] for r in rows}
    assert "heat_engine" in regimes and "heat_valve" in regimes
    # positive power only shows up at low relative temperature
    hot_rows = [r for r in rows if float(r["temp_ratio"]) > 0.7]
    assert all(float(r["w_net"]) <= 0.0 for r in hot_rows)


# ---------------------------------------------------------------------------
# front
# ---------------------------------------------------------------------------

def test_front_writes_csv_and_metadata(runner, tmp_path):
    out = tmp_path / "front.csv"
    result = runner.invoke(main, [
        "front", "--pair", "power_vs_eta_he", "--population", "16",
        "--generations", "5", "--seed", "3", "-o", str(out),
    ])
    assert result.exit_code == 0, result.output
    assert out.exists()
    meta = json.loads((tmp_path / "front.meta.json").read_text())
    assert meta["pair"] == "power_vs_eta_he"
    assert meta["runs"][0]["evaluations"] == 16 * 6
    assert meta["runs"][0]["hypervolume"] > 0.0


def test_front_full_boundary(runner, tmp_path):
    out = tmp_path / "front.csv"
    result = runner.invoke(main, [
        "front", "--pair", "power_vs_eta_he", "--population", "16",
        "--generations", "4", "--seed", "3", "--full-boundary", "-o", str(out),
    ])
    assert result.exit_code == 0, result.output
    assert out.exists()
    assert (tmp_path / "front_boundary.csv").exists()
    meta = json.loads((tmp_path / "front.meta.json").read_text())
    assert [r["orientation"] for r in meta["runs"]] == ["max_max", "max_power_min_eff"]


# ---------------------------------------------------------------------------
# validate / reproduce
# ---------------------------------------------------------------------------

def test_validate_small_sample_deterministic(runner):
    first = runner.invoke(main, ["validate", "--samples", "3", "--seed", "5"])
    second = runner.invoke(main, ["validate", "--samples", "3", "--seed", "5"])
    assert first.exit_code == 0, first.output
    assert first.output == second.output
    doc = json.loads(first.output)
    assert doc["pass"] is True
    assert doc["oracle"]["p_joint"]["worst_residual"] <= 1e-8


def test_reproduce_emits_configs(runner, tmp_path):
    result = runner.invoke(main, ["reproduce", "--outdir", str(tmp_path / "r")])
    assert result.exit_code == 0
    names = {p.name for p in (tmp_path / "r").iterdir()}
    for required in ("fig2.toml", "fig3.toml", "fig5c.toml", "fig8.toml", "table2.toml"):
        assert required in names


def test_output_dir_env_var(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("QIE_OUTPUT_DIR", str(tmp_path / "outputs"))
    result = runner.invoke(main, [
        "sweep", "--axis", "tau", "--start", "0.5", "--stop", "1.0", "--points", "2",
        "--temp-ratio", "0.2", "--delta-e", "4", "--hbar-omega", "1.5",
        "--g-eff-sq", "0.4", "--tau", "1.0", "-o", "rel.csv",
    ])
    assert result.exit_code == 0, result.output
    assert (tmp_path / "outputs" / "rel.csv").exists()


def test_round_trip_seventeen_digits(runner, tmp_path):
    out = tmp_path / "s.csv"
    runner.invoke(main, [
        "sweep", "--axis", "tau", "--start", str(PI / 7), "--stop", str(PI / 3),
        "--points", "3", "--temp-ratio", "0.2", "--delta-e", "4",
        "--hbar-omega", "1.5", "--g-eff-sq", "0.4", "--tau", "1.0", "-o", str(out),
    ])
    _, rows = _read_csv(out)
    values = np.array([float(r["tau"]) for r in rows])
    assert values[0] == PI / 7 and values[-1] == PI / 3
