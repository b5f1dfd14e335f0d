"""Command-line interface: subcommands, file outputs, exit codes."""

import json
import subprocess
import sys

import numpy as np

FIG2_CFG = """
initial.mu_x = -2.0
initial.s = -0.34657359027997264
picture = sip
drive.kind = linear
drive.omega0 = 1.0
drive.g = 5.0
drive.a = 1.0
drive.b = -1.0
drive.omega1 = 2.0
time.t_max = 2.0943951023931953
time.samples = 64
outputs.csv = out/traj.csv
outputs.svg_dir = out/frames
outputs.summary = out/summary.json
"""


def run_cli(args, cwd):
    return subprocess.run([sys.executable, "-m", "wignerflow.cli", *args],
                          cwd=cwd, capture_output=True, text=True)


def test_simulate_emits_files_and_passes(tmp_path):
    (tmp_path / "scenario.cfg").write_text(FIG2_CFG)
    proc = run_cli(["simulate", "--config", "scenario.cfg"], tmp_path)
    assert proc.returncode == 0, proc.stderr
    assert "result: PASS" in proc.stdout
    assert (tmp_path / "out/traj.csv").exists()
    assert len(list((tmp_path / "out/frames").glob("*.svg"))) == 9
    payload = json.loads((tmp_path / "out/summary.json").read_text())
    assert payload["pass"] is True


def test_unknown_key_exits_2(tmp_path):
    (tmp_path / "bad.cfg").write_text("omega2 = 3\n")
    proc = run_cli(["simulate", "--config", "bad.cfg"], tmp_path)
    assert proc.returncode == 2
    assert "omega2" in proc.stderr


def test_missing_config_exits_2(tmp_path):
    proc = run_cli(["simulate", "--config", "absent.cfg"], tmp_path)
    assert proc.returncode == 2


def test_usage_error_exits_2(tmp_path):
    proc = run_cli(["frobnicate"], tmp_path)
    assert proc.returncode == 2


def test_magnus_check_passes(tmp_path):
    (tmp_path / "scenario.cfg").write_text(FIG2_CFG)
    proc = run_cli(["magnus-check", "--config", "scenario.cfg"], tmp_path)
    assert proc.returncode == 0, proc.stderr
    assert "result: PASS" in proc.stdout
    # the summary path doubles as the report location
    payload = json.loads((tmp_path / "out/summary.json").read_text())
    assert payload["pass"] is True
    assert len(payload["rows"]) == 8


def test_magnus_check_rejects_free_drive(tmp_path):
    (tmp_path / "free.cfg").write_text("drive.kind = free\ndrive.omega0 = 1.0\n")
    proc = run_cli(["magnus-check", "--config", "free.cfg"], tmp_path)
    assert proc.returncode == 2


def test_compare_oracle_free_scenario(tmp_path):
    cfg = (
        "initial.mu_x = 2.0\n"
        "initial.s = -0.34657359027997264\n"
        "picture = sp\n"
        "drive.kind = free\n"
        "drive.omega0 = 1.0\n"
        f"time.t_max = {2 * np.pi}\n"
        "time.samples = 9\n"
        "outputs.summary = report.json\n"
        "oracle.enabled = true\n"
        "oracle.cutoff = 60\n"
    )
    (tmp_path / "scenario.cfg").write_text(cfg)
    proc = run_cli(["compare-oracle", "--config", "scenario.cfg"], tmp_path)
    assert proc.returncode == 0, proc.stderr + proc.stdout
    assert "result: PASS" in proc.stdout
    payload = json.loads((tmp_path / "report.json").read_text())
    assert payload["pass"] is True
    assert len(payload["wigner_checkpoints"]) == 3
