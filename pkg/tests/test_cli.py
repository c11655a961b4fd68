"""Command-line interface: record formats, exit codes, reproducibility."""

import subprocess
import sys

import numpy as np
import pytest

from ordpat.cli import main


def run_cli(*argv):
    return main(list(argv))


def write_pair_file(path, x, y):
    with open(path, "w") as fh:
        fh.write("x,y\n")
        for a, b in zip(x, y):
            fh.write(f"{a:.17g},{b:.17g}\n")


@pytest.fixture
def pair_file(tmp_path, rng):
    x = rng.standard_normal(200)
    path = tmp_path / "pair.csv"
    write_pair_file(path, x, x)
    return str(path)


class TestEstimate:
    def test_opd_identical_series(self, pair_file, capsys):
        assert run_cli("estimate", "--input", pair_file, "--method", "opd", "--h", "2") == 0
        header, record = capsys.readouterr().out.strip().splitlines()
        assert header == "method,h,shift,n,value,variance,ci_low,ci_high"
        fields = record.split(",")
        assert fields[0] == "opd" and fields[1] == "2"
        assert float(fields[4]) == 1.0
        assert fields[5] == fields[6] == fields[7] == ""

    def test_pearson_identical_series(self, pair_file, capsys):
        assert run_cli("estimate", "--input", pair_file, "--method", "pearson") == 0
        record = capsys.readouterr().out.strip().splitlines()[1]
        assert float(record.split(",")[4]) == pytest.approx(1.0, abs=1e-8)

    def test_kendall_reports_ci(self, tmp_path, rng, capsys):
        x = rng.standard_normal(150)
        y = 0.5 * x + rng.standard_normal(150)
        path = tmp_path / "k.csv"
        write_pair_file(path, x, y)
        assert run_cli("estimate", "--input", str(path), "--method", "kendall") == 0
        fields = capsys.readouterr().out.strip().splitlines()[1].split(",")
        value, variance, lo, hi = map(float, fields[4:8])
        assert lo <= value <= hi and variance >= 0.0

    def test_shifted_single_path_value_range(self, tmp_path, capsys):
        # single shifted-AR(1) draw at rho=0.5: the estimate sits near -0.161
        assert run_cli(
            "simulate", "--family", "shifted-ar1", "--rho", "0.5", "--n", "500",
            "--seed", "77", "--out", str(tmp_path / "s.csv"),
        ) == 0
        capsys.readouterr()
        assert run_cli(
            "estimate", "--input", str(tmp_path / "s.csv"), "--method", "opd", "--h", "1"
        ) == 0
        value = float(capsys.readouterr().out.strip().splitlines()[1].split(",")[4])
        assert -0.30 < value < 0.0

    def test_parse_error_reports_line(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("x,y\n1.0,2.0\n3.0,oops\n")
        assert run_cli("estimate", "--input", str(bad), "--method", "opd") == 2
        assert "line 3" in capsys.readouterr().err

    def test_estimator_error_exit_code(self, tmp_path, capsys):
        path = tmp_path / "const.csv"
        write_pair_file(path, np.ones(30), np.arange(30.0))
        assert run_cli("estimate", "--input", str(path), "--method", "kendall") == 3
        assert "DegenerateMarginal" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert run_cli("estimate", "--input", "/nonexistent.csv", "--method", "opd") == 2


class TestSimulate:
    def test_deterministic_regeneration(self, tmp_path, capsys):
        args = (
            "simulate", "--family", "biv-ar1", "--a", "0.7", "--b", "-0.7",
            "--n", "500", "--seed", "42",
        )
        run_cli(*args, "--out", str(tmp_path / "a.csv"))
        run_cli(*args, "--out", str(tmp_path / "b.csv"))
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
        assert sum(1 for _ in open(tmp_path / "a.csv")) == 501
        assert "ProcessSpec" in capsys.readouterr().out

    def test_shifted_column_relation(self, tmp_path):
        run_cli(
            "simulate", "--family", "shifted-ar1", "--rho", "0.3", "--n", "50",
            "--seed", "1", "--out", str(tmp_path / "s.csv"),
        )
        rows = [line.split(",") for line in open(tmp_path / "s.csv").read().splitlines()[1:]]
        x = [float(r[0]) for r in rows]
        y = [float(r[1]) for r in rows]
        assert y[:-1] == x[1:]

    def test_block_multinormal_vector_file(self, tmp_path):
        run_cli(
            "simulate", "--family", "block-multinormal", "--rho", "0.2", "--n", "20",
            "--seed", "3", "--out", str(tmp_path / "v.csv"),
        )
        lines = open(tmp_path / "v.csv").read().splitlines()
        assert lines[0] == "x1,x2,x3,y1,y2,y3"
        assert len(lines) == 21

    def test_indefinite_covariance_exit_2(self, tmp_path, capsys):
        code = run_cli(
            "simulate", "--family", "block-multinormal", "--rho", "0.34", "--n", "10",
            "--seed", "0", "--out", str(tmp_path / "x.csv"),
        )
        assert code == 2
        assert "InvalidCovariance" in capsys.readouterr().err


EXPERIMENT_CONFIG = """
family  = shifted-ar1
params  = 0.5
methods = opd
n       = 60
h       = 1
reps    = 3
seed    = 11
"""


class TestExperiment:
    def test_report_and_sidecar(self, tmp_path, capsys):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text(EXPERIMENT_CONFIG)
        out = tmp_path / "report.csv"
        assert run_cli("experiment", "--config", str(cfg), "--out", str(out)) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "method,family,param,n,h,mean,sd,median,iqr,reps"
        assert len(lines) == 2
        meta = (tmp_path / "report.csv.meta").read_text()
        assert "rng = " in meta and "threads = 1" in meta

    def test_env_seed_changes_report(self, tmp_path, monkeypatch):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text(EXPERIMENT_CONFIG)
        out1 = tmp_path / "r1.csv"
        run_cli("experiment", "--config", str(cfg), "--out", str(out1))
        monkeypatch.setenv("ORDPAT_SEED", "999")
        out2 = tmp_path / "r2.csv"
        run_cli("experiment", "--config", str(cfg), "--out", str(out2))
        assert out1.read_text() != out2.read_text()

    def test_config_error_exit_2(self, tmp_path, capsys):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text(EXPERIMENT_CONFIG + "\nwhat = 1\n")
        assert run_cli("experiment", "--config", str(cfg), "--out", str(tmp_path / "r.csv")) == 2
        assert "what" in capsys.readouterr().err


class TestAnalytic:
    def test_shifted_ar1_value(self, capsys):
        assert run_cli("analytic", "--formula", "shifted-ar1-opd1", "--rho", "0.5") == 0
        value = float(capsys.readouterr().out.strip())
        assert value == pytest.approx(-0.161, abs=5e-4)

    def test_ar1_zero(self, capsys):
        assert run_cli("analytic", "--formula", "ar1-opd1", "--a", "0", "--b", "0") == 0
        assert float(capsys.readouterr().out.strip()) == 0.0

    def test_orthant2(self, capsys):
        assert run_cli("analytic", "--formula", "orthant2", "--rho", "0.5") == 0
        assert float(capsys.readouterr().out.strip()) == pytest.approx(1 / 3, abs=1e-6)

    def test_missing_param_exit_3(self, capsys):
        assert run_cli("analytic", "--formula", "orthant2") == 3

    def test_nonstationary_exit_3(self, capsys):
        assert run_cli("analytic", "--formula", "ar1-opd1", "--a", "0.9", "--b", "0.9") == 3


def test_round_trip_bytes_stable_across_runs_and_backends(tmp_path):
    import os

    cfg = tmp_path / "exp.cfg"
    cfg.write_text(EXPERIMENT_CONFIG)
    outputs = {}
    for backend in ("numba", "numpy"):
        env = dict(os.environ, ORDPAT_BACKEND=backend)
        sim = tmp_path / f"sim-{backend}.csv"
        proc = subprocess.run(
            [sys.executable, "-m", "ordpat.cli", "simulate", "--family", "shifted-ar1",
             "--rho", "0.5", "--n", "120", "--seed", "5", "--out", str(sim)],
            capture_output=True, env=env,
        )
        assert proc.returncode == 0
        est = subprocess.run(
            [sys.executable, "-m", "ordpat.cli", "estimate", "--input", str(sim),
             "--method", "kendall", "--h", "2"],
            capture_output=True, env=env,
        )
        assert est.returncode == 0
        rep = tmp_path / f"rep-{backend}.csv"
        exp = subprocess.run(
            [sys.executable, "-m", "ordpat.cli", "experiment", "--config", str(cfg),
             "--out", str(rep)],
            capture_output=True, env=env,
        )
        assert exp.returncode == 0
        outputs[backend] = (sim.read_bytes(), est.stdout, rep.read_bytes())
    assert outputs["numba"] == outputs["numpy"]


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "ordpat.cli", "analytic", "--formula", "orthant2", "--rho", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0.25"
