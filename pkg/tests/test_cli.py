import json
import subprocess
import sys

import numpy as np
import pytest

from alpvreal import InputSequence, SwitchedInput, simulate
from alpvreal import fileio
from alpvreal.cli import run

from conftest import make_eq1
from helpers import random_run


@pytest.fixture()
def sigma_star_path(tmp_path, sigma_star):
    path = tmp_path / "sigma_star.json"
    fileio.save_system(path, sigma_star)
    return str(path)


@pytest.fixture()
def sigma2_path(tmp_path, sigma2):
    path = tmp_path / "sigma2.json"
    fileio.save_system(path, sigma2)
    return str(path)


def test_sim_outputs_match_library(tmp_path, sigma_star, sigma_star_path):
    rng = np.random.default_rng(61)
    w = random_run(rng, 2, 1, 5)
    signal = tmp_path / "signal.csv"
    fileio.save_signal(signal, w)
    out = tmp_path / "y.csv"
    assert run(["sim", sigma_star_path, str(signal), "-o", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "y_1"
    values = np.array([[float(x)] for x in lines[1:]])
    expected = simulate(sigma_star, [0.0], w).outputs
    assert np.allclose(values, expected, atol=0)


def test_analyze_stdout_json(sigma_star_path, capsys):
    assert run(["analyze", sigma_star_path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["minimal"] is True and report["n"] == 1


def test_realize_from_system(tmp_path, sigma_star_path, capsys):
    out = tmp_path / "realized.json"
    assert run(["realize", "--L", "0", "--from-system", sigma_star_path, "-o", str(out)]) == 0
    realized = fileio.load_system(out)
    assert realized.n == 1
    assert run(["analyze", str(out)]) == 0
    assert json.loads(capsys.readouterr().out)["minimal"] is True


def test_iso_dimension_mismatch_exit_code(sigma_star_path, sigma2_path, capsys):
    assert run(["iso", sigma_star_path, sigma2_path]) == 1
    assert "DimensionMismatch" in capsys.readouterr().err


def test_iso_identity(sigma_star_path, capsys):
    assert run(["iso", sigma_star_path, sigma_star_path]) == 0
    assert float(capsys.readouterr().out.strip()) == pytest.approx(1.0)


def test_markov_hankel_realize_analyze_pipeline(tmp_path, sigma_star_path):
    table = tmp_path / "table.json"
    hankel = tmp_path / "H.csv"
    realized = tmp_path / "realized.json"
    report = tmp_path / "report.json"
    assert run(["markov", sigma_star_path, "--horizon", "3", "-o", str(table)]) == 0
    assert run(["hankel", "--from-table", str(table), "--L", "0", "--M", "1", "-o", str(hankel)]) == 0
    assert run(["realize", "--from-hankel", str(hankel), "-o", str(realized)]) == 0
    assert run(["analyze", str(realized), "-o", str(report)]) == 0
    assert json.loads(report.read_text())["minimal"] is True


def test_pipeline_byte_identical(tmp_path, sigma_star_path):
    def chain(tag):
        base = tmp_path / tag
        base.mkdir()
        table = base / "table.json"
        hankel = base / "H.csv"
        realized = base / "realized.json"
        report = base / "report.json"
        assert run(["markov", sigma_star_path, "--horizon", "3", "-o", str(table)]) == 0
        assert run(["hankel", "--from-table", str(table), "--L", "0", "--M", "1", "-o", str(hankel)]) == 0
        assert run(["realize", "--from-hankel", str(hankel), "-o", str(realized)]) == 0
        assert run(["analyze", str(realized), "-o", str(report)]) == 0
        return [
            table.read_bytes(),
            hankel.read_bytes(),
            (base / "H.csv.meta.json").read_bytes(),
            realized.read_bytes(),
            report.read_bytes(),
        ]

    assert chain("first") == chain("second")


def test_minimize_subcommand(tmp_path, sigma_star, sigma_star_path):
    out = tmp_path / "min.json"
    assert run(["minimize", sigma_star_path, "-o", str(out)]) == 0
    assert fileio.load_system(out).n == 1


def test_ioeq_check_subcommand(tmp_path, sigma1, capsys):
    sys_path = tmp_path / "sigma1.json"
    fileio.save_system(sys_path, sigma1)
    eq_path = tmp_path / "eq.json"
    fileio.save_equation(eq_path, make_eq1())
    assert run(["ioeq-check", str(eq_path), str(sys_path), "--trials", "50"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["satisfied"] is True and report["max_residual"] < 1e-10

    fileio.save_equation(eq_path, make_eq1(-0.6))
    assert run(["ioeq-check", str(eq_path), str(sys_path), "--trials", "50"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["satisfied"] is False


def test_switched_sim_subcommand(tmp_path, sigma_star, sigma_star_path):
    sw = SwitchedInput(D=2, modes=(1, 2), inputs=[[1.0], [0.0]])
    sw_path = tmp_path / "switched.csv"
    fileio.save_switched(sw_path, sw)
    out = tmp_path / "y.csv"
    assert run(["switched-sim", sigma_star_path, str(sw_path), "-o", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "y_1"
    assert float(lines[-1]) == pytest.approx(2.0)  # C2 B1


def test_missing_file_is_usage_error(tmp_path):
    assert run(["analyze", str(tmp_path / "absent.json")]) == 2


def test_malformed_json_is_usage_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["analyze", str(bad)]) == 2


def test_horizon_too_small_is_domain_error(tmp_path, sigma_star_path, capsys):
    table = tmp_path / "table.json"
    assert run(["markov", sigma_star_path, "--horizon", "2", "-o", str(table)]) == 0
    assert run(["hankel", "--from-table", str(table), "--L", "1", "--M", "2", "-o", str(tmp_path / "H.csv")]) == 1
    assert "HorizonExceeded" in capsys.readouterr().err


def test_bad_arguments_exit_2():
    assert run(["hankel", "--L", "0", "--M", "1"]) == 2
    assert run(["no-such-command"]) == 2


def test_console_entry_point(sigma_star_path):
    proc = subprocess.run(
        [sys.executable, "-m", "alpvreal", "analyze", sigma_star_path],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["minimal"] is True
