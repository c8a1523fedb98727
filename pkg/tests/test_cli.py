# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：test_cli.py
# @Date   ：2026/10/18 21:00
# @Author ：leemysw
# 2026/10/18 21:00   Create
# =====================================================

import csv
import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from oscillad import __version__
from oscillad.cli.main import app
from tests.conftest import PURE_GROUND, PURE_SQUEEZED, THERMAL

runner = CliRunner()

EVOLVE_HEADER = (
    "t,q_mean,p_mean,sigma_qq,sigma_pp,sigma_pq,det_sigma,gamma,entropy_vn,entropy_linear,energy,"
    "pure_residual,entropy_rate_pure"
)

GOLDEN_DIR = Path(__file__).parent / "golden"


def _split_csv(text: str) -> tuple[list[list[str]], dict[str, str]]:
    """数据行与 `# key = value` 页脚"""
    lines = text.splitlines()
    footer = dict(line[2:].split(" = ", 1) for line in lines if line.startswith("# "))
    rows = list(csv.reader(line for line in lines if not line.startswith("#")))
    return rows, footer


def invoke(*args: str):
    return runner.invoke(app, [str(arg) for arg in args])


def test_help_lists_commands():
    result = invoke("--help")
    assert result.exit_code == 0
    for command in ("evolve", "steady", "pure-coeffs", "check", "wigner", "sweep"):
        assert command in result.output


def test_version():
    result = invoke("--version")
    assert result.exit_code == 0
    assert __version__ in result.output


@pytest.mark.parametrize("scenario, golden", [
    (PURE_GROUND, "pure_ground.csv"),
    (PURE_SQUEEZED, "pure_squeezed.csv"),
    (THERMAL, "thermal.csv"),
])
def test_evolve_matches_golden_csv(scenario, golden, write_config, tmp_path):
    config = write_config(scenario)
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert invoke("evolve", "-c", config, "-o", first).exit_code == 0
    assert invoke("evolve", "--config", config, "--out", second).exit_code == 0
    text = first.read_text(encoding="utf-8")
    assert text == second.read_text(encoding="utf-8")

    actual_rows, actual_footer = _split_csv(text)
    expected_rows, expected_footer = _split_csv((GOLDEN_DIR / golden).read_text(encoding="utf-8"))
    assert actual_rows[0] == expected_rows[0] == EVOLVE_HEADER.split(",")
    assert len(actual_rows) == len(expected_rows)
    for actual, expected in zip(actual_rows[1:], expected_rows[1:]):
        assert [float(v) for v in actual] == pytest.approx([float(v) for v in expected], rel=1e-9, abs=1e-12)
    assert actual_footer["integrator"] == expected_footer["integrator"] == "closed"
    assert float(actual_footer["max_rel_discrepancy"]) < 1e-6


def test_evolve_json(write_config, tmp_path):
    out = tmp_path / "trajectory.json"
    result = invoke("evolve", "-c", write_config(PURE_GROUND), "-f", "json", "-o", out)
    assert result.exit_code == 0
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert len(payload["rows"]) == 51
    assert payload["rows"][0]["gamma"] == pytest.approx(1.0)
    assert payload["footer"]["integrator"] == "closed"


def test_evolve_to_stdout(write_config):
    result = invoke("evolve", "-c", write_config(PURE_GROUND))
    assert result.exit_code == 0
    assert EVOLVE_HEADER in result.stdout


def test_steady_json(write_config):
    result = invoke("steady", "-c", write_config(THERMAL))
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["sigma_qq"] == pytest.approx(1.0)
    assert payload["gamma"] == pytest.approx(0.5)


def test_pure_coeffs_csv(write_config, tmp_path):
    out = tmp_path / "pure.csv"
    result = invoke("pure-coeffs", "-c", write_config(PURE_SQUEEZED), "-f", "csv", "-o", out)
    assert result.exit_code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "key,value"
    assert any(line.startswith("lindblad_operator.reconstructed.lambda,") for line in lines)


def test_check_pass_and_fail(write_config):
    passing = invoke("check", "-c", write_config(PURE_GROUND, "ok.cfg"))
    assert passing.exit_code == 0
    assert "PASS complete_positivity" in passing.stdout

    violating = THERMAL.replace("d_qq = 0.1", "d_qq = 0.001")
    failing = invoke("check", "-c", write_config(violating, "bad.cfg"))
    assert failing.exit_code == 3
    assert "FAIL complete_positivity" in failing.stdout


@pytest.mark.parametrize(
    ("text", "code"),
    [
        (PURE_GROUND + "unknown_key = 1\n", 2),
        (PURE_GROUND.replace("mu = 0", "mu = 2"), 2),
        (THERMAL.replace("d_qq = 0.1", "d_qq = 0.001"), 3),
        (THERMAL.replace("lambda = 0.1", "lambda = 0\nintegrator = closed"), 3),
    ],
)
def test_evolve_exit_codes(text, code, write_config):
    assert invoke("evolve", "-c", write_config(text)).exit_code == code


def test_pure_coeffs_overdamped_explicit_config(write_config):
    text = THERMAL.replace("mu = 0", "mu = 2")
    assert invoke("pure-coeffs", "-c", write_config(text)).exit_code == 3


def test_steady_without_friction(write_config):
    text = THERMAL.replace("lambda = 0.1", "lambda = 0")
    assert invoke("steady", "-c", write_config(text)).exit_code == 3


def test_missing_config_file(tmp_path):
    assert invoke("evolve", "-c", tmp_path / "absent.cfg").exit_code == 2


def test_wigner_rows(write_config, tmp_path):
    out = tmp_path / "w.csv"
    result = invoke("wigner", "-c", write_config(PURE_GROUND), "--t", "5", "--n", "8", "-o", out)
    assert result.exit_code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "p,q,w"
    data = [line for line in lines[1:] if not line.startswith("#")]
    assert len(data) == 64
    assert any(line.startswith("# purity_quadrature = ") for line in lines)


def test_sweep_header_and_rows(write_config, tmp_path):
    out = tmp_path / "sweep.csv"
    result = invoke(
        "sweep", "-c", write_config(PURE_GROUND), "--param", "mu", "--from", "0", "--to", "1.2",
        "--steps", "4", "-w", "2", "-q", "-o", out,
    )
    assert result.exit_code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "mu,sigma_qq,sigma_pp,sigma_pq,det_sigma,gamma,entropy_vn,energy,r,entropy_rate_pure,error"
    assert len(lines) == 5
    assert lines[1].endswith(",")
    assert "omega > |mu|" in lines[-1]


def test_sweep_diffusion_on_pure_config(write_config):
    result = invoke("sweep", "-c", write_config(PURE_GROUND), "-p", "d_qq", "--from", "0.1", "--to", "0.2", "-q")
    assert result.exit_code == 2
