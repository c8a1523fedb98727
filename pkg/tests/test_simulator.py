# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：test_simulator.py
# @Date   ：2026/10/18 19:30
# @Author ：leemysw
# 2026/10/18 19:30   Create
# =====================================================

import math

import pytest

from oscillad.core.exceptions import ConfigError, ConstraintViolation, NoStationaryState, UncertaintyViolation
from oscillad.core.simulator import EVOLVE_COLUMNS, SWEEP_COLUMNS, WIGNER_COLUMNS, OscillatorSimulator
from oscillad.schema.models import Integrator, SweepParam
from oscillad.utils.config import parse_config
from oscillad.utils.progress import ProgressManager
from tests.conftest import PURE_GROUND, PURE_SQUEEZED, THERMAL

CLOSED_SYSTEM = """\
omega = 1
lambda = 0
mu = 0
d_qq = 0.1
d_pp = 0.1
d_pq = 0
initial_state = coherent
q0 = 1
t_max = 6.283185307179586
samples = 5
"""

SQUEEZED_FAMILY = """\
omega = 1
lambda = 0.1
mu = 0.6
coefficients = pure
t_max = 1
"""

COHERENT_BLOCK = "initial_state = coherent\nq0 = 1.5\np0 = -0.5"
# σ = 0.01 < ħ²/4
SQUASHED_BLOCK = "initial_state = custom\ns_qq = 0.1\ns_pp = 0.1\ns_pq = 0"


def simulator_for(text: str, **overrides) -> OscillatorSimulator:
    config = parse_config(text)
    if overrides:
        config = config.model_copy(update=overrides)
    return OscillatorSimulator(config)


def column(report, name: str) -> list:
    index = report.header.index(name)
    return [row[index] for row in report.rows]


# ==============================================================================
# evolve
# ==============================================================================
def test_evolve_ground_state_stays_pure():
    report = simulator_for(PURE_GROUND).evolve()
    assert report.header == EVOLVE_COLUMNS
    assert len(report.rows) == 51
    assert report.footer["integrator"] == "closed"
    assert report.footer["max_rel_discrepancy"] < 1e-6
    assert all(abs(gamma - 1.0) < 1e-9 for gamma in column(report, "gamma"))
    assert all(abs(residual) < 1e-12 for residual in column(report, "pure_residual"))
    assert column(report, "t")[-1] == 50.0


def test_evolve_thermal_relaxes_to_asymptote():
    report = simulator_for(THERMAL).evolve()
    last = dict(zip(report.header, report.rows[-1]))
    assert last["sigma_qq"] == pytest.approx(1.0, abs=1e-9)
    assert last["sigma_pp"] == pytest.approx(1.0, abs=1e-9)
    assert last["sigma_pq"] == pytest.approx(0.0, abs=1e-9)
    assert abs(last["q_mean"]) < 1e-6 and abs(last["p_mean"]) < 1e-6
    assert last["gamma"] == pytest.approx(0.5, rel=1e-9)
    first = dict(zip(report.header, report.rows[0]))
    assert (first["q_mean"], first["p_mean"]) == (1.5, -0.5)


def test_evolve_is_deterministic():
    first = simulator_for(PURE_SQUEEZED).evolve()
    second = simulator_for(PURE_SQUEEZED).evolve()
    assert first.rows == second.rows
    assert first.footer == second.footer


def test_evolve_single_integrators():
    closed = simulator_for(THERMAL, integrator=Integrator.CLOSED).evolve()
    assert closed.footer == {"integrator": "closed"}
    rk4 = simulator_for(THERMAL, integrator=Integrator.RK4).evolve()
    assert rk4.footer == {"integrator": "rk4"}
    assert column(rk4, "sigma_qq")[-1] == pytest.approx(column(closed, "sigma_qq")[-1], rel=1e-6)


def test_both_falls_back_to_rk4_without_friction():
    report = simulator_for(CLOSED_SYSTEM).evolve()
    assert report.footer == {"integrator": "rk4"}
    assert any("RK4" in warning for warning in report.warnings)
    last = dict(zip(report.header, report.rows[-1]))
    assert last["q_mean"] == pytest.approx(1.0, abs=1e-8)


def test_closed_integrator_requires_friction():
    with pytest.raises(NoStationaryState):
        simulator_for(CLOSED_SYSTEM, integrator=Integrator.CLOSED).evolve()


def test_evolve_rejects_constraint_violation():
    text = THERMAL.replace("d_qq = 0.1", "d_qq = 0.001").replace("d_pp = 0.1", "d_pp = 0.001")
    with pytest.raises(ConstraintViolation):
        simulator_for(text).evolve()


def test_evolve_rejects_unphysical_initial_state():
    text = THERMAL.replace(COHERENT_BLOCK, SQUASHED_BLOCK)
    with pytest.raises(UncertaintyViolation):
        simulator_for(text).evolve()


# ==============================================================================
# steady / pure-coeffs
# ==============================================================================
def test_steady_thermal():
    payload = simulator_for(THERMAL).steady().payload
    assert (payload["sigma_qq"], payload["sigma_pp"], payload["sigma_pq"]) == pytest.approx((1.0, 1.0, 0.0))
    assert payload["gamma"] == pytest.approx(0.5)
    assert payload["energy"] == pytest.approx(1.0)
    assert payload["entropy_vn"] == pytest.approx(1.5 * math.log(1.5) - 0.5 * math.log(0.5))


def test_steady_requires_friction():
    with pytest.raises(NoStationaryState):
        simulator_for(CLOSED_SYSTEM).steady()


def test_pure_coefficients_report():
    report = simulator_for(SQUEEZED_FAMILY).pure_coefficients(minimize=True)
    payload = report.payload
    assert (payload["d_qq"], payload["d_pp"], payload["d_pq"]) == pytest.approx((0.0625, 0.0625, -0.0375))
    assert (payload["sigma_qq"], payload["sigma_pp"], payload["sigma_pq"]) == pytest.approx((0.625, 0.625, -0.375))
    assert payload["r_star"] == pytest.approx(-0.6)
    assert payload["e_min"] == pytest.approx(0.4)
    assert payload["determinant_check"]["on_pure_family"] is True
    assert payload["determinant_check"]["target"] == pytest.approx(0.0025)
    reconstructed = payload["lindblad_operator"]["reconstructed"]
    assert reconstructed["lambda"] == pytest.approx(0.1, rel=1e-12)
    assert reconstructed["d_pq"] == pytest.approx(-0.0375, rel=1e-12)
    assert abs(payload["numeric_minimum"]["energy_error"]) < 1e-7
    assert report.warnings == []


def test_strong_coupling_warns():
    report = simulator_for(SQUEEZED_FAMILY.replace("lambda = 0.1", "lambda = 0.3")).pure_coefficients()
    assert report.warnings


# ==============================================================================
# check
# ==============================================================================
def test_check_passes_for_pure_ground_state():
    report = simulator_for(PURE_GROUND).check()
    assert report.ok
    names = [item.name for item in report.checks]
    assert names[:3] == ["complete_positivity", "uncertainty", "pure_state_condition"]
    by_name = {item.name: item for item in report.checks}
    assert by_name["purity_equality"].passed
    assert by_name["pure_family"].passed
    assert by_name["translation_invariance"].required is False


def test_check_reports_failures_without_raising():
    text = THERMAL.replace("d_qq = 0.1", "d_qq = 0.001").replace(COHERENT_BLOCK, SQUASHED_BLOCK)
    report = simulator_for(text).check()
    assert not report.ok
    by_name = {item.name: item for item in report.checks}
    assert not by_name["complete_positivity"].passed
    assert not by_name["uncertainty"].passed
    assert by_name["uncertainty"].line().startswith("FAIL uncertainty residual=")


def test_informational_items_do_not_fail():
    text = THERMAL.replace("lambda = 0.1", "lambda = 0.5")
    text = text.replace("d_qq = 0.1", "d_qq = 0.5").replace("d_pp = 0.1", "d_pp = 0.5")
    report = simulator_for(text).check()
    assert report.ok
    weak = next(item for item in report.checks if item.name == "weak_coupling")
    assert not weak.passed
    assert weak.line().endswith("(informational)")


# ==============================================================================
# wigner
# ==============================================================================
def test_wigner_grid_report():
    report = simulator_for(PURE_GROUND).wigner(0.0, 64, 6.0)
    assert report.header == WIGNER_COLUMNS
    assert len(report.rows) == 64 * 64
    p0, q0, _ = report.rows[0]
    p1, q1, _ = report.rows[1]
    assert q0 == q1 and p1 > p0
    assert q0 == pytest.approx(-6.0 * math.sqrt(0.5))
    assert max(row[2] for row in report.rows) <= 1.0 / math.pi
    assert report.footer["purity_analytic"] == pytest.approx(1.0)
    assert report.footer["purity_quadrature"] == pytest.approx(1.0, abs=1e-6)
    assert report.footer["normalization_quadrature"] == pytest.approx(1.0, abs=1e-6)


def test_wigner_at_later_time_uses_evolved_state():
    report = simulator_for(THERMAL).wigner(10.0, 64, 6.0)
    assert report.footer["t"] == 10.0
    assert report.footer["purity_quadrature"] == pytest.approx(report.footer["purity_analytic"], abs=1e-6)


def test_wigner_falls_back_to_rk4():
    report = simulator_for(CLOSED_SYSTEM).wigner(1.0, 16, 6.0)
    assert any("RK4" in warning for warning in report.warnings)


# ==============================================================================
# sweep
# ==============================================================================
def test_sweep_mu_tracks_stationary_correlation():
    report = simulator_for(PURE_GROUND).sweep(SweepParam.MU, 0.0, 0.5, 6)
    assert report.header == ("mu", *SWEEP_COLUMNS)
    for row in report.rows:
        values = dict(zip(report.header, row))
        assert values["r"] == pytest.approx(-values["mu"], abs=1e-12)
        assert values["gamma"] == pytest.approx(1.0, rel=1e-9)
        assert values["error"] is None


def test_sweep_keeps_rows_past_critical_damping():
    report = simulator_for(PURE_GROUND).sweep(SweepParam.MU, 0.5, 1.5, 3)
    assert [row[0] for row in report.rows] == [0.5, 1.0, 1.5]
    assert report.rows[0][-1] is None
    for row in report.rows[1:]:
        assert all(value is None for value in row[1:-1])
        assert "omega > |mu|" in row[-1]


def test_sweep_parallel_preserves_order():
    simulator = simulator_for(THERMAL)
    serial = simulator.sweep(SweepParam.LAMBDA, 0.05, 0.2, 7)
    parallel = simulator.sweep(SweepParam.LAMBDA, 0.05, 0.2, 7, workers=4)
    assert serial.rows == parallel.rows


def test_single_value_sweep_matches_steady():
    simulator = simulator_for(THERMAL)
    report = simulator.sweep(SweepParam.D_QQ, 0.1, 0.1, 1)
    row = dict(zip(report.header, report.rows[0]))
    steady = simulator.steady().payload
    for name in ("sigma_qq", "sigma_pp", "sigma_pq", "det_sigma", "gamma", "entropy_vn", "energy", "r"):
        assert row[name] == steady[name]


def test_sweep_violating_values_report_constraint():
    report = simulator_for(THERMAL).sweep(SweepParam.D_QQ, 0.001, 0.1, 2)
    assert report.rows[0][-1] is not None
    assert report.rows[1][-1] is None


def test_sweep_diffusion_requires_explicit_coefficients():
    with pytest.raises(ConfigError):
        simulator_for(PURE_GROUND).sweep(SweepParam.D_PQ, 0.0, 0.1, 3)


def test_sweep_reports_progress():
    calls = []
    simulator = OscillatorSimulator(parse_config(THERMAL), progress=ProgressManager(
        silent=True, callback=lambda stage, current, total: calls.append((current, total))))
    simulator.sweep(SweepParam.MU, 0.0, 0.2, 3)
    assert calls[0] == (0, 3)
    assert calls[-1] == (3, 3)
