# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：test_purity.py
# @Date   ：2026/10/18 16:20
# @Author ：leemysw
# 2026/10/18 16:20   Create
# =====================================================

import math

import numpy as np
import pytest

from oscillad.core.dynamics import closed_form_trajectory
from oscillad.core.exceptions import InvalidParameter, NotOnPureFamily, OverdampedRegime
from oscillad.core.moments import correlated_coherent_state, correlation_coefficient, ground_state
from oscillad.core.purity import (
    auxiliary_residuals,
    entropy_production_rate_pure,
    fluctuation_energy,
    minimize_energy_on_pure_manifold,
    minimum_fluctuation_energy,
    on_pure_family,
    pure_family,
    purity_preserving_coefficients,
    rate_is_reliable,
    single_lindblad_operator,
    stationary_energy,
    stationary_pure_variances,
)
from oscillad.schema.models import DiffusionCoefficients, GaussianState, OscillatorParams
from tests.conftest import random_coefficients, random_params, random_state

SQUEEZED = OscillatorParams(m=1.0, omega=1.0, lambda_=0.1, mu=0.6, hbar=1.0)


# ==============================================================================
# 保纯系数族
# ==============================================================================
def test_pure_coefficients_hand_values():
    d = purity_preserving_coefficients(SQUEEZED)
    assert d.d_qq == pytest.approx(0.0625, rel=1e-14)
    assert d.d_pp == pytest.approx(0.0625, rel=1e-14)
    assert d.d_pq == pytest.approx(-0.0375, rel=1e-14)


def test_pure_coefficients_without_squeezing(unit_params):
    d = purity_preserving_coefficients(unit_params)
    assert (d.d_qq, d.d_pp) == pytest.approx((0.05, 0.05), rel=1e-14)
    assert d.d_pq == 0.0


def test_stationary_pure_state_hand_values():
    state = stationary_pure_variances(SQUEEZED)
    assert state.covariances == pytest.approx((0.625, 0.625, -0.375), rel=1e-14)
    assert correlation_coefficient(state) == pytest.approx(-0.6, rel=1e-14)
    assert state.sigma == pytest.approx(0.25, rel=1e-12)


def test_pure_family_bundle():
    family = pure_family(SQUEEZED)
    assert family.e_min == pytest.approx(0.4, rel=1e-14)
    assert family.r_star == pytest.approx(-0.6)
    assert family.stationary_state == stationary_pure_variances(SQUEEZED)
    assert stationary_energy(SQUEEZED, family.coefficients) == pytest.approx(0.4, rel=1e-12)
    assert fluctuation_energy(SQUEEZED, family.stationary_state) == pytest.approx(0.4, rel=1e-12)


def test_auxiliary_residuals_vanish_on_stationary_state():
    family = pure_family(SQUEEZED)
    first, second = auxiliary_residuals(family.coefficients, SQUEEZED, family.stationary_state)
    assert first == pytest.approx(0.0, abs=1e-15)
    assert second == pytest.approx(0.0, abs=1e-15)


def test_pure_family_determinant(rng):
    for _ in range(20):
        params = random_params(rng)
        d = purity_preserving_coefficients(params)
        assert d.determinant == pytest.approx((params.hbar * params.lambda_) ** 2 / 4.0, rel=1e-12)
        assert on_pure_family(d, params)
        assert correlation_coefficient(stationary_pure_variances(params)) == pytest.approx(
            -params.mu / params.omega, rel=1e-12, abs=1e-15)


def test_on_pure_family_rejects_thermal(unit_params, thermal_coefficients):
    assert not on_pure_family(thermal_coefficients, unit_params)


def test_pure_coefficients_preconditions():
    with pytest.raises(OverdampedRegime):
        purity_preserving_coefficients(OscillatorParams(omega=1.0, lambda_=0.1, mu=2.0))
    with pytest.raises(InvalidParameter):
        purity_preserving_coefficients(OscillatorParams(omega=1.0, lambda_=0.0))


# ==============================================================================
# 能量极小化
# ==============================================================================
def _assert_matches_closed_form(params):
    best, energy = minimize_energy_on_pure_manifold(params)
    expected = purity_preserving_coefficients(params)
    e_min = minimum_fluctuation_energy(params)
    assert energy >= e_min * (1.0 - 1e-12)
    assert energy == pytest.approx(e_min, rel=1e-7, abs=1e-6)
    assert best.d_qq == pytest.approx(expected.d_qq, rel=1e-4)
    assert best.d_pp == pytest.approx(expected.d_pp, rel=1e-4)
    assert best.d_pq == pytest.approx(expected.d_pq, abs=1e-4 * expected.d_qq * params.m * params.omega)


def test_numeric_minimum_matches_closed_form(rng):
    for _ in range(20):
        _assert_matches_closed_form(random_params(rng))


@pytest.mark.parametrize("mu", [0.9, 0.95, 0.99, -0.99])
def test_numeric_minimum_near_critical_squeezing(mu):
    _assert_matches_closed_form(OscillatorParams(m=1.0, omega=1.0, lambda_=0.1, mu=mu, hbar=1.0))


def test_minimizer_rejects_coarse_grid(unit_params):
    with pytest.raises(InvalidParameter):
        minimize_energy_on_pure_manifold(unit_params, grid_resolution=1)


# ==============================================================================
# 单 Lindblad 算符
# ==============================================================================
def test_single_operator_reproduces_coefficients(rng):
    for _ in range(20):
        params = random_params(rng)
        d = purity_preserving_coefficients(params)
        operator = single_lindblad_operator(params, d)
        d_qq, d_pp, d_pq, lam = operator.reconstruct(params.hbar)
        assert d_qq == pytest.approx(d.d_qq, rel=1e-12)
        assert d_pp == pytest.approx(d.d_pp, rel=1e-12)
        assert d_pq == pytest.approx(d.d_pq, rel=1e-12, abs=1e-15)
        assert lam == pytest.approx(params.lambda_, rel=1e-12)
        assert operator.a.real == 0.0
        assert operator.commutator(params.hbar) == pytest.approx(2.0 * params.hbar * params.lambda_, rel=1e-12)


def test_single_operator_requires_pure_family(unit_params, thermal_coefficients):
    with pytest.raises(NotOnPureFamily):
        single_lindblad_operator(unit_params, thermal_coefficients)


# ==============================================================================
# 熵产生率
# ==============================================================================
def test_entropy_rate_is_non_negative(rng):
    for _ in range(200):
        params = random_params(rng)
        d = random_coefficients(rng, params)
        state = random_state(rng, params, mixedness=2.0)
        assert entropy_production_rate_pure(params, d, state) >= -1e-12


def test_entropy_rate_vanishes_on_stationary_pure_state(rng):
    for _ in range(20):
        params = random_params(rng)
        family = pure_family(params)
        rate = entropy_production_rate_pure(params, family.coefficients, family.stationary_state)
        assert rate == pytest.approx(0.0, abs=1e-12)


def test_ground_state_in_squeezing_environment():
    params = OscillatorParams(m=1.0, omega=1.0, lambda_=0.05, mu=0.3)
    d = purity_preserving_coefficients(params)
    rate = entropy_production_rate_pure(params, d, ground_state(params))
    assert rate == pytest.approx(2.0 * 0.05 * (1.0 / math.sqrt(0.91) - 1.0), rel=1e-12)
    assert rate == pytest.approx(0.0048285, rel=1e-4)


def test_rate_reliability_threshold(unit_params):
    assert rate_is_reliable(unit_params, ground_state(unit_params))
    width = 0.5 / 0.98
    mixed = GaussianState(s_qq=width, s_pp=width)
    assert not rate_is_reliable(unit_params, mixed)
    almost_pure = GaussianState(s_qq=0.5 / 0.995, s_pp=0.5 / 0.995)
    assert rate_is_reliable(unit_params, almost_pure)


def test_explicit_coefficients_energy(unit_params):
    d = DiffusionCoefficients(d_qq=0.1, d_pp=0.1, d_pq=0.0)
    assert stationary_energy(unit_params, d) == pytest.approx(1.0, rel=1e-14)


def test_non_stationary_pure_start_decoheres_then_repurifies():
    params = OscillatorParams(m=1.0, omega=1.0, lambda_=0.1, mu=0.3)
    d = purity_preserving_coefficients(params)
    state0 = correlated_coherent_state(0.5, 1.5, 0.4, -0.2, params)
    times = np.linspace(0.0, 30.0 / params.lambda_, 300)
    gammas = [diag.gamma for diag in closed_form_trajectory(params, d, state0, times).diagnostics]
    assert gammas[0] == pytest.approx(1.0, abs=1e-12)
    assert min(gammas) < 0.99
    assert gammas[-1] == pytest.approx(1.0, abs=1e-9)
