# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：__init__.py
# @Date   ：2026/10/17 18:40
# @Author ：leemysw
# 2026/10/12 10:30   Create
# =====================================================
"""
[INPUT]: None
[OUTPUT]: 对外提供矩、动力学、保纯分析与相空间的计算函数
[POS]: core 模块入口；OscillatorSimulator 依赖 utils，需从 oscillad.core.simulator 显式导入
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from oscillad.core.diagnostics import diagnose
from oscillad.core.dynamics import (
    asymptotic_variances,
    closed_form_trajectory,
    evolve_state_closed,
    integrate_moments_rk4,
    mean_evolution,
    propagator,
    spectral_decomposition,
    variance_evolution_closed,
)
from oscillad.core.moments import (
    check_uncertainty,
    coherent_state,
    correlated_coherent_state,
    correlation_coefficient,
    ground_state,
    linear_entropy,
    purity,
    sigma_det,
    von_neumann_entropy,
)
from oscillad.core.phasespace import (
    density_from_wigner_check,
    density_kernel,
    fokker_planck_residual,
    wigner_eval,
    wigner_purity_quadrature,
)
from oscillad.core.purity import (
    entropy_production_rate_pure,
    fluctuation_energy,
    minimize_energy_on_pure_manifold,
    purity_preserving_coefficients,
    single_lindblad_operator,
    stationary_pure_variances,
)

__all__ = [
    "asymptotic_variances",
    "check_uncertainty",
    "closed_form_trajectory",
    "coherent_state",
    "correlated_coherent_state",
    "correlation_coefficient",
    "density_from_wigner_check",
    "density_kernel",
    "diagnose",
    "entropy_production_rate_pure",
    "evolve_state_closed",
    "fluctuation_energy",
    "fokker_planck_residual",
    "ground_state",
    "integrate_moments_rk4",
    "linear_entropy",
    "mean_evolution",
    "minimize_energy_on_pure_manifold",
    "propagator",
    "purity",
    "purity_preserving_coefficients",
    "sigma_det",
    "single_lindblad_operator",
    "spectral_decomposition",
    "stationary_pure_variances",
    "variance_evolution_closed",
    "von_neumann_entropy",
    "wigner_eval",
    "wigner_purity_quadrature",
]
