# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：diagnostics.py
# @Date   ：2026/10/14 17:05
# @Author ：leemysw
# 2026/10/14 17:05   Create
# =====================================================
"""
[INPUT]: 依赖 oscillad.core.moments, oscillad.core.purity
[OUTPUT]: 对外提供 diagnose（单个采样点的全部标量诊断量）
[POS]: core 模块的诊断汇总，被 dynamics 构造 Trajectory 时调用
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from typing import Optional

from oscillad.core.moments import (
    correlation_coefficient,
    linear_entropy,
    pure_condition_residual,
    purity,
    sigma_det,
    von_neumann_entropy,
)
from oscillad.core.purity import RATE_RELIABLE_GAMMA, entropy_production_rate_pure, fluctuation_energy
from oscillad.schema.models import Diagnostics, DiffusionCoefficients, GaussianState, OscillatorParams


def diagnose(
        state: GaussianState,
        params: OscillatorParams,
        d: Optional[DiffusionCoefficients],
) -> Diagnostics:
    """计算 σ, γ, r, S, S_l, E, 纯态残差与熵产生率"""
    gamma = purity(state, params)
    if d is None:
        residual = rate = None
    else:
        residual = pure_condition_residual(d, params, state)
        rate = entropy_production_rate_pure(params, d, state)
    return Diagnostics(
        det_sigma=sigma_det(state),
        gamma=gamma,
        r=correlation_coefficient(state),
        entropy_vn=von_neumann_entropy(state, params),
        entropy_linear=linear_entropy(state, params),
        energy=fluctuation_energy(params, state),
        pure_residual=residual,
        entropy_rate_pure=rate,
        rate_reliable=gamma >= RATE_RELIABLE_GAMMA,
    )
