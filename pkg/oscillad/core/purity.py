# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：purity.py
# @Date   ：2026/10/19 10:30
# @Author ：leemysw
# 2026/10/14 09:10   Create
# 2026/10/15 11:20   Coordinate descent refinement via minimize_scalar
# 2026/10/19 10:30   Joint trust-region Newton refinement for |mu| close to omega
# =====================================================
"""
[INPUT]: 依赖 numpy, scipy.optimize, oscillad.core.moments
[OUTPUT]: 对外提供保纯扩散系数、稳态纯方差、涨落能量及其约束极小、单 Lindblad 算符、熵产生率
[POS]: core 模块的保纯分析层，被 diagnostics / simulator 使用
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

import math

import numpy as np
from scipy.optimize import minimize

from oscillad.core.exceptions import InvalidParameter, NotOnPureFamily
from oscillad.core.moments import (
    check_uncertainty,
    pure_condition_residual,
    require_underdamped,
    sigma_det,
)
from oscillad.schema.models import (
    DiffusionCoefficients,
    GaussianState,
    LindbladOperatorCoefficients,
    OscillatorParams,
    PureFamily,
)

# 纯态近似下熵产生率的可信阈值
RATE_RELIABLE_GAMMA = 0.99
# single_lindblad_operator 对 D_pp·D_qq − D_pq² = ħ²λ²/4 的相对容差
PURE_FAMILY_RTOL = 1e-9


def _require_friction(params: OscillatorParams) -> None:
    if not params.lambda_ > 0.0:
        raise InvalidParameter(f"保纯系数需要 lambda > 0: lambda={params.lambda_!r}")


# ==============================================================================
# 保纯系数族
# ==============================================================================
def purity_preserving_coefficients(params: OscillatorParams) -> DiffusionCoefficients:
    """
    广义 Einstein 关系:
        D_qq = ħλ/2mΩ, D_pp = ħλmω²/2Ω, D_pq = −ħλμ/2Ω
    """
    _require_friction(params)
    big_omega = require_underdamped(params)
    hbar_lambda = params.hbar * params.lambda_
    return DiffusionCoefficients(
        d_qq=hbar_lambda / (2.0 * params.m * big_omega),
        d_pp=hbar_lambda * params.m * params.omega ** 2 / (2.0 * big_omega),
        d_pq=-hbar_lambda * params.mu / (2.0 * big_omega),
    )


def stationary_pure_variances(params: OscillatorParams) -> GaussianState:
    """σ_qq = ħ/2mΩ, σ_pp = ħmω²/2Ω, σ_pq = −ħμ/2Ω（关联系数 −μ/ω 的关联相干态）"""
    big_omega = require_underdamped(params)
    hbar = params.hbar
    return GaussianState(
        q_mean=0.0,
        p_mean=0.0,
        s_qq=hbar / (2.0 * params.m * big_omega),
        s_pp=hbar * params.m * params.omega ** 2 / (2.0 * big_omega),
        s_pq=-hbar * params.mu / (2.0 * big_omega),
    )


def on_pure_family(d: DiffusionCoefficients, params: OscillatorParams, rtol: float = PURE_FAMILY_RTOL) -> bool:
    """D_pp·D_qq − D_pq² = ħ²λ²/4（相对容差 rtol）"""
    target = (params.hbar * params.lambda_) ** 2 / 4.0
    return abs(d.determinant - target) <= rtol * max(target, abs(d.determinant))


def pure_family(params: OscillatorParams) -> PureFamily:
    """保纯系数、对应稳态及最小涨落能量"""
    return PureFamily(
        coefficients=purity_preserving_coefficients(params),
        stationary_state=stationary_pure_variances(params),
        e_min=minimum_fluctuation_energy(params),
        r_star=-params.mu / params.omega,
    )


def auxiliary_residuals(d: DiffusionCoefficients, params: OscillatorParams,
                        state: GaussianState) -> tuple[float, float]:
    """
    纯态在任意时刻须同时满足的两个辅助等式的残差:
        D_pp·σ_qq − D_pq·σ_pq − ħ²λ/4
        σ_pq·(D_pp·D_qq − D_pq²) − ħ²λ·D_pq/4
    """
    quarter = params.hbar ** 2 * params.lambda_ / 4.0
    return (
        d.d_pp * state.s_qq - d.d_pq * state.s_pq - quarter,
        state.s_pq * d.determinant - quarter * d.d_pq,
    )


# ==============================================================================
# 涨落能量
# ==============================================================================
def fluctuation_energy(params: OscillatorParams, state: GaussianState) -> float:
    """E = σ_pp/2m + mω²σ_qq/2 + μσ_pq"""
    return (
        state.s_pp / (2.0 * params.m)
        + params.m * params.omega ** 2 * state.s_qq / 2.0
        + params.mu * state.s_pq
    )


def stationary_energy(params: OscillatorParams, d: DiffusionCoefficients) -> float:
    """方差取 D/λ 时的能量 E = (D_pp/2m + mω²D_qq/2 + μD_pq)/λ"""
    _require_friction(params)
    return (
        d.d_pp / (2.0 * params.m)
        + params.m * params.omega ** 2 * d.d_qq / 2.0
        + params.mu * d.d_pq
    ) / params.lambda_


def minimum_fluctuation_energy(params: OscillatorParams) -> float:
    """E_min = ħΩ/2"""
    return params.hbar * require_underdamped(params) / 2.0


def minimize_energy_on_pure_manifold(
        params: OscillatorParams,
        grid_resolution: int = 200,
        max_iter: int = 200,
) -> tuple[DiffusionCoefficients, float]:
    """
    在 D_pp·D_qq − D_pq² = ħ²λ²/4 上数值极小化 E(D)

    参数化: u = ln(D_qq/s_qq)（网格 [ln 1e−3, ln 1e3]）与 v = D_pq/s_pq（网格 [−1, 1]），
    D_pp = (ħ²λ²/4 + D_pq²)/D_qq。先取网格最小点，再用 trust-exact 牛顿法
    （解析梯度与 Hessian）同时细化两个变量。

    Returns:
        (极小点系数, 极小能量)
    """
    if grid_resolution < 2:
        raise InvalidParameter(f"grid_resolution 至少为 2: {grid_resolution}")
    _require_friction(params)
    big_omega = require_underdamped(params)

    m, omega, mu, lam = params.m, params.omega, params.mu, params.lambda_
    target_det = (params.hbar * lam) ** 2 / 4.0
    scale_qq = params.hbar * lam / (2.0 * m * big_omega)
    scale_pq = params.hbar * lam * omega / big_omega
    # 目标函数按 ħΩ/2 归一化
    unit = params.hbar * big_omega / 2.0 * lam

    def energy(u, v):
        d_qq = scale_qq * np.exp(u)
        d_pq = scale_pq * v
        d_pp = (target_det + d_pq ** 2) / d_qq
        return (d_pp / (2.0 * m) + m * omega ** 2 * d_qq / 2.0 + mu * d_pq) / lam

    def objective(x):
        u, v = x
        inv_qq = math.exp(-u) / scale_qq
        kinetic = (target_det + (scale_pq * v) ** 2) * inv_qq / (2.0 * m)
        potential = m * omega ** 2 * scale_qq * math.exp(u) / 2.0
        value = kinetic + potential + mu * scale_pq * v
        grad = np.array([
            potential - kinetic,
            scale_pq ** 2 * v * inv_qq / m + mu * scale_pq,
        ])
        return value / unit, grad / unit

    def hessian(x):
        u, v = x
        inv_qq = math.exp(-u) / scale_qq
        kinetic = (target_det + (scale_pq * v) ** 2) * inv_qq / (2.0 * m)
        potential = m * omega ** 2 * scale_qq * math.exp(u) / 2.0
        cross = -scale_pq ** 2 * v * inv_qq / m
        return np.array([
            [kinetic + potential, cross],
            [cross, scale_pq ** 2 * inv_qq / m],
        ]) / unit

    # 网格阶段（向量化求值）
    u_axis = np.linspace(math.log(1e-3), math.log(1e3), grid_resolution)
    v_axis = np.linspace(-1.0, 1.0, grid_resolution)
    grid_u, grid_v = np.meshgrid(u_axis, v_axis, indexing="ij")
    i, j = np.unravel_index(np.argmin(energy(grid_u, grid_v)), grid_u.shape)

    # 联合牛顿细化
    result = minimize(
        objective,
        np.array([u_axis[i], v_axis[j]]),
        method="trust-exact",
        jac=True,
        hess=hessian,
        options={"gtol": 1e-13, "maxiter": max_iter},
    )
    u, v = (float(value) for value in result.x)

    d_qq = scale_qq * math.exp(u)
    d_pq = scale_pq * v
    best = DiffusionCoefficients(d_qq=d_qq, d_pp=(target_det + d_pq ** 2) / d_qq, d_pq=d_pq)
    return best, float(energy(u, v))



# ==============================================================================
# 单 Lindblad 算符
# ==============================================================================
def single_lindblad_operator(params: OscillatorParams, d: DiffusionCoefficients) -> LindbladOperatorCoefficients:
    """
    保纯族上只需一个环境算符 V = a·p̂ + b·q̂:
        b = √(2/ħD_qq)·(λħ/2 − iD_pq),  a = i·√(2/ħD_qq)·D_qq
    相位自由度固定为动量项系数纯虚。

    Raises:
        NotOnPureFamily: D 不满足 D_pp·D_qq − D_pq² = ħ²λ²/4
    """
    if not on_pure_family(d, params):
        target = (params.hbar * params.lambda_) ** 2 / 4.0
        raise NotOnPureFamily(
            f"单算符表示只存在于保纯族: D_pp·D_qq − D_pq² = {d.determinant!r} ≠ ħ²λ²/4 = {target!r}"
        )
    norm = math.sqrt(2.0 / (params.hbar * d.d_qq))
    return LindbladOperatorCoefficients(
        a=complex(0.0, norm * d.d_qq),
        b=complex(norm * params.lambda_ * params.hbar / 2.0, -norm * d.d_pq),
    )


# ==============================================================================
# 熵产生
# ==============================================================================
def entropy_production_rate_pure(params: OscillatorParams, d: DiffusionCoefficients, state: GaussianState) -> float:
    """
    近似纯态的线性熵产生率 (4/ħ²)·(D_pp·σ_qq + D_qq·σ_pp − 2D_pq·σ_pq − ħ²λ/2)

    对任意态均可计算；γ < 0.99 时仅作参考（见 rate_is_reliable）。
    """
    return 4.0 / params.hbar ** 2 * pure_condition_residual(d, params, state)


def rate_is_reliable(params: OscillatorParams, state: GaussianState) -> bool:
    """纯态近似是否成立（γ ≥ 0.99）"""
    sigma = check_uncertainty(state, params)
    return params.hbar / (2.0 * math.sqrt(sigma)) >= RATE_RELIABLE_GAMMA


def linear_entropy_rate_exact(params: OscillatorParams, d: DiffusionCoefficients, state: GaussianState) -> float:
    """
    高斯态线性熵的精确变化率 dS_l/dt = ħσ̇/(4σ^{3/2})
    σ̇ = 2(D_pp·σ_qq + D_qq·σ_pp − 2D_pq·σ_pq) − 4λσ
    """
    sigma = sigma_det(state)
    quadratic = d.d_pp * state.s_qq + d.d_qq * state.s_pp - 2.0 * d.d_pq * state.s_pq
    sigma_dot = 2.0 * quadratic - 4.0 * params.lambda_ * sigma
    return params.hbar * sigma_dot / (4.0 * sigma ** 1.5)
