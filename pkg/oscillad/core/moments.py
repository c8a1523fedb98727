# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：moments.py
# @Date   ：2026/10/13 09:50
# @Author ：leemysw
# 2026/10/12 11:00   Create
# 2026/10/13 09:50   Use xlogy for the ν ln ν limit
# =====================================================
"""
[INPUT]: 依赖 numpy, scipy.special, oscillad.schema.models
[OUTPUT]: 对外提供 sigma_det, purity, 熵, 关联系数及标准态构造函数
[POS]: core 模块的标量诊断层，被 dynamics / purity / phasespace 依赖
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

import math

from scipy.special import xlogy

from oscillad.core.exceptions import InvalidParameter, OverdampedRegime, UncertaintyViolation
from oscillad.schema.models import UNDERDAMPED_EPS, DiffusionCoefficients, GaussianState, OscillatorParams

# 纯度超调 / 不确定度欠调的统一相对容差
TOLERANCE = 1e-9
# ν 低于此值时熵取 0
NU_FLOOR = 1e-12


# ==============================================================================
# 不确定关系
# ==============================================================================
def sigma_det(state: GaussianState) -> float:
    """色散矩阵行列式 σ = σ_pp·σ_qq − σ_pq²"""
    return state.s_pp * state.s_qq - state.s_pq ** 2


def uncertainty_margin(state: GaussianState, params: OscillatorParams) -> float:
    """σ − ħ²/4，非负即满足 Schrödinger–Robertson 关系"""
    return sigma_det(state) - params.hbar ** 2 / 4.0


def robertson_bound(state: GaussianState, params: OscillatorParams) -> float:
    """σ_pp·σ_qq 的下界 ħ²/(4(1−r²))"""
    r = correlation_coefficient(state)
    return params.hbar ** 2 / (4.0 * (1.0 - r ** 2))


def check_uncertainty(state: GaussianState, params: OscillatorParams) -> float:
    """
    校验 σ ≥ ħ²/4（允许 1e−9 相对舍入）

    Returns:
        σ

    Raises:
        UncertaintyViolation: 欠调超出容差
    """
    sigma = sigma_det(state)
    bound = params.hbar ** 2 / 4.0
    if sigma < bound * (1.0 - TOLERANCE):
        raise UncertaintyViolation(f"σ = {sigma!r} < ħ²/4 = {bound!r}")
    return sigma


def correlation_coefficient(state: GaussianState) -> float:
    """r = σ_pq / √(σ_pp·σ_qq)"""
    return state.s_pq / math.sqrt(state.s_pp * state.s_qq)


# ==============================================================================
# 纯度与熵
# ==============================================================================
def purity(state: GaussianState, params: OscillatorParams) -> float:
    """γ = ħ / (2√σ)，舍入导致的超调截断为 1"""
    sigma = check_uncertainty(state, params)
    return min(params.hbar / (2.0 * math.sqrt(sigma)), 1.0)


def von_neumann_entropy(state: GaussianState, params: OscillatorParams) -> float:
    """S = (ν+1)ln(ν+1) − ν ln ν，ν = √σ/ħ − 1/2"""
    sigma = check_uncertainty(state, params)
    nu = max(math.sqrt(sigma) / params.hbar - 0.5, 0.0)
    if nu <= NU_FLOOR:
        return 0.0
    return float(xlogy(nu + 1.0, nu + 1.0) - xlogy(nu, nu))


def linear_entropy(state: GaussianState, params: OscillatorParams) -> float:
    """S_l = 1 − γ"""
    return 1.0 - purity(state, params)


# ==============================================================================
# 标准态
# ==============================================================================
def ground_state(params: OscillatorParams) -> GaussianState:
    """基态: σ_qq = ħ/2mω, σ_pp = mħω/2"""
    return GaussianState(
        q_mean=0.0,
        p_mean=0.0,
        s_qq=params.hbar / (2.0 * params.m * params.omega),
        s_pp=params.m * params.hbar * params.omega / 2.0,
        s_pq=0.0,
    )


def coherent_state(q_mean: float, p_mean: float, params: OscillatorParams) -> GaussianState:
    """Glauber 相干态: 基态方差 + 平移后的均值"""
    ground = ground_state(params)
    return GaussianState(q_mean=q_mean, p_mean=p_mean, s_qq=ground.s_qq, s_pp=ground.s_pp, s_pq=0.0)


def correlated_coherent_state(
        r: float,
        eta: float,
        q_mean: float,
        p_mean: float,
        params: OscillatorParams,
) -> GaussianState:
    """
    关联相干态（最小化 Schrödinger–Robertson 关系的纯高斯态）

    Args:
        r: 关联系数，|r| < 1
        eta: √σ_qq，> 0
        q_mean: 坐标均值
        p_mean: 动量均值
        params: 提供 ħ

    Raises:
        InvalidParameter: |r| ≥ 1 或 eta ≤ 0
    """
    if not abs(r) < 1.0:
        raise InvalidParameter(f"关联系数需满足 |r| < 1: r={r!r}")
    if not eta > 0.0:
        raise InvalidParameter(f"eta 必须为正: eta={eta!r}")
    one_minus_r2 = 1.0 - r ** 2
    hbar = params.hbar
    return GaussianState(
        q_mean=q_mean,
        p_mean=p_mean,
        s_qq=eta ** 2,
        s_pp=hbar ** 2 / (4.0 * eta ** 2 * one_minus_r2),
        s_pq=hbar * r / (2.0 * math.sqrt(one_minus_r2)),
    )


def is_translation_invariant(params: OscillatorParams, rtol: float = 1e-12) -> bool:
    """生成元平移不变当且仅当 μ = λ"""
    return math.isclose(params.mu, params.lambda_, rel_tol=rtol, abs_tol=rtol)


# ==============================================================================
# 纯态条件（完全正性）
# ==============================================================================
def pure_condition_residual(d: DiffusionCoefficients, params: OscillatorParams, state: GaussianState) -> float:
    """
    D_pp·σ_qq + D_qq·σ_pp − 2D_pq·σ_pq − ħ²λ/2

    完全正性保证其非负；等于 0 即该时刻满足纯态条件。
    """
    return (
        d.d_pp * state.s_qq
        + d.d_qq * state.s_pp
        - 2.0 * d.d_pq * state.s_pq
        - params.hbar ** 2 * params.lambda_ / 2.0
    )


def require_underdamped(params: OscillatorParams) -> float:
    """
    校验欠阻尼条件 ω > |μ|（Ω² > 1e−12）

    Returns:
        Ω

    Raises:
        OverdampedRegime: Ω² ≤ 1e−12
    """
    if not params.is_underdamped:
        raise OverdampedRegime(
            f"需要欠阻尼条件 omega > |mu|（Ω² > {UNDERDAMPED_EPS:g}）: "
            f"omega={params.omega!r}, mu={params.mu!r}, Ω²={params.omega_sq!r}"
        )
    return params.big_omega
