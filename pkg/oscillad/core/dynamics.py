# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：dynamics.py
# @Date   ：2026/10/15 20:40
# @Author ：leemysw
# 2026/10/13 15:00   Create
# 2026/10/14 17:10   Eager trajectory diagnostics
# 2026/10/15 20:40   Reality check on T·e^{Kt}·T, RK4 lands exactly on grid points
# =====================================================
"""
[INPUT]: 依赖 numpy, oscillad.core.moments, oscillad.core.integrator, oscillad.core.diagnostics
[OUTPUT]: 对外提供均值/方差的闭式演化、谱矩阵 T 与 K、渐近方差、RK4 交叉验证积分器
[POS]: core 模块的动力学层，被 phasespace / simulator 使用
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

import math
from typing import Callable, Optional, Sequence

import numpy as np

from oscillad.core.diagnostics import diagnose
from oscillad.core.exceptions import (
    InvalidParameter,
    NoStationaryState,
    NumericalFailure,
    StepSizeTooLarge,
)
from oscillad.core.integrator import AffineRK4Stepper
from oscillad.core.moments import pure_condition_residual, require_underdamped
from oscillad.schema.models import (
    DiffusionCoefficients,
    DiffusionVector,
    GaussianState,
    MomentVector,
    OscillatorParams,
    SpectralDecomposition,
    Trajectory,
)

__all__ = [
    "ClosedFormEvolution",
    "asymptotic_moment_vector",
    "asymptotic_variances",
    "closed_form_trajectory",
    "default_rk4_dt",
    "evolve_state_closed",
    "integrate_moments_rk4",
    "max_relative_discrepancy",
    "mean_evolution",
    "moment_forcing",
    "moment_matrix",
    "moment_rhs",
    "natural_scales",
    "propagator",
    "pure_condition_residual",
    "real_propagator",
    "regime_warnings",
    "spectral_decomposition",
    "variance_evolution_closed",
]

# T·e^{Kt}·T 虚部残差容差（相对于矩阵元最大模）
REALITY_TOL = 1e-10
# 两条渐近方差计算路径的一致性容差
ASYMPTOTIC_RTOL = 1e-10
# λ > 0.1·ω 时提示弱耦合假设可能失效
WEAK_COUPLING_RATIO = 0.1
# RK4 步长上限系数: dt ≤ 0.05 / max(λ+|μ|, ω)
RK4_STEP_FACTOR = 0.05
# 对比 closed / rk4 时各列分母的下限（相对基态量级）
DISCREPANCY_FLOOR = 1e-6


def regime_warnings(params: OscillatorParams) -> list[str]:
    """与参数区间有关的告警（不阻断计算）"""
    warnings = []
    if params.lambda_ > WEAK_COUPLING_RATIO * params.omega:
        warnings.append(
            f"lambda={params.lambda_!r} > {WEAK_COUPLING_RATIO}·omega，半群的弱耦合假设 λ ≪ ω 可能不成立"
        )
    if not params.is_underdamped:
        warnings.append(f"过阻尼区 omega={params.omega!r} ≤ |mu|={abs(params.mu)!r}，纯态分析不适用")
    return warnings


# ==============================================================================
# 均值演化
# ==============================================================================
def mean_evolution(params: OscillatorParams, q0: float, p0: float, t: float) -> tuple[float, float]:
    """
    欠阻尼下的均值闭式解

    Raises:
        OverdampedRegime: ω ≤ |μ|
    """
    big_omega = require_underdamped(params)
    decay = math.exp(-params.lambda_ * t)
    c, s = math.cos(big_omega * t), math.sin(big_omega * t)
    ratio = params.mu / big_omega
    q = decay * ((c + ratio * s) * q0 + s / (params.m * big_omega) * p0)
    p = decay * (-(params.m * params.omega ** 2 / big_omega) * s * q0 + (c - ratio * s) * p0)
    return q, p


# ==============================================================================
# 矩方程
# ==============================================================================
def moment_matrix(params: OscillatorParams) -> np.ndarray:
    """y = (q̄, p̄, σ_qq, σ_pp, σ_pq) 的线性部分 A，dy/dt = A·y + b"""
    m, w2, lam, mu = params.m, params.omega ** 2, params.lambda_, params.mu
    return np.array([
        [-(lam - mu), 1.0 / m, 0.0, 0.0, 0.0],
        [-m * w2, -(lam + mu), 0.0, 0.0, 0.0],
        [0.0, 0.0, -2.0 * (lam - mu), 0.0, 2.0 / m],
        [0.0, 0.0, 0.0, -2.0 * (lam + mu), -2.0 * m * w2],
        [0.0, 0.0, -m * w2, 1.0 / m, -2.0 * lam],
    ])


def moment_forcing(d: Optional[DiffusionCoefficients]) -> np.ndarray:
    """非齐次项 b = (0, 0, 2D_qq, 2D_pp, 2D_pq)"""
    if d is None:
        return np.zeros(5)
    return np.array([0.0, 0.0, 2.0 * d.d_qq, 2.0 * d.d_pp, 2.0 * d.d_pq])


def moment_rhs(
        params: OscillatorParams,
        d: Optional[DiffusionCoefficients],
) -> Callable[[float, np.ndarray], np.ndarray]:
    """矩方程右端 f(t, y)"""
    a = moment_matrix(params)
    b = moment_forcing(d)
    return lambda _t, y: a @ y + b


# ==============================================================================
# 谱分解 T, K
# ==============================================================================
def spectral_decomposition(params: OscillatorParams) -> SpectralDecomposition:
    """T = (1/2iΩ)·[[μ+iΩ, μ−iΩ, 2ω], [μ−iΩ, μ+iΩ, 2ω], [−ω, −ω, −2μ]]，K = diag(−2(λ−iΩ), −2(λ+iΩ), −2λ)"""
    big_omega = require_underdamped(params)
    mu, omega, lam = params.mu, params.omega, params.lambda_
    i_omega = 1j * big_omega
    t_matrix = np.array([
        [mu + i_omega, mu - i_omega, 2.0 * omega],
        [mu - i_omega, mu + i_omega, 2.0 * omega],
        [-omega, -omega, -2.0 * mu],
    ], dtype=complex) / (2.0 * i_omega)
    k_diag = np.array([-2.0 * (lam - i_omega), -2.0 * (lam + i_omega), -2.0 * lam + 0j])
    return SpectralDecomposition(t_matrix=t_matrix, k_diag=k_diag)


def _checked_real(matrix: np.ndarray, label: str) -> np.ndarray:
    scale = max(1.0, float(np.max(np.abs(matrix))))
    residue = float(np.max(np.abs(matrix.imag)))
    if residue > REALITY_TOL * scale:
        raise NumericalFailure(f"{label} 虚部残差 {residue!r} 超过容差 {REALITY_TOL * scale!r}")
    return np.ascontiguousarray(matrix.real)


def propagator(spec: SpectralDecomposition, t: float) -> np.ndarray:
    """复矩阵 T·e^{Kt}·T"""
    return spec.t_matrix @ np.diag(np.exp(spec.k_diag * t)) @ spec.t_matrix


def real_propagator(spec: SpectralDecomposition, t: float) -> np.ndarray:
    """T·e^{Kt}·T 的实部（先校验虚部残差）"""
    return _checked_real(propagator(spec, t), f"T·e^(Kt)·T (t={t!r})")


# ==============================================================================
# 渐近方差
# ==============================================================================
def _require_stationary(params: OscillatorParams) -> None:
    if params.lambda_ == 0.0:
        raise NoStationaryState("lambda = 0 时不存在渐近态 X(∞)（K 不可逆），请使用 RK4 路径")


def asymptotic_moment_vector(params: OscillatorParams, d: DiffusionCoefficients) -> np.ndarray:
    """X(∞) = −(T·K⁻¹·T)·D"""
    _require_stationary(params)
    spec = spectral_decomposition(params)
    t = spec.t_matrix
    x_inf = -(t @ np.diag(1.0 / spec.k_diag) @ t) @ DiffusionVector.from_coefficients(d, params).as_array()
    return _checked_real(x_inf[:, None], "−T·K⁻¹·T·D")[:, 0]


def asymptotic_variances(
        params: OscillatorParams,
        d: DiffusionCoefficients,
        verify: bool = False,
) -> tuple[float, float, float]:
    """
    渐近方差 (σ_qq(∞), σ_pp(∞), σ_pq(∞))，与初态无关

    Args:
        params: 振子参数（需 λ > 0 且欠阻尼）
        d: 扩散系数
        verify: 同时用 −T·K⁻¹·T·D 计算并断言两者一致（1e−10 相对）

    Raises:
        NoStationaryState: λ = 0
        OverdampedRegime: ω ≤ |μ|
        NumericalFailure: verify 模式下两条路径不一致
    """
    _require_stationary(params)
    require_underdamped(params)
    m, omega, lam, mu = params.m, params.omega, params.lambda_, params.mu
    w2 = omega ** 2
    m_omega_sq = (m * omega) ** 2
    denominator = 2.0 * lam * (lam ** 2 + w2 - mu ** 2)

    s_qq = (
        m_omega_sq * (2.0 * lam * (lam + mu) + w2) * d.d_qq
        + w2 * d.d_pp
        + 2.0 * m * w2 * (lam + mu) * d.d_pq
    ) / (m_omega_sq * denominator)
    s_pp = (
        m_omega_sq * w2 * d.d_qq
        + (2.0 * lam * (lam - mu) + w2) * d.d_pp
        - 2.0 * m * w2 * (lam - mu) * d.d_pq
    ) / denominator
    s_pq = (
        -(lam + mu) * m_omega_sq * d.d_qq
        + (lam - mu) * d.d_pp
        + 2.0 * m * (lam ** 2 - mu ** 2) * d.d_pq
    ) / (m * denominator)

    if verify:
        matrix_path = MomentVector.from_array(asymptotic_moment_vector(params, d)).to_covariances(params)
        scale = max(abs(s_qq), abs(s_pp), abs(s_pq))
        for name, explicit, via_matrix in zip(("s_qq", "s_pp", "s_pq"), (s_qq, s_pp, s_pq), matrix_path):
            if abs(explicit - via_matrix) > ASYMPTOTIC_RTOL * max(abs(explicit), scale):
                raise NumericalFailure(f"渐近方差 {name} 两条路径不一致: {explicit!r} vs {via_matrix!r}")
    return s_qq, s_pp, s_pq


# ==============================================================================
# 闭式演化
# ==============================================================================
class ClosedFormEvolution:
    """
    闭式解 X(t) = (T·e^{Kt}·T)(X(0) − X(∞)) + X(∞)

    预先计算 T、K 与 X(∞)，在不同时刻求值互不依赖。
    """

    def __init__(self, params: OscillatorParams, d: DiffusionCoefficients):
        _require_stationary(params)
        require_underdamped(params)
        self.params = params
        self.d = d
        self.spec = spectral_decomposition(params)
        self.x_inf = MomentVector.from_covariances(*asymptotic_variances(params, d), params).as_array()

    def covariances_at(self, state0: GaussianState, t: float) -> tuple[float, float, float]:
        if t == 0.0:
            return state0.covariances
        x0 = MomentVector.from_covariances(*state0.covariances, self.params).as_array()
        x_t = real_propagator(self.spec, t) @ (x0 - self.x_inf) + self.x_inf
        return MomentVector.from_array(x_t).to_covariances(self.params)

    def state_at(self, state0: GaussianState, t: float) -> GaussianState:
        if t == 0.0:
            return state0
        q, p = mean_evolution(self.params, state0.q_mean, state0.p_mean, t)
        s_qq, s_pp, s_pq = self.covariances_at(state0, t)
        return GaussianState(q_mean=q, p_mean=p, s_qq=s_qq, s_pp=s_pp, s_pq=s_pq)

    def provider(self, state0: GaussianState) -> Callable[[float], GaussianState]:
        """t ↦ GaussianState，供 Fokker–Planck 残差等按时间取态"""
        return lambda t: self.state_at(state0, t)


def variance_evolution_closed(
        params: OscillatorParams,
        d: DiffusionCoefficients,
        state0: GaussianState,
        t: float,
) -> tuple[float, float, float]:
    """
    t 时刻的协方差 (σ_qq, σ_pp, σ_pq)

    Raises:
        OverdampedRegime / NoStationaryState / NumericalFailure
    """
    return ClosedFormEvolution(params, d).covariances_at(state0, t)


def evolve_state_closed(
        params: OscillatorParams,
        d: DiffusionCoefficients,
        state0: GaussianState,
        t: float,
) -> GaussianState:
    """t 时刻的完整高斯态（均值 + 协方差）"""
    return ClosedFormEvolution(params, d).state_at(state0, t)


def closed_form_trajectory(
        params: OscillatorParams,
        d: DiffusionCoefficients,
        state0: GaussianState,
        times: Sequence[float],
) -> Trajectory:
    """在给定时刻序列上求闭式解并计算诊断量"""
    evolution = ClosedFormEvolution(params, d)
    times = np.asarray(times, dtype=float)
    states = [evolution.state_at(state0, float(t)) for t in times]
    return Trajectory(
        times=times,
        states=states,
        diagnostics=[diagnose(state, params, d) for state in states],
        integrator="closed",
        warnings=regime_warnings(params),
    )


# ==============================================================================
# RK4 交叉验证
# ==============================================================================
def default_rk4_dt(params: OscillatorParams) -> float:
    """默认步长 1e−3·2π/ω"""
    return 1e-3 * 2.0 * math.pi / params.omega


def _rk4_step_limit(params: OscillatorParams) -> float:
    return RK4_STEP_FACTOR / max(params.lambda_ + abs(params.mu), params.omega)


def integrate_moments_rk4(
        params: OscillatorParams,
        d: Optional[DiffusionCoefficients],
        state0: GaussianState,
        t_grid: Sequence[float],
        dt: Optional[float] = None,
) -> Trajectory:
    """
    定步长经典 RK4 积分五个耦合线性矩方程

    每个采样区间用等长子步恰好积分到采样点（无插值误差）。
    过阻尼区仍可积分，但轨迹会带告警。

    Args:
        params: 振子参数
        d: 扩散系数；None 表示无扩散的封闭系统
        state0: t = 0 时的高斯态
        t_grid: 严格递增、非负的采样时刻
        dt: 步长；缺省为 min(1e−3·2π/ω, 步长上限, 采样间距)

    Raises:
        StepSizeTooLarge: 显式给出的 dt 超过 min(0.05/max(λ+|μ|, ω), 采样间距)
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.ndim != 1 or t_grid.size == 0:
        raise InvalidParameter("t_grid 必须是非空一维数组")
    if t_grid[0] < 0.0 or (t_grid.size > 1 and not np.all(np.diff(t_grid) > 0)):
        raise InvalidParameter("t_grid 必须非负且严格递增")

    spacing = float(np.min(np.diff(t_grid))) if t_grid.size > 1 else math.inf
    limit = min(_rk4_step_limit(params), spacing)
    if dt is None:
        dt = min(default_rk4_dt(params), limit)
    elif not dt > 0.0:
        raise InvalidParameter(f"dt 必须为正: {dt!r}")
    elif dt > limit * (1.0 + 1e-12):
        raise StepSizeTooLarge(f"dt={dt!r} 超过上限 {limit!r}（0.05/max(λ+|μ|, ω) 与采样间距取小）")

    stepper = AffineRK4Stepper(moment_matrix(params), moment_forcing(d), dt)
    y = state0.as_array()
    t_prev = 0.0
    states = []
    for t in t_grid:
        y = stepper.advance(y, float(t) - t_prev)
        t_prev = float(t)
        states.append(GaussianState.from_array(y))

    return Trajectory(
        times=t_grid,
        states=states,
        diagnostics=[diagnose(state, params, d) for state in states],
        integrator="rk4",
        warnings=regime_warnings(params),
    )


def natural_scales(params: OscillatorParams) -> np.ndarray:
    """(q̄, p̄, σ_qq, σ_pp, σ_pq) 的基态量级: √(ħ/mω), √(ħmω), ħ/mω, ħmω, ħ"""
    m_omega = params.m * params.omega
    hbar = params.hbar
    return np.array([
        math.sqrt(hbar / m_omega), math.sqrt(hbar * m_omega), hbar / m_omega, hbar * m_omega, hbar,
    ])


def max_relative_discrepancy(reference: Trajectory, other: Trajectory, params: OscillatorParams) -> float:
    """
    逐列 max|Δ| / max(max|reference 列|, 1e−6·基态量级)，取五列中的最大值

    解析上恒为 0 的列（如 μ = 0 时的 σ_pq）只剩舍入噪声，按基态量级归一。
    """
    a = reference.moments()
    b = other.moments()
    if a.shape != b.shape:
        raise InvalidParameter("两条轨迹的采样点数不一致")
    scale = np.maximum(np.max(np.abs(a), axis=0), DISCREPANCY_FLOOR * natural_scales(params))
    return float(np.max(np.max(np.abs(a - b), axis=0) / scale))
