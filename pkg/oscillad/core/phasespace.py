# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：phasespace.py
# @Date   ：2026/10/19 11:00
# @Author ：leemysw
# 2026/10/15 22:00   Create
# 2026/10/16 10:15   Density kernel, Fourier round trips
# 2026/10/16 14:30   Fokker–Planck residual with forward difference near t = 0
# 2026/10/19 11:00   Explicit step sizes are no longer replaced by defaults
# =====================================================
"""
[INPUT]: 依赖 numpy, scipy.integrate, scipy.stats, oscillad.core.moments
[OUTPUT]: 对外提供 Wigner 函数与坐标表象密度核的求值、纯度/归一化求积、Fourier 互验、Fokker–Planck 残差
[POS]: core 模块的相空间层，被 simulator 的 wigner / check 流程使用
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

import math
from typing import Callable, Optional, Union

import numpy as np
from scipy.integrate import simpson
from scipy.stats import multivariate_normal

from oscillad.core.exceptions import GridTooSmall, InvalidParameter
from oscillad.core.moments import TOLERANCE, require_underdamped, sigma_det
from oscillad.schema.models import (
    ComplexKernelSample,
    DiffusionCoefficients,
    GaussianState,
    OscillatorParams,
    PhaseSpaceGrid,
)

ArrayLike = Union[float, np.ndarray]

# 求积窗口: 普通积分 6σ，振荡 Fourier 积分 8σ
QUADRATURE_WINDOW_SIGMAS = 6.0
FOURIER_WINDOW_SIGMAS = 8.0
MIN_QUADRATURE_POINTS = 17
# Fokker–Planck 残差分母中的 W 峰值下限系数
FP_FLOOR = 1e-12


def _scalar(value: np.ndarray) -> ArrayLike:
    return value.item() if np.ndim(value) == 0 else value


# ==============================================================================
# Wigner 函数
# ==============================================================================
def wigner_eval(state: GaussianState, params: OscillatorParams, p: ArrayLike, q: ArrayLike) -> ArrayLike:
    """
    一般高斯 Wigner 函数
        W(p,q) = 1/(2π√σ)·exp{−[σ_pp(q−q̄)² + σ_qq(p−p̄)² − 2σ_pq(q−q̄)(p−p̄)]/2σ}

    p, q 可为同形数组（逐点求值）。params 仅为接口一致而保留。
    """
    sigma = sigma_det(state)
    dq = np.asarray(q, dtype=float) - state.q_mean
    dp = np.asarray(p, dtype=float) - state.p_mean
    exponent = (state.s_pp * dq ** 2 + state.s_qq * dp ** 2 - 2.0 * state.s_pq * dq * dp) / (2.0 * sigma)
    return _scalar(np.exp(-exponent) / (2.0 * math.pi * math.sqrt(sigma)))


def ccs_wigner_eval(
        r: float,
        eta: float,
        q_mean: float,
        p_mean: float,
        params: OscillatorParams,
        p: ArrayLike,
        q: ArrayLike,
) -> ArrayLike:
    """关联相干态 (r, η) 的 Wigner 函数，前因子 1/πħ"""
    if not abs(r) < 1.0 or not eta > 0.0:
        raise InvalidParameter(f"需要 |r| < 1 且 eta > 0: r={r!r}, eta={eta!r}")
    hbar = params.hbar
    one_minus_r2 = 1.0 - r ** 2
    dq = np.asarray(q, dtype=float) - q_mean
    dp = np.asarray(p, dtype=float) - p_mean
    exponent = (
        -2.0 * eta ** 2 / hbar ** 2 * dp ** 2
        - dq ** 2 / (2.0 * eta ** 2 * one_minus_r2)
        + 2.0 * r / (hbar * math.sqrt(one_minus_r2)) * dq * dp
    )
    return _scalar(np.exp(exponent) / (math.pi * hbar))


def wigner_grid(state: GaussianState, params: OscillatorParams, grid: PhaseSpaceGrid) -> np.ndarray:
    """
    网格上的 Wigner 函数，形状 (n_q+1, n_p+1)，第一维为 q

    与 wigner_eval 相同的高斯，用二维正态密度批量求值。
    """
    qq, pp = np.meshgrid(grid.q_axis(), grid.p_axis(), indexing="ij")
    distribution = multivariate_normal(
        mean=[state.q_mean, state.p_mean],
        cov=[[state.s_qq, state.s_pq], [state.s_pq, state.s_pp]],
    )
    return distribution.pdf(np.dstack((qq, pp)))


def stationary_wigner(params: OscillatorParams, p: ArrayLike, q: ArrayLike) -> ArrayLike:
    """保纯环境下的渐近 Wigner 函数 W∞ = (1/πħ)·exp[−(p²/m + mω²q² + 2μqp)/ħΩ]"""
    big_omega = require_underdamped(params)
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    quadratic = p ** 2 / params.m + params.m * params.omega ** 2 * q ** 2 + 2.0 * params.mu * q * p
    return _scalar(np.exp(-quadratic / (params.hbar * big_omega)) / (math.pi * params.hbar))


# ==============================================================================
# 坐标表象
# ==============================================================================
def density_kernel(state: GaussianState, params: OscillatorParams, x: ArrayLike, y: ArrayLike) -> ArrayLike:
    """
    一般高斯密度矩阵 ⟨x|ρ|y⟩，u = (x+y)/2 − q̄，v = x − y:

        (1/2πσ_qq)^{1/2}·exp[−u²/2σ_qq − (σ/σ_qq)v²/2ħ² + iσ_pq·u·v/ħσ_qq + i·p̄·v/ħ]
    """
    hbar = params.hbar
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    u = (x + y) / 2.0 - state.q_mean
    v = x - y
    s_qq = state.s_qq
    exponent = (
        -u ** 2 / (2.0 * s_qq)
        - sigma_det(state) / s_qq * v ** 2 / (2.0 * hbar ** 2)
        + 1j * (state.s_pq * u * v / (hbar * s_qq) + state.p_mean * v / hbar)
    )
    return _scalar(np.sqrt(1.0 / (2.0 * math.pi * s_qq)) * np.exp(exponent))


def kernel_sample(state: GaussianState, params: OscillatorParams, x: float, y: float) -> ComplexKernelSample:
    return ComplexKernelSample(x=x, y=y, value=complex(density_kernel(state, params, x, y)))


def ccs_wavefunction(state: GaussianState, params: OscillatorParams, x: ArrayLike) -> ArrayLike:
    """
    纯高斯态波函数
        Ψ(x) = (1/2πσ_qq)^{1/4}·exp[−(1 − 2iσ_pq/ħ)(x−q̄)²/4σ_qq + i·p̄·x/ħ]

    Raises:
        InvalidParameter: 态不是纯态（σ ≠ ħ²/4）
    """
    hbar = params.hbar
    bound = hbar ** 2 / 4.0
    if abs(sigma_det(state) - bound) > TOLERANCE * bound:
        raise InvalidParameter(f"波函数只对纯态有定义: det σ={sigma_det(state)!r}, ħ²/4={bound!r}")
    x = np.asarray(x, dtype=float)
    dx = x - state.q_mean
    exponent = -(1.0 - 2j * state.s_pq / hbar) * dx ** 2 / (4.0 * state.s_qq) + 1j * state.p_mean * x / hbar
    return _scalar((1.0 / (2.0 * math.pi * state.s_qq)) ** 0.25 * np.exp(exponent))


def pure_family_kernel(
        params: OscillatorParams,
        q_mean: float,
        p_mean: float,
        x: ArrayLike,
        y: ArrayLike,
) -> ArrayLike:
    """保纯环境中关联相干态的密度矩阵（方差不随时间变化，均值沿经典轨道）"""
    big_omega = require_underdamped(params)
    hbar, m = params.hbar, params.m
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    u = (x + y) / 2.0 - q_mean
    v = x - y
    exponent = (
        -m * big_omega / hbar * u ** 2
        - m * big_omega / (4.0 * hbar) * v ** 2
        - 1j * m * params.mu / hbar * u * v
        + 1j * p_mean * v / hbar
    )
    return _scalar(np.sqrt(m * big_omega / (math.pi * hbar)) * np.exp(exponent))


def asymptotic_kernel(params: OscillatorParams, x: ArrayLike, y: ArrayLike) -> ArrayLike:
    """t → ∞: (mΩ/πħ)^{1/2}·exp{−m[Ω(x²+y²) + iμ(x²−y²)]/2ħ}"""
    big_omega = require_underdamped(params)
    hbar, m = params.hbar, params.m
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    exponent = -m / (2.0 * hbar) * (big_omega * (x ** 2 + y ** 2) + 1j * params.mu * (x ** 2 - y ** 2))
    return _scalar(np.sqrt(m * big_omega / (math.pi * hbar)) * np.exp(exponent))


# ==============================================================================
# 求积
# ==============================================================================
def _require_window(state: GaussianState, grid: PhaseSpaceGrid, sigmas: float = QUADRATURE_WINDOW_SIGMAS) -> None:
    slack = 1.0 - 1e-12
    for axis, center, halfwidth, mean, variance in (
            ("q", grid.q_center, grid.q_halfwidth, state.q_mean, state.s_qq),
            ("p", grid.p_center, grid.p_halfwidth, state.p_mean, state.s_pp),
    ):
        reach = sigmas * math.sqrt(variance) * slack
        if center - halfwidth > mean - reach or center + halfwidth < mean + reach:
            raise GridTooSmall(
                f"{axis} 方向网格 [{center - halfwidth!r}, {center + halfwidth!r}] 未覆盖均值 ± {sigmas}σ"
            )


def _simpson_2d(values: np.ndarray, grid: PhaseSpaceGrid) -> float:
    return float(simpson(simpson(values, x=grid.p_axis(), axis=1), x=grid.q_axis()))


def wigner_normalization_quadrature(state: GaussianState, params: OscillatorParams, grid: PhaseSpaceGrid) -> float:
    """∫W dp dq（Simpson）"""
    _require_window(state, grid)
    return _simpson_2d(wigner_grid(state, params, grid), grid)


def wigner_purity_quadrature(state: GaussianState, params: OscillatorParams, grid: PhaseSpaceGrid) -> float:
    """
    γ = 2πħ∫W² dp dq（Simpson）

    Raises:
        GridTooSmall: 网格未覆盖均值 ± 6σ
    """
    _require_window(state, grid)
    w = wigner_grid(state, params, grid)
    return 2.0 * math.pi * params.hbar * _simpson_2d(w ** 2, grid)


def kernel_purity_quadrature(state: GaussianState, params: OscillatorParams, n: int = 256) -> float:
    """Tr ρ² = ∫∫|⟨x|ρ|y⟩|² dx dy，x, y ∈ q̄ ± 8√σ_qq"""
    if n < MIN_QUADRATURE_POINTS - 1:
        raise GridTooSmall(f"求积点数过少: {n}")
    halfwidth = FOURIER_WINDOW_SIGMAS * math.sqrt(state.s_qq)
    axis = np.linspace(state.q_mean - halfwidth, state.q_mean + halfwidth, n + 1)
    xx, yy = np.meshgrid(axis, axis, indexing="ij")
    values = np.abs(density_kernel(state, params, xx, yy)) ** 2
    return float(simpson(simpson(values, x=axis, axis=1), x=axis))


def _complex_simpson(values: np.ndarray, axis: np.ndarray) -> complex:
    return complex(simpson(values.real, x=axis), simpson(values.imag, x=axis))


def density_from_wigner_check(
        state: GaussianState,
        params: OscillatorParams,
        x: float,
        y: float,
        quadrature_points: int = 4097,
) -> complex:
    """
    逆 Fourier 变换 ⟨x|ρ|y⟩ = ∫dp e^{ip(x−y)/ħ}·W(p, (x+y)/2) 的数值求积

    积分区间以 q = (x+y)/2 处的条件动量均值为中心，半宽 8√σ_pp。
    """
    if quadrature_points < MIN_QUADRATURE_POINTS:
        raise GridTooSmall(f"求积点数过少: {quadrature_points}")
    u = (x + y) / 2.0
    center = state.p_mean + state.s_pq / state.s_qq * (u - state.q_mean)
    halfwidth = FOURIER_WINDOW_SIGMAS * math.sqrt(state.s_pp)
    p_axis = np.linspace(center - halfwidth, center + halfwidth, quadrature_points)
    integrand = np.exp(1j * p_axis * (x - y) / params.hbar) * wigner_eval(state, params, p_axis, np.full_like(p_axis, u))
    return _complex_simpson(integrand, p_axis)


def wigner_from_density_check(
        state: GaussianState,
        params: OscillatorParams,
        p: float,
        q: float,
        quadrature_points: int = 4097,
) -> float:
    """
    正向变换 W(p,q) = (1/πħ)∫dy ⟨q−y|ρ|q+y⟩·e^{2ipy/ħ}，y ∈ ±8√σ_qq

    返回实部；虚部应在求积误差内为 0。
    """
    if quadrature_points < MIN_QUADRATURE_POINTS:
        raise GridTooSmall(f"求积点数过少: {quadrature_points}")
    halfwidth = FOURIER_WINDOW_SIGMAS * math.sqrt(state.s_qq)
    y_axis = np.linspace(-halfwidth, halfwidth, quadrature_points)
    integrand = density_kernel(state, params, q - y_axis, q + y_axis) * np.exp(2j * p * y_axis / params.hbar)
    return _complex_simpson(integrand, y_axis).real / (math.pi * params.hbar)


# ==============================================================================
# Fokker–Planck 残差
# ==============================================================================
def fokker_planck_residual(
        state_at: Callable[[float], GaussianState],
        params: OscillatorParams,
        d: DiffusionCoefficients,
        t: float,
        p: float,
        q: float,
        h_t: Optional[float] = None,
        h_q: Optional[float] = None,
        h_p: Optional[float] = None,
) -> float:
    """
    高斯解对 Wigner 函数 Fokker–Planck 方程的相对残差

        ∂W/∂t = −(p/m)∂W/∂q + mω²q·∂W/∂p + (λ−μ)∂(qW)/∂q + (λ+μ)∂(pW)/∂p
                + D_qq·∂²W/∂q² + D_pp·∂²W/∂p² + 2D_pq·∂²W/∂p∂q

    全部导数取中心差分；t < h_t 时时间导数改用二阶前向差分。

    Args:
        state_at: t ↦ GaussianState
        params: 振子参数
        d: 扩散系数
        t, p, q: 求值点
        h_t, h_q, h_p: 差分步长，缺省 1e−4/ω、1e−3√σ_qq、1e−3√σ_pp

    Raises:
        InvalidParameter: 显式给出的步长不为正

    Returns:
        |LHS − RHS| / (|∂W/∂t| + Σ|各项| + 1e−12·W_peak)
    """
    state = state_at(t)
    if h_t is None:
        h_t = 1e-4 / params.omega
    if h_q is None:
        h_q = 1e-3 * math.sqrt(state.s_qq)
    if h_p is None:
        h_p = 1e-3 * math.sqrt(state.s_pp)
    if not min(h_t, h_q, h_p) > 0.0:
        raise InvalidParameter(f"差分步长必须为正: h_t={h_t!r}, h_q={h_q!r}, h_p={h_p!r}")

    def w(pp: float, qq: float, s: GaussianState = state) -> float:
        return float(wigner_eval(s, params, pp, qq))

    if t >= h_t:
        dw_dt = (w(p, q, state_at(t + h_t)) - w(p, q, state_at(t - h_t))) / (2.0 * h_t)
    else:
        dw_dt = (-3.0 * w(p, q) + 4.0 * w(p, q, state_at(t + h_t)) - w(p, q, state_at(t + 2.0 * h_t))) / (2.0 * h_t)

    w0 = w(p, q)
    w_qp, w_qm = w(p, q + h_q), w(p, q - h_q)
    w_pp, w_pm = w(p + h_p, q), w(p - h_p, q)

    dw_dq = (w_qp - w_qm) / (2.0 * h_q)
    dw_dp = (w_pp - w_pm) / (2.0 * h_p)
    d_qw_dq = ((q + h_q) * w_qp - (q - h_q) * w_qm) / (2.0 * h_q)
    d_pw_dp = ((p + h_p) * w_pp - (p - h_p) * w_pm) / (2.0 * h_p)
    d2w_dq2 = (w_qp - 2.0 * w0 + w_qm) / h_q ** 2
    d2w_dp2 = (w_pp - 2.0 * w0 + w_pm) / h_p ** 2
    d2w_dpdq = (
        w(p + h_p, q + h_q) - w(p - h_p, q + h_q) - w(p + h_p, q - h_q) + w(p - h_p, q - h_q)
    ) / (4.0 * h_q * h_p)

    lam, mu = params.lambda_, params.mu
    terms = (
        -p / params.m * dw_dq,
        params.m * params.omega ** 2 * q * dw_dp,
        (lam - mu) * d_qw_dq,
        (lam + mu) * d_pw_dp,
        d.d_qq * d2w_dq2,
        d.d_pp * d2w_dp2,
        2.0 * d.d_pq * d2w_dpdq,
    )
    w_peak = 1.0 / (2.0 * math.pi * math.sqrt(sigma_det(state)))
    scale = abs(dw_dt) + sum(abs(term) for term in terms) + FP_FLOOR * w_peak
    return abs(dw_dt - sum(terms)) / scale
