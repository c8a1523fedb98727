# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：models.py
# @Date   ：2026/10/14 16:40
# @Author ：leemysw
# 2026/10/12 10:30   Create
# 2026/10/13 21:10   Add moment/diffusion vectors and spectral types
# 2026/10/14 16:40   Add phase-space grid and trajectory containers
# =====================================================
"""
[INPUT]: 依赖 pydantic 的数据验证框架, numpy
[OUTPUT]: 对外提供振子参数、扩散系数、高斯态、轨迹等领域类型与枚举
[POS]: schema 模块的核心定义，被 core / cli / utils 依赖
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# Ω² ≤ 此值视为临界/过阻尼
UNDERDAMPED_EPS = 1e-12


# ==============================================================================
# 枚举类型
# ==============================================================================
class CoefficientMode(Enum):
    """扩散系数来源"""
    EXPLICIT = "explicit"
    PURE = "pure"


class InitialStateKind(Enum):
    """初始态类型"""
    GROUND = "ground"
    COHERENT = "coherent"
    CCS = "ccs"
    CUSTOM = "custom"


class Integrator(Enum):
    """演化路径"""
    CLOSED = "closed"
    RK4 = "rk4"
    BOTH = "both"


class OutputFormat(Enum):
    """输出格式"""
    CSV = "csv"
    JSON = "json"


class SweepParam(Enum):
    """可扫描的标量参数"""
    LAMBDA = "lambda"
    MU = "mu"
    OMEGA = "omega"
    D_QQ = "d_qq"
    D_PP = "d_pp"
    D_PQ = "d_pq"


# ==============================================================================
# 物理参数
# ==============================================================================
class OscillatorParams(BaseModel):
    """
    振子与环境耦合常数

    lambda 是 Python 关键字，字段名为 lambda_，别名 "lambda"。
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True, allow_inf_nan=False)

    m: float = Field(1.0, gt=0)
    omega: float = Field(gt=0)
    lambda_: float = Field(0.0, ge=0, alias="lambda")
    mu: float = 0.0
    hbar: float = Field(1.0, gt=0)

    @property
    def omega_sq(self) -> float:
        """Ω² = ω² − μ²"""
        return self.omega ** 2 - self.mu ** 2

    @property
    def big_omega(self) -> float:
        """Ω（过阻尼时为 0）"""
        return math.sqrt(max(self.omega_sq, 0.0))

    @property
    def is_underdamped(self) -> bool:
        return self.omega_sq > UNDERDAMPED_EPS


class DiffusionCoefficients(BaseModel):
    """环境扩散系数 (D_qq, D_pp, D_pq)"""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    d_qq: float = Field(gt=0)
    d_pp: float = Field(gt=0)
    d_pq: float = 0.0

    @property
    def determinant(self) -> float:
        return self.d_pp * self.d_qq - self.d_pq ** 2

    def constraint_residual(self, params: OscillatorParams) -> float:
        """D_pp·D_qq − D_pq² − λ²ħ²/4，非负即满足基本约束"""
        return self.determinant - (params.lambda_ * params.hbar) ** 2 / 4.0

    def satisfies_constraint(self, params: OscillatorParams, rtol: float = 1e-9) -> bool:
        bound = (params.lambda_ * params.hbar) ** 2 / 4.0
        return self.constraint_residual(params) >= -rtol * max(bound, abs(self.determinant))


class GaussianState(BaseModel):
    """
    五参数高斯态: 均值 (q̄, p̄) 与协方差 (σ_qq, σ_pp, σ_pq)

    构造时只校验与 ħ 无关的不变量；不确定关系需结合 OscillatorParams，
    由 core.moments.check_uncertainty 校验。
    """
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    q_mean: float = 0.0
    p_mean: float = 0.0
    s_qq: float = Field(gt=0)
    s_pp: float = Field(gt=0)
    s_pq: float = 0.0

    @model_validator(mode="after")
    def check_correlation(self) -> "GaussianState":
        if self.s_pq ** 2 >= self.s_pp * self.s_qq:
            raise ValueError(f"|r| ≥ 1: s_pq={self.s_pq}, s_qq={self.s_qq}, s_pp={self.s_pp}")
        return self

    @property
    def covariances(self) -> tuple[float, float, float]:
        return self.s_qq, self.s_pp, self.s_pq

    @property
    def sigma(self) -> float:
        return self.s_pp * self.s_qq - self.s_pq ** 2

    def as_array(self) -> np.ndarray:
        """(q̄, p̄, σ_qq, σ_pp, σ_pq)"""
        return np.array([self.q_mean, self.p_mean, self.s_qq, self.s_pp, self.s_pq], dtype=float)

    @classmethod
    def from_array(cls, values) -> "GaussianState":
        q, p, s_qq, s_pp, s_pq = (float(v) for v in values)
        return cls(q_mean=q, p_mean=p, s_qq=s_qq, s_pp=s_pp, s_pq=s_pq)


# ==============================================================================
# 向量化表示 X 与 D
# ==============================================================================
class MomentVector(BaseModel):
    """X = (mω·σ_qq, σ_pp/mω, σ_pq)，单位均为作用量"""
    model_config = ConfigDict(frozen=True)

    x1: float
    x2: float
    x3: float

    @classmethod
    def from_covariances(cls, s_qq: float, s_pp: float, s_pq: float, params: OscillatorParams) -> "MomentVector":
        m_omega = params.m * params.omega
        return cls(x1=m_omega * s_qq, x2=s_pp / m_omega, x3=s_pq)

    @classmethod
    def from_array(cls, values) -> "MomentVector":
        x1, x2, x3 = (float(v) for v in values)
        return cls(x1=x1, x2=x2, x3=x3)

    def to_covariances(self, params: OscillatorParams) -> tuple[float, float, float]:
        m_omega = params.m * params.omega
        return self.x1 / m_omega, self.x2 * m_omega, self.x3

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3], dtype=float)


class DiffusionVector(BaseModel):
    """D = (2mω·D_qq, 2D_pp/mω, 2D_pq)"""
    model_config = ConfigDict(frozen=True)

    d1: float
    d2: float
    d3: float

    @classmethod
    def from_coefficients(cls, d: DiffusionCoefficients, params: OscillatorParams) -> "DiffusionVector":
        m_omega = params.m * params.omega
        return cls(d1=2.0 * m_omega * d.d_qq, d2=2.0 * d.d_pp / m_omega, d3=2.0 * d.d_pq)

    def as_array(self) -> np.ndarray:
        return np.array([self.d1, self.d2, self.d3], dtype=float)


@dataclass(frozen=True)
class SpectralDecomposition:
    """T（3×3 复矩阵，T² = I）与 K 的对角元 (−2(λ−iΩ), −2(λ+iΩ), −2λ)"""
    t_matrix: np.ndarray
    k_diag: np.ndarray


# ==============================================================================
# 纯态族与单 Lindblad 算符
# ==============================================================================
class PureFamily(BaseModel):
    """保纯扩散系数及其对应的稳态"""
    model_config = ConfigDict(frozen=True)

    coefficients: DiffusionCoefficients
    stationary_state: GaussianState
    e_min: float = Field(gt=0)
    r_star: float


@dataclass(frozen=True)
class LindbladOperatorCoefficients:
    """V = a·p̂ + b·q̂"""
    a: complex
    b: complex

    def reconstruct(self, hbar: float) -> tuple[float, float, float, float]:
        """返回 (D_qq, D_pp, D_pq, λ)"""
        a_conj_b = self.a.conjugate() * self.b
        return (
            hbar * abs(self.a) ** 2 / 2.0,
            hbar * abs(self.b) ** 2 / 2.0,
            -hbar * a_conj_b.real / 2.0,
            -a_conj_b.imag,
        )

    def commutator(self, hbar: float) -> float:
        """[V, V†] = 2ħ·Im(a·b*)"""
        return 2.0 * hbar * (self.a * self.b.conjugate()).imag


# ==============================================================================
# 相空间
# ==============================================================================
class PhaseSpaceGrid(BaseModel):
    """均匀网格；n_q / n_p 为区间数（偶数），轴上共 n+1 个点，适配 Simpson"""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    q_center: float = 0.0
    p_center: float = 0.0
    q_halfwidth: float = Field(gt=0)
    p_halfwidth: float = Field(gt=0)
    n_q: int = Field(128, ge=16)
    n_p: int = Field(128, ge=16)

    @field_validator("n_q", "n_p")
    @classmethod
    def check_even(cls, value: int) -> int:
        if value % 2:
            raise ValueError(f"网格区间数必须为偶数: {value}")
        return value

    @classmethod
    def around(cls, state: GaussianState, extent_sigmas: float = 6.0, n: int = 128) -> "PhaseSpaceGrid":
        """以态均值为中心、半宽为 extent_sigmas 个标准差的网格"""
        n_even = max(16, n + (n % 2))
        return cls(
            q_center=state.q_mean,
            p_center=state.p_mean,
            q_halfwidth=extent_sigmas * math.sqrt(state.s_qq),
            p_halfwidth=extent_sigmas * math.sqrt(state.s_pp),
            n_q=n_even,
            n_p=n_even,
        )

    def q_axis(self) -> np.ndarray:
        return np.linspace(self.q_center - self.q_halfwidth, self.q_center + self.q_halfwidth, self.n_q + 1)

    def p_axis(self) -> np.ndarray:
        return np.linspace(self.p_center - self.p_halfwidth, self.p_center + self.p_halfwidth, self.n_p + 1)


@dataclass(frozen=True)
class ComplexKernelSample:
    """⟨x|ρ|y⟩ 采样点"""
    x: float
    y: float
    value: complex


# ==============================================================================
# 轨迹
# ==============================================================================
@dataclass(frozen=True)
class Diagnostics:
    """单个采样点的标量诊断量"""
    det_sigma: float
    gamma: float
    r: float
    entropy_vn: float
    entropy_linear: float
    energy: float
    pure_residual: Optional[float]  # 闭合系统 (d=None) 时无定义
    entropy_rate_pure: Optional[float]
    rate_reliable: bool  # γ ≥ 0.99 时纯态近似的熵产生率才可信


@dataclass
class Trajectory:
    """按时间排列的高斯态采样及诊断量"""
    times: np.ndarray
    states: list[GaussianState]
    diagnostics: list[Diagnostics]
    integrator: str = "closed"
    warnings: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        if not (len(self.times) == len(self.states) == len(self.diagnostics)):
            raise ValueError("times / states / diagnostics 长度不一致")
        if len(self.times) > 1 and not np.all(np.diff(self.times) > 0):
            raise ValueError("times 必须严格递增")

    def __len__(self) -> int:
        return len(self.times)

    def moments(self) -> np.ndarray:
        """(N, 5) 数组: q̄, p̄, σ_qq, σ_pp, σ_pq"""
        return np.array([state.as_array() for state in self.states])

