# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：conftest.py
# @Date   ：2026/10/18 14:00
# @Author ：leemysw
# 2026/10/18 14:00   Create
# =====================================================
"""
[INPUT]: 依赖 pytest, numpy
[OUTPUT]: 对外提供共享 fixture 与随机场景构造函数
[POS]: tests 的公共配置
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

import math
from pathlib import Path

import numpy as np
import pytest

from oscillad.schema.models import DiffusionCoefficients, GaussianState, OscillatorParams


# ==============================================================================
# 随机场景
# ==============================================================================
def random_params(rng: np.random.Generator, max_mu_ratio: float = 0.8) -> OscillatorParams:
    """欠阻尼、弱耦合的随机参数"""
    omega = rng.uniform(0.5, 2.0)
    return OscillatorParams(
        m=rng.uniform(0.5, 2.0),
        omega=omega,
        lambda_=rng.uniform(0.01, 0.2) * omega,
        mu=rng.uniform(-max_mu_ratio, max_mu_ratio) * omega,
        hbar=rng.uniform(0.5, 1.5),
    )


def random_coefficients(rng: np.random.Generator, params: OscillatorParams) -> DiffusionCoefficients:
    """满足 D_pp·D_qq − D_pq² ≥ λ²ħ²/4 的随机扩散系数"""
    bound = (params.lambda_ * params.hbar) ** 2 / 4.0
    d_qq = math.sqrt(bound) / (params.m * params.omega) * rng.uniform(0.5, 2.0)
    d_pq = rng.uniform(-1.0, 1.0) * math.sqrt(bound)
    d_pp = (bound + d_pq ** 2) / d_qq * (1.0 + rng.uniform(0.0, 1.0))
    return DiffusionCoefficients(d_qq=d_qq, d_pp=d_pp, d_pq=d_pq)


def random_state(rng: np.random.Generator, params: OscillatorParams, mixedness: float = 1.0) -> GaussianState:
    """σ = ħ²/4·(1 + u)，u ∈ [0, mixedness] 的随机高斯态"""
    m_omega = params.m * params.omega
    s_qq = params.hbar / (2.0 * m_omega) * math.exp(rng.uniform(-0.7, 0.7))
    sigma = params.hbar ** 2 / 4.0 * (1.0 + rng.uniform(0.0, mixedness))
    s_pq = rng.uniform(-0.8, 0.8) * math.sqrt(sigma)
    s_pp = (sigma + s_pq ** 2) / s_qq
    return GaussianState(
        q_mean=rng.uniform(-1.0, 1.0) * math.sqrt(s_qq),
        p_mean=rng.uniform(-1.0, 1.0) * math.sqrt(s_pp),
        s_qq=s_qq,
        s_pp=s_pp,
        s_pq=s_pq,
    )


# ==============================================================================
# Fixtures
# ==============================================================================
@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20261018)


@pytest.fixture
def unit_params() -> OscillatorParams:
    """m = ω = ħ = 1, λ = 0.1, μ = 0"""
    return OscillatorParams(m=1.0, omega=1.0, lambda_=0.1, mu=0.0, hbar=1.0)


@pytest.fixture
def thermal_coefficients() -> DiffusionCoefficients:
    """渐近态恰为 (1, 1, 0) 的扩散系数"""
    return DiffusionCoefficients(d_qq=0.1, d_pp=0.1, d_pq=0.0)


@pytest.fixture
def write_config(tmp_path: Path):
    """把多行文本写成场景文件并返回路径"""

    def _write(text: str, name: str = "scenario.cfg") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


PURE_GROUND = """\
omega = 1
lambda = 0.1
mu = 0
coefficients = pure
initial_state = ground
t_max = 50
samples = 51
"""

PURE_SQUEEZED = """\
# pure family with mu = 0.05
omega = 1
lambda = 0.1
mu = 0.05
coefficients = pure
initial_state = ground
t_max = 40
samples = 41
"""

THERMAL = """\
omega = 1
lambda = 0.1
mu = 0
coefficients = explicit
d_qq = 0.1
d_pp = 0.1
d_pq = 0
initial_state = coherent
q0 = 1.5
p0 = -0.5
t_max = 150
samples = 61
"""
