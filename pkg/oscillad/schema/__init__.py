# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：__init__.py
# @Date   ：2026/10/12 10:30
# @Author ：leemysw
# 2026/10/12 10:30   Create
# =====================================================
"""
[INPUT]: None
[OUTPUT]: 对外提供所有数据模型
[POS]: schema 模块入口
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from oscillad.schema.models import (
    UNDERDAMPED_EPS,
    CoefficientMode,
    ComplexKernelSample,
    Diagnostics,
    DiffusionCoefficients,
    DiffusionVector,
    GaussianState,
    InitialStateKind,
    Integrator,
    LindbladOperatorCoefficients,
    MomentVector,
    OscillatorParams,
    OutputFormat,
    PhaseSpaceGrid,
    PureFamily,
    SpectralDecomposition,
    SweepParam,
    Trajectory,
)

__all__ = [
    "UNDERDAMPED_EPS",
    "CoefficientMode",
    "ComplexKernelSample",
    "Diagnostics",
    "DiffusionCoefficients",
    "DiffusionVector",
    "GaussianState",
    "InitialStateKind",
    "Integrator",
    "LindbladOperatorCoefficients",
    "MomentVector",
    "OscillatorParams",
    "OutputFormat",
    "PhaseSpaceGrid",
    "PureFamily",
    "SpectralDecomposition",
    "SweepParam",
    "Trajectory",
]
