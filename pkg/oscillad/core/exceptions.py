# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：exceptions.py
# @Date   ：2026/10/12 10:20
# @Author ：leemysw
# 2026/10/12 10:20   Create
# =====================================================
"""
[INPUT]: None
[OUTPUT]: 对外提供 OscilladError 异常体系（含 CLI 退出码）
[POS]: core 模块的错误定义，被 core / cli / utils 共同依赖
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from typing import Optional

# ==============================================================================
# 退出码约定: 0 成功 / 2 配置错误 / 3 物理约束违反 / 4 数值失败
# ==============================================================================
EXIT_CONFIG = 2
EXIT_PHYSICS = 3
EXIT_NUMERICAL = 4


class OscilladError(Exception):
    """所有领域错误的基类"""
    exit_code: int = EXIT_NUMERICAL


# ==============================================================================
# 配置错误
# ==============================================================================
class ConfigError(OscilladError):
    """场景文件解析/校验失败，携带行号和键名"""
    exit_code = EXIT_CONFIG

    def __init__(self, message: str, line: Optional[int] = None, key: Optional[str] = None):
        self.line = line
        self.key = key
        location = []
        if line is not None:
            location.append(f"line {line}")
        if key is not None:
            location.append(f"key '{key}'")
        prefix = f"[{', '.join(location)}] " if location else ""
        super().__init__(f"{prefix}{message}")


# ==============================================================================
# 物理约束
# ==============================================================================
class PhysicsConstraintError(OscilladError):
    exit_code = EXIT_PHYSICS


class InvalidParameter(PhysicsConstraintError):
    """参数超出定义域"""


class UncertaintyViolation(PhysicsConstraintError):
    """σ < ħ²/4，违反 Schrödinger–Robertson 不确定关系"""


class OverdampedRegime(PhysicsConstraintError):
    """ω ≤ |μ|（或 Ω² 过小），闭式解与纯态分析不可用"""


class NoStationaryState(PhysicsConstraintError):
    """λ = 0 时不存在 X(∞)"""


class NotOnPureFamily(PhysicsConstraintError):
    """扩散系数不满足 D_pp·D_qq − D_pq² = ħ²λ²/4"""


class ConstraintViolation(PhysicsConstraintError):
    """扩散系数违反基本约束 D_pp·D_qq − D_pq² ≥ λ²ħ²/4"""


# ==============================================================================
# 数值失败
# ==============================================================================
class NumericalFailure(OscilladError):
    exit_code = EXIT_NUMERICAL


class StepSizeTooLarge(NumericalFailure):
    """RK4 步长超过稳定/采样限制"""


class GridTooSmall(NumericalFailure):
    """相空间网格未覆盖 6σ 窗口"""
