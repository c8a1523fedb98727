# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：integrator.py
# @Date   ：2026/10/13 14:30
# @Author ：leemysw
# 2026/10/13 14:30   Create
# =====================================================
"""
[INPUT]: 依赖 numpy
[OUTPUT]: 对外提供 rk4_step, linear_rk4_map, AffineRK4Stepper
[POS]: core 模块的定步长经典 RK4，被 dynamics 的交叉验证路径使用
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from typing import Callable

import numpy as np

Rhs = Callable[[float, np.ndarray], np.ndarray]


def rk4_step(f: Rhs, t: float, y: np.ndarray, h: float) -> np.ndarray:
    """经典四阶 Runge-Kutta 单步"""
    k1 = f(t, y)
    k2 = f(t + 0.5 * h, y + 0.5 * h * k1)
    k3 = f(t + 0.5 * h, y + 0.5 * h * k2)
    k4 = f(t + h, y + h * k3)
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def linear_rk4_map(a: np.ndarray, h: float) -> np.ndarray:
    """
    y' = A·y 的 RK4 单步矩阵

    对单位矩阵的每一列执行一次 rk4_step，得到与逐步积分完全一致的传播矩阵。
    """
    identity = np.eye(a.shape[0])
    return rk4_step(lambda _t, y: a @ y, 0.0, identity, h)


class AffineRK4Stepper:
    """
    仿射线性系统 y' = A·y + b 的定步长 RK4

    把 b 并入增广状态 z = (y, 1)，z' = [[A, b], [0, 0]]·z，
    每个采样区间 [t_k, t_{k+1}] 用 n = ⌈Δ/dt⌉ 个等长步恰好落在采样点上。
    """

    def __init__(self, a: np.ndarray, b: np.ndarray, dt: float):
        size = a.shape[0]
        augmented = np.zeros((size + 1, size + 1))
        augmented[:size, :size] = a
        augmented[:size, size] = b
        self._augmented = augmented
        self._size = size
        self.dt = dt
        self._cache: dict[tuple[int, float], np.ndarray] = {}

    def steps_for(self, span: float) -> int:
        return max(1, int(np.ceil(span / self.dt - 1e-12)))

    def _segment_map(self, span: float) -> np.ndarray:
        n = self.steps_for(span)
        h = span / n
        key = (n, h)
        if key not in self._cache:
            one_step = linear_rk4_map(self._augmented, h)
            self._cache[key] = np.linalg.matrix_power(one_step, n)
        return self._cache[key]

    def advance(self, y: np.ndarray, span: float) -> np.ndarray:
        """从当前状态积分 span 时长"""
        if span == 0.0:
            return np.array(y, dtype=float)
        z = np.append(np.asarray(y, dtype=float), 1.0)
        return (self._segment_map(span) @ z)[: self._size]
