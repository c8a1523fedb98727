# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：simulator.py
# @Date   ：2026/10/17 18:30
# @Author ：leemysw
# 2026/10/17 14:00   Create
# 2026/10/17 16:45   Fall back to RK4 when the closed form is unavailable
# 2026/10/17 18:30   Parallel sweep with ordered collection
# =====================================================
"""
[INPUT]: 依赖 oscillad.core 各计算层, oscillad.utils.config, oscillad.utils.progress
[OUTPUT]: 对外提供 OscillatorSimulator、RunReport、ConstraintCheck 及各命令的输出列
[POS]: core 模块的场景编排，是 CLI 与库调用的主要入口
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np
from pydantic import ValidationError

from oscillad.core.diagnostics import diagnose
from oscillad.core.dynamics import (
    WEAK_COUPLING_RATIO,
    asymptotic_variances,
    closed_form_trajectory,
    evolve_state_closed,
    integrate_moments_rk4,
    max_relative_discrepancy,
)
from oscillad.core.exceptions import (
    ConfigError,
    ConstraintViolation,
    InvalidParameter,
    OscilladError,
)
from oscillad.core.moments import (
    TOLERANCE,
    check_uncertainty,
    coherent_state,
    correlated_coherent_state,
    ground_state,
    is_translation_invariant,
    pure_condition_residual,
    sigma_det,
    uncertainty_margin,
)
from oscillad.core.phasespace import (
    QUADRATURE_WINDOW_SIGMAS,
    wigner_eval,
    wigner_normalization_quadrature,
    wigner_purity_quadrature,
)
from oscillad.core.purity import (
    minimize_energy_on_pure_manifold,
    on_pure_family,
    pure_family,
    purity_preserving_coefficients,
    single_lindblad_operator,
)
from oscillad.schema.models import (
    CoefficientMode,
    DiffusionCoefficients,
    GaussianState,
    InitialStateKind,
    Integrator,
    OscillatorParams,
    PhaseSpaceGrid,
    SweepParam,
    Trajectory,
)
from oscillad.utils.config import ScenarioConfig, load_config
from oscillad.utils.progress import ProgressManager

# ==============================================================================
# 输出列（精确契约）
# ==============================================================================
EVOLVE_COLUMNS = (
    "t", "q_mean", "p_mean", "sigma_qq", "sigma_pp", "sigma_pq", "det_sigma",
    "gamma", "entropy_vn", "entropy_linear", "energy", "pure_residual", "entropy_rate_pure",
)
WIGNER_COLUMNS = ("p", "q", "w")
SWEEP_COLUMNS = (
    "sigma_qq", "sigma_pp", "sigma_pq", "det_sigma", "gamma", "entropy_vn", "energy", "r", "entropy_rate_pure", "error",
)

# 扫描参数到 ScenarioConfig 字段名
SWEEP_FIELDS = {
    SweepParam.LAMBDA: "lambda_",
    SweepParam.MU: "mu",
    SweepParam.OMEGA: "omega",
    SweepParam.D_QQ: "d_qq",
    SweepParam.D_PP: "d_pp",
    SweepParam.D_PQ: "d_pq",
}


@dataclass(frozen=True)
class ConstraintCheck:
    """单项约束检查；required=False 的项只作提示，不影响退出码"""
    name: str
    passed: bool
    residual: Optional[float]
    required: bool = True

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        residual = "n/a" if self.residual is None else repr(float(self.residual))
        suffix = "" if self.required else " (informational)"
        return f"{verdict} {self.name} residual={residual}{suffix}"


@dataclass
class RunReport:
    """一次命令执行的全部结果"""
    config: dict[str, Any]
    header: tuple[str, ...] = ()
    rows: list[tuple] = field(default_factory=list)
    footer: dict[str, Any] = field(default_factory=dict)
    payload: dict[str, Any] = field(default_factory=dict)
    checks: list[ConstraintCheck] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks if check.required)


def _describe(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        return f"{location}: {first['msg']}" if location else first["msg"]
    return str(exc)


class OscillatorSimulator:
    """
    场景编排器

    由 ScenarioConfig 推导参数、扩散系数与初始态，并为每个命令生成 RunReport。

    使用示例：
        simulator = OscillatorSimulator.from_file("scenario.cfg")
        report = simulator.evolve()
    """

    def __init__(self, config: ScenarioConfig, progress: Optional[ProgressManager] = None):
        self.config = config
        self.progress = progress or ProgressManager(silent=True)

    @classmethod
    def from_file(cls, path: Union[str, Path], progress: Optional[ProgressManager] = None) -> "OscillatorSimulator":
        return cls(load_config(path), progress=progress)

    # -------------------------------------------------------------------------
    # 场景推导
    # -------------------------------------------------------------------------

    @property
    def params(self) -> OscillatorParams:
        return self.config.params

    def diffusion(self) -> DiffusionCoefficients:
        """显式系数，或由参数推导的保纯系数"""
        config = self.config
        if config.coefficients is CoefficientMode.PURE:
            return purity_preserving_coefficients(self.params)
        try:
            return DiffusionCoefficients(d_qq=config.d_qq, d_pp=config.d_pp, d_pq=config.d_pq)
        except ValidationError as exc:
            raise InvalidParameter(f"扩散系数无效: {_describe(exc)}") from None

    def initial_state(self, validate: bool = True) -> GaussianState:
        """
        t = 0 的高斯态

        Args:
            validate: 同时校验 σ ≥ ħ²/4（check 命令关闭此项，改为逐项报告）
        """
        config, params = self.config, self.params
        kind = config.initial_state
        if kind is InitialStateKind.GROUND:
            state = ground_state(params)
        elif kind is InitialStateKind.COHERENT:
            state = coherent_state(config.q0, config.p0, params)
        elif kind is InitialStateKind.CCS:
            state = correlated_coherent_state(config.r, config.effective_eta(), config.q0, config.p0, params)
        else:
            try:
                state = GaussianState(
                    q_mean=config.q0, p_mean=config.p0, s_qq=config.s_qq, s_pp=config.s_pp, s_pq=config.s_pq,
                )
            except ValidationError as exc:
                raise InvalidParameter(f"初始态无效: {_describe(exc)}") from None
        if validate:
            check_uncertainty(state, params)
        return state

    def require_constraint(self, d: DiffusionCoefficients) -> None:
        """
        Raises:
            ConstraintViolation: D_pp·D_qq − D_pq² < λ²ħ²/4
        """
        if not d.satisfies_constraint(self.params):
            raise ConstraintViolation(
                f"扩散系数违反完全正性约束 D_pp·D_qq − D_pq² ≥ λ²ħ²/4: 残差 {d.constraint_residual(self.params)!r}"
            )

    def _closed_form_available(self) -> bool:
        return self.params.lambda_ > 0.0 and self.params.is_underdamped

    # -------------------------------------------------------------------------
    # evolve
    # -------------------------------------------------------------------------

    def trajectory(self) -> tuple[Trajectory, dict[str, Any], list[str]]:
        """按 integrator 选择演化路径，返回 (轨迹, 页脚, 告警)"""
        params, config = self.params, self.config
        d = self.diffusion()
        self.require_constraint(d)
        state0 = self.initial_state()
        times = config.times()
        footer: dict[str, Any] = {}
        warnings: list[str] = []

        if config.integrator is Integrator.CLOSED:
            trajectory = closed_form_trajectory(params, d, state0, times)
        elif config.integrator is Integrator.RK4:
            trajectory = integrate_moments_rk4(params, d, state0, times, dt=config.rk4_dt)
        elif self._closed_form_available():
            trajectory = closed_form_trajectory(params, d, state0, times)
            oracle = integrate_moments_rk4(params, d, state0, times, dt=config.rk4_dt)
            footer["max_rel_discrepancy"] = max_relative_discrepancy(trajectory, oracle, params)
        else:
            warnings.append("闭式解不可用（lambda = 0 或过阻尼），integrator = both 改用 RK4")
            trajectory = integrate_moments_rk4(params, d, state0, times, dt=config.rk4_dt)

        footer = {"integrator": trajectory.integrator, **footer}
        warnings.extend(trajectory.warnings)
        return trajectory, footer, warnings

    def evolve(self) -> RunReport:
        """逐采样点的矩与诊断量"""
        trajectory, footer, warnings = self.trajectory()
        rows = [
            (
                float(t), *(float(v) for v in state.as_array()),
                diag.det_sigma, diag.gamma, diag.entropy_vn, diag.entropy_linear, diag.energy,
                diag.pure_residual, diag.entropy_rate_pure,
            )
            for t, state, diag in zip(trajectory.times, trajectory.states, trajectory.diagnostics)
        ]
        return RunReport(config=self.config.echo(), header=EVOLVE_COLUMNS, rows=rows, footer=footer, warnings=warnings)

    # -------------------------------------------------------------------------
    # steady / pure-coeffs
    # -------------------------------------------------------------------------

    def steady_state(self) -> tuple[GaussianState, DiffusionCoefficients]:
        """渐近态（两条计算路径互验）"""
        params = self.params
        d = self.diffusion()
        self.require_constraint(d)
        s_qq, s_pp, s_pq = asymptotic_variances(params, d, verify=True)
        try:
            state = GaussianState(s_qq=s_qq, s_pp=s_pp, s_pq=s_pq)
        except ValidationError as exc:
            raise InvalidParameter(f"渐近方差无效: {_describe(exc)}") from None
        check_uncertainty(state, params)
        return state, d

    def steady(self) -> RunReport:
        state, d = self.steady_state()
        diag = diagnose(state, self.params, d)
        payload = {
            "sigma_qq": state.s_qq,
            "sigma_pp": state.s_pp,
            "sigma_pq": state.s_pq,
            "det_sigma": diag.det_sigma,
            "gamma": diag.gamma,
            "entropy_vn": diag.entropy_vn,
            "entropy_linear": diag.entropy_linear,
            "energy": diag.energy,
            "r": diag.r,
        }
        return RunReport(config=self.config.echo(), payload=payload, warnings=self._regime_warnings())

    def pure_coefficients(self, minimize: bool = False) -> RunReport:
        """
        保纯族报告：系数、稳态方差、r*、E_min、行列式检查与单算符系数

        Args:
            minimize: 同时在约束流形上数值极小化能量并报告偏差
        """
        params = self.params
        family = pure_family(params)
        d = family.coefficients
        operator = single_lindblad_operator(params, d)
        d_qq, d_pp, d_pq, lam = operator.reconstruct(params.hbar)
        target = (params.hbar * params.lambda_) ** 2 / 4.0
        state = family.stationary_state

        payload: dict[str, Any] = {
            "d_qq": d.d_qq,
            "d_pp": d.d_pp,
            "d_pq": d.d_pq,
            "sigma_qq": state.s_qq,
            "sigma_pp": state.s_pp,
            "sigma_pq": state.s_pq,
            "r_star": family.r_star,
            "e_min": family.e_min,
            "determinant_check": {
                "det_d": d.determinant,
                "target": target,
                "residual": d.determinant - target,
                "on_pure_family": on_pure_family(d, params),
            },
            "lindblad_operator": {
                "a_re": operator.a.real,
                "a_im": operator.a.imag,
                "b_re": operator.b.real,
                "b_im": operator.b.imag,
                "commutator": operator.commutator(params.hbar),
                "reconstructed": {"d_qq": d_qq, "d_pp": d_pp, "d_pq": d_pq, "lambda": lam},
            },
        }
        if minimize:
            best, energy = minimize_energy_on_pure_manifold(params)
            payload["numeric_minimum"] = {
                "d_qq": best.d_qq,
                "d_pp": best.d_pp,
                "d_pq": best.d_pq,
                "energy": energy,
                "energy_error": energy - family.e_min,
            }
        return RunReport(config=self.config.echo(), payload=payload, warnings=self._regime_warnings())

    def _regime_warnings(self) -> list[str]:
        params = self.params
        if params.lambda_ > WEAK_COUPLING_RATIO * params.omega:
            return [f"lambda={params.lambda_!r} > {WEAK_COUPLING_RATIO}·omega，弱耦合假设可能不成立"]
        return []

    # -------------------------------------------------------------------------
    # check
    # -------------------------------------------------------------------------

    def check(self) -> RunReport:
        """逐项检查约束；必选项全部通过时 report.ok 为 True"""
        params = self.params
        d = self.diffusion()
        state = self.initial_state(validate=False)
        bound = params.hbar ** 2 / 4.0
        margin = uncertainty_margin(state, params)
        condition = pure_condition_residual(d, params, state)
        condition_scale = max(params.hbar ** 2 * params.lambda_ / 2.0, abs(condition), np.finfo(float).tiny)
        omega_sq = params.omega_sq

        checks = [
            ConstraintCheck("complete_positivity", d.satisfies_constraint(params), d.constraint_residual(params)),
            ConstraintCheck("uncertainty", margin >= -TOLERANCE * bound, margin),
            ConstraintCheck("pure_state_condition", condition >= -TOLERANCE * condition_scale, condition),
            ConstraintCheck("purity_equality", abs(margin) <= TOLERANCE * bound, margin, required=False),
            ConstraintCheck("pure_family", on_pure_family(d, params), d.constraint_residual(params), required=False),
            ConstraintCheck("underdamped", params.is_underdamped, omega_sq, required=False),
            ConstraintCheck(
                "weak_coupling",
                params.lambda_ <= WEAK_COUPLING_RATIO * params.omega,
                params.lambda_ - WEAK_COUPLING_RATIO * params.omega,
                required=False,
            ),
            ConstraintCheck(
                "translation_invariance", is_translation_invariant(params), params.mu - params.lambda_, required=False,
            ),
        ]
        return RunReport(config=self.config.echo(), checks=checks)

    # -------------------------------------------------------------------------
    # wigner
    # -------------------------------------------------------------------------

    def state_at(self, t: float) -> tuple[GaussianState, list[str]]:
        """t 时刻的态；闭式解不可用时退回 RK4"""
        if t < 0.0:
            raise InvalidParameter(f"t 必须非负: {t!r}")
        params = self.params
        d = self.diffusion()
        self.require_constraint(d)
        state0 = self.initial_state()
        if t == 0.0:
            return state0, []
        if self._closed_form_available():
            return evolve_state_closed(params, d, state0, t), []
        trajectory = integrate_moments_rk4(params, d, state0, [t], dt=self.config.rk4_dt)
        return trajectory.states[0], ["闭式解不可用（lambda = 0 或过阻尼），改用 RK4 求 t 时刻的态", *trajectory.warnings]

    def wigner(self, t: float, n: int, extent_sigmas: float) -> RunReport:
        """
        n×n 网格上的 Wigner 函数（以 t 时刻均值为中心，半宽 extent_sigmas 个标准差）

        页脚附带 Simpson 求积的纯度与归一化。
        """
        if n < 2:
            raise InvalidParameter(f"网格点数至少为 2: {n}")
        if not extent_sigmas > 0.0:
            raise InvalidParameter(f"extent_sigmas 必须为正: {extent_sigmas!r}")
        params = self.params
        state, warnings = self.state_at(t)

        q_half = extent_sigmas * math.sqrt(state.s_qq)
        p_half = extent_sigmas * math.sqrt(state.s_pp)
        q_axis = np.linspace(state.q_mean - q_half, state.q_mean + q_half, n)
        p_axis = np.linspace(state.p_mean - p_half, state.p_mean + p_half, n)
        qq, pp = np.meshgrid(q_axis, p_axis, indexing="ij")
        values = wigner_eval(state, params, pp, qq)
        rows = [
            (float(pp[i, j]), float(qq[i, j]), float(values[i, j]))
            for i in range(n)
            for j in range(n)
        ]

        quadrature_grid = PhaseSpaceGrid.around(state, max(extent_sigmas, QUADRATURE_WINDOW_SIGMAS), n)
        footer = {
            "t": float(t),
            "purity_quadrature": wigner_purity_quadrature(state, params, quadrature_grid),
            "purity_analytic": params.hbar / (2.0 * math.sqrt(sigma_det(state))),
            "normalization_quadrature": wigner_normalization_quadrature(state, params, quadrature_grid),
        }
        return RunReport(config=self.config.echo(), header=WIGNER_COLUMNS, rows=rows, footer=footer, warnings=warnings)

    # -------------------------------------------------------------------------
    # sweep
    # -------------------------------------------------------------------------

    def sweep(self, param: SweepParam, start: float, stop: float, steps: int, workers: int = 1) -> RunReport:
        """
        扫描单个标量参数，每个取值一行渐近态摘要

        违反约束的取值保留该行，诊断列为空，error 列给出原因。

        Raises:
            ConfigError: 在 coefficients = pure 下扫描 d_*
        """
        if steps < 1:
            raise InvalidParameter(f"steps 至少为 1: {steps}")
        if workers < 1:
            raise InvalidParameter(f"workers 至少为 1: {workers}")
        if param in (SweepParam.D_QQ, SweepParam.D_PP, SweepParam.D_PQ) \
                and self.config.coefficients is CoefficientMode.PURE:
            raise ConfigError("扫描扩散系数需要 coefficients = explicit", key=param.value)

        values = [float(v) for v in np.linspace(start, stop, steps)]
        field_name = SWEEP_FIELDS[param]

        with self.progress.bar(f"sweep {param.value}", len(values)) as advance:
            def evaluate(value: float) -> tuple:
                try:
                    return (value, *self._sweep_row(field_name, value), None)
                except (OscilladError, ValidationError) as exc:
                    return (value, *([None] * (len(SWEEP_COLUMNS) - 1)), _describe(exc))
                finally:
                    advance()

            with ThreadPoolExecutor(max_workers=workers) as executor:
                rows = list(executor.map(evaluate, values))

        return RunReport(config=self.config.echo(), header=(param.value, *SWEEP_COLUMNS), rows=rows)

    def _sweep_row(self, field_name: str, value: float) -> tuple:
        scenario = self.config.model_copy(update={field_name: value})
        simulator = OscillatorSimulator(scenario)
        state, d = simulator.steady_state()
        params = simulator.params
        diag = diagnose(state, params, d)
        return (
            state.s_qq, state.s_pp, state.s_pq,
            diag.det_sigma, diag.gamma, diag.entropy_vn, diag.energy, diag.r, diag.entropy_rate_pure,
        )
