# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：config.py
# @Date   ：2026/10/17 11:40
# @Author ：leemysw
# 2026/10/16 17:00   Create
# 2026/10/17 11:40   Reject keys that do not apply to the selected variants
# =====================================================
"""
[INPUT]: 依赖 pydantic 的数据验证, oscillad.schema.models, oscillad.core.exceptions
[OUTPUT]: 对外提供 ScenarioConfig 与 load_config / parse_config
[POS]: utils 模块的场景配置，解析平铺 key = value 文本，被 cli 与 simulator 使用
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

import math
from enum import Enum
from pathlib import Path
from typing import Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from oscillad.core.exceptions import ConfigError
from oscillad.schema.models import (
    UNDERDAMPED_EPS,
    CoefficientMode,
    InitialStateKind,
    Integrator,
    OscillatorParams,
)

# ==============================================================================
# 键表
# ==============================================================================
FLOAT_KEYS = (
    "hbar", "m", "omega", "lambda", "mu",
    "d_qq", "d_pp", "d_pq",
    "q0", "p0", "r", "eta", "s_qq", "s_pp", "s_pq",
    "t_max", "rk4_dt",
)
INT_KEYS = ("samples",)
ENUM_KEYS: dict[str, type[Enum]] = {
    "coefficients": CoefficientMode,
    "initial_state": InitialStateKind,
    "integrator": Integrator,
}
KNOWN_KEYS = frozenset(FLOAT_KEYS + INT_KEYS + tuple(ENUM_KEYS))
REQUIRED_KEYS = ("omega", "lambda", "mu", "t_max")

EXPLICIT_KEYS = ("d_qq", "d_pp", "d_pq")
STATE_KEYS = {
    InitialStateKind.GROUND: (),
    InitialStateKind.COHERENT: ("q0", "p0"),
    InitialStateKind.CCS: ("r", "eta", "q0", "p0"),
    InitialStateKind.CUSTOM: ("s_qq", "s_pp", "s_pq", "q0", "p0"),
}
REQUIRED_STATE_KEYS = {
    InitialStateKind.CCS: ("r",),
    InitialStateKind.CUSTOM: ("s_qq", "s_pp", "s_pq"),
}


# ==============================================================================
# 场景模型
# ==============================================================================
class ScenarioConfig(BaseModel):
    """
    一次运行的完整场景

    只承载数据；扩散系数与初始态由 simulator 按 coefficients / initial_state 推导。
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True, allow_inf_nan=False)

    hbar: float = Field(1.0, gt=0)
    m: float = Field(1.0, gt=0)
    omega: float = Field(gt=0)
    lambda_: float = Field(ge=0, alias="lambda")
    mu: float

    coefficients: CoefficientMode = CoefficientMode.EXPLICIT
    d_qq: Optional[float] = Field(None, gt=0)
    d_pp: Optional[float] = Field(None, gt=0)
    d_pq: Optional[float] = None

    initial_state: InitialStateKind = InitialStateKind.GROUND
    q0: float = 0.0
    p0: float = 0.0
    r: Optional[float] = Field(None, gt=-1, lt=1)
    eta: Optional[float] = Field(None, gt=0)
    s_qq: Optional[float] = Field(None, gt=0)
    s_pp: Optional[float] = Field(None, gt=0)
    s_pq: Optional[float] = None

    t_max: float = Field(gt=0)
    samples: int = Field(200, ge=2)
    integrator: Integrator = Integrator.BOTH
    rk4_dt: Optional[float] = Field(None, gt=0)

    @property
    def params(self) -> OscillatorParams:
        return OscillatorParams(m=self.m, omega=self.omega, lambda_=self.lambda_, mu=self.mu, hbar=self.hbar)

    def times(self) -> np.ndarray:
        """采样时刻 linspace(0, t_max, samples)"""
        return np.linspace(0.0, self.t_max, self.samples)

    def effective_eta(self) -> float:
        """ccs 的 η，缺省 √(ħ/2mω)"""
        if self.eta is not None:
            return self.eta
        return math.sqrt(self.hbar / (2.0 * self.m * self.omega))

    def echo(self) -> dict:
        """按配置文件键名回显（省略未设置项）"""
        return self.model_dump(mode="json", by_alias=True, exclude_none=True)


# ==============================================================================
# 解析
# ==============================================================================
def _parse_value(key: str, raw: str, line: int) -> Union[float, int, Enum]:
    if key in ENUM_KEYS:
        enum_cls = ENUM_KEYS[key]
        try:
            return enum_cls(raw)
        except ValueError:
            allowed = "|".join(member.value for member in enum_cls)
            raise ConfigError(f"取值 {raw!r} 无效，可选 {allowed}", line=line, key=key) from None
    if key in INT_KEYS:
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"需要整数: {raw!r}", line=line, key=key) from None
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(f"需要实数: {raw!r}", line=line, key=key) from None
    if not math.isfinite(value):
        raise ConfigError(f"需要有限实数: {raw!r}", line=line, key=key)
    return value


def _tokenize(text: str) -> tuple[dict[str, Union[float, int, Enum]], dict[str, int]]:
    values: dict[str, Union[float, int, Enum]] = {}
    lines: dict[str, int] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        content = raw_line.split("#", 1)[0].strip()
        if not content:
            continue
        if "=" not in content:
            raise ConfigError(f"缺少 '=': {raw_line.strip()!r}", line=number)
        key, raw = (part.strip() for part in content.split("=", 1))
        if not key:
            raise ConfigError("键名为空", line=number)
        if key not in KNOWN_KEYS:
            raise ConfigError("未知键", line=number, key=key)
        if key in values:
            raise ConfigError(f"重复键（首次出现于第 {lines[key]} 行）", line=number, key=key)
        if not raw:
            raise ConfigError("缺少取值", line=number, key=key)
        values[key] = _parse_value(key, raw, number)
        lines[key] = number
    return values, lines


def _check_variants(values: dict, lines: dict[str, int]) -> None:
    for key in REQUIRED_KEYS:
        if key not in values:
            raise ConfigError("缺少必填键", key=key)

    mode = values.get("coefficients", CoefficientMode.EXPLICIT)
    if mode is CoefficientMode.EXPLICIT:
        for key in EXPLICIT_KEYS:
            if key not in values:
                raise ConfigError("coefficients = explicit 需要 d_qq, d_pp, d_pq", key=key)
    else:
        for key in EXPLICIT_KEYS:
            if key in values:
                raise ConfigError("coefficients = pure 时扩散系数由参数推导，不能显式给出", line=lines[key], key=key)

    kind = values.get("initial_state", InitialStateKind.GROUND)
    allowed = set(STATE_KEYS[kind])
    for key in ("q0", "p0", "r", "eta", "s_qq", "s_pp", "s_pq"):
        if key in values and key not in allowed:
            raise ConfigError(f"initial_state = {kind.value} 不使用此键", line=lines[key], key=key)
    for key in REQUIRED_STATE_KEYS.get(kind, ()):
        if key not in values:
            raise ConfigError(f"initial_state = {kind.value} 需要此键", key=key)


def _check_pure_regime(config: ScenarioConfig, lines: dict[str, int]) -> None:
    if config.coefficients is not CoefficientMode.PURE:
        return
    if config.omega ** 2 - config.mu ** 2 <= UNDERDAMPED_EPS:
        raise ConfigError(
            f"coefficients = pure 需要欠阻尼 omega > |mu|（omega={config.omega!r}, mu={config.mu!r}）",
            line=lines.get("mu"),
            key="mu",
        )
    if not config.lambda_ > 0.0:
        raise ConfigError("coefficients = pure 需要 lambda > 0", line=lines.get("lambda"), key="lambda")


def parse_config(text: str) -> ScenarioConfig:
    """
    解析平铺 key = value 文本

    Raises:
        ConfigError: 语法、未知/重复键、缺失必填键、变体不匹配、取值越界
    """
    values, lines = _tokenize(text)
    _check_variants(values, lines)
    try:
        config = ScenarioConfig.model_validate(values)
    except ValidationError as exc:
        error = exc.errors()[0]
        key = str(error["loc"][0]) if error["loc"] else None
        if key == "lambda_":
            key = "lambda"
        raise ConfigError(error["msg"], line=lines.get(key) if key else None, key=key) from None
    _check_pure_regime(config, lines)
    return config


def load_config(path: Union[str, Path]) -> ScenarioConfig:
    """读取场景文件"""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"无法读取配置文件 {path}: {exc.strerror or exc}") from None
    return parse_config(text)
