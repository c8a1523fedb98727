# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：cmd_steady.py
# @Date   ：2026/10/18 11:00
# @Author ：leemysw
# 2026/10/18 11:00   Create
# =====================================================
"""
[INPUT]: 依赖 typer, oscillad.cli.common
[OUTPUT]: 对外提供 steady, pure_coeffs 命令
[POS]: cli 模块的渐近态与保纯族报告命令
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from pathlib import Path
from typing import Optional

import typer

from oscillad.schema.models import OutputFormat
from .common import ConfigOption, OutOption, emit_report, handle_errors, load_simulator

JsonFormatOption = typer.Option(OutputFormat.JSON, "--format", "-f", help="输出格式: json / csv（两列 key,value）")


def steady(
        config: Path = ConfigOption,
        out: Optional[Path] = OutOption,
        fmt: OutputFormat = JsonFormatOption,
):
    """
    [green]▶[/] 渐近方差、det σ、γ、熵与能量

    lambda = 0 时没有渐近态，退出码 3。
    """
    with handle_errors():
        emit_report(load_simulator(config).steady(), out, fmt)


def pure_coeffs(
        config: Path = ConfigOption,
        out: Optional[Path] = OutOption,
        fmt: OutputFormat = JsonFormatOption,
        minimize: bool = typer.Option(
            False,
            "--minimize",
            help="同时在约束流形上数值极小化涨落能量",
        ),
):
    """
    [green]▶[/] 保纯扩散系数、稳态方差、r*、E_min 与单 Lindblad 算符
    """
    with handle_errors():
        emit_report(load_simulator(config).pure_coefficients(minimize=minimize), out, fmt)
