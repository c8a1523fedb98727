# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：cmd_evolve.py
# @Date   ：2026/10/18 10:40
# @Author ：leemysw
# 2026/10/18 10:40   Create
# =====================================================
"""
[INPUT]: 依赖 typer, oscillad.cli.common
[OUTPUT]: 对外提供 evolve 命令
[POS]: cli 模块的时间演化命令
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from pathlib import Path
from typing import Optional

from oscillad.schema.models import OutputFormat
from .common import ConfigOption, FormatOption, OutOption, emit_report, handle_errors, load_simulator


def evolve(
        config: Path = ConfigOption,
        out: Optional[Path] = OutOption,
        fmt: OutputFormat = FormatOption,
):
    """
    [green]▶[/] 逐采样点输出矩与诊断量


    integrator = both 时同时运行 RK4，并在页脚给出 max_rel_discrepancy。

    示例:

        oscillad evolve -c pure.cfg -o trajectory.csv
    """
    with handle_errors():
        report = load_simulator(config).evolve()
        emit_report(report, out, fmt)
