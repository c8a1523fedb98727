# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：cmd_check.py
# @Date   ：2026/10/18 11:20
# @Author ：leemysw
# 2026/10/18 11:20   Create
# =====================================================
"""
[INPUT]: 依赖 typer, oscillad.cli.common
[OUTPUT]: 对外提供 check 命令
[POS]: cli 模块的约束检查命令
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from pathlib import Path

import typer

from oscillad.core.exceptions import EXIT_PHYSICS
from .common import ConfigOption, data_console, handle_errors, load_simulator


def check(config: Path = ConfigOption):
    """
    [green]▶[/] 逐项报告 PASS/FAIL 与残差


    必选项: complete_positivity, uncertainty, pure_state_condition。
    其余项仅作提示。任一必选项 FAIL 时退出码为 3。
    """
    with handle_errors():
        report = load_simulator(config).check()
        for item in report.checks:
            data_console.print(item.line(), soft_wrap=True, markup=False, highlight=False)
    if not report.ok:
        raise typer.Exit(EXIT_PHYSICS)
