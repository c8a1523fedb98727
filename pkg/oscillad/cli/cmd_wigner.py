# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：cmd_wigner.py
# @Date   ：2026/10/18 11:40
# @Author ：leemysw
# 2026/10/18 11:40   Create
# =====================================================
"""
[INPUT]: 依赖 typer, oscillad.cli.common
[OUTPUT]: 对外提供 wigner 命令
[POS]: cli 模块的相空间网格输出命令
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from pathlib import Path
from typing import Optional

import typer

from oscillad.schema.models import OutputFormat
from .common import ConfigOption, FormatOption, OutOption, emit_report, handle_errors, load_simulator


def wigner(
        config: Path = ConfigOption,
        t: float = typer.Option(0.0, "--t", "-t", help="时刻"),
        n: int = typer.Option(64, "--n", "-n", help="每个方向的网格点数"),
        extent: float = typer.Option(6.0, "--extent", help="网格半宽（标准差个数）"),
        out: Optional[Path] = OutOption,
        fmt: OutputFormat = FormatOption,
):
    """
    [green]▶[/] 输出 t 时刻 n×n 网格上的 Wigner 函数（列 p,q,w）


    页脚附带 Simpson 求积的纯度与归一化。

    示例:

        oscillad wigner -c pure.cfg --t 10 --n 101 -o w.csv
    """
    with handle_errors():
        emit_report(load_simulator(config).wigner(t, n, extent), out, fmt)
