# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：cmd_sweep.py
# @Date   ：2026/10/18 12:00
# @Author ：leemysw
# 2026/10/18 12:00   Create
# =====================================================
"""
[INPUT]: 依赖 typer, oscillad.cli.common
[OUTPUT]: 对外提供 sweep 命令
[POS]: cli 模块的参数扫描命令
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from pathlib import Path
from typing import Optional

import typer

from oscillad.schema.models import OutputFormat, SweepParam
from .common import ConfigOption, FormatOption, OutOption, emit_report, handle_errors, load_simulator


def sweep(
        config: Path = ConfigOption,
        param: SweepParam = typer.Option(..., "--param", "-p", help="扫描的参数"),
        start: float = typer.Option(..., "--from", help="起始值"),
        stop: float = typer.Option(..., "--to", help="终止值"),
        steps: int = typer.Option(11, "--steps", help="取值个数（含两端）"),
        workers: int = typer.Option(1, "--workers", "-w", help="并行线程数"),
        quiet: bool = typer.Option(False, "--quiet", "-q", help="不显示进度条"),
        out: Optional[Path] = OutOption,
        fmt: OutputFormat = FormatOption,
):
    """
    [green]▶[/] 扫描单个参数，每个取值输出一行渐近态摘要


    违反约束的取值保留该行，error 列给出原因。

    示例:

        oscillad sweep -c pure.cfg --param mu --from 0 --to 0.9 --steps 10
    """
    with handle_errors():
        simulator = load_simulator(config, quiet=quiet)
        report = simulator.sweep(param, start, stop, steps, workers=workers)
        emit_report(report, out, fmt)
