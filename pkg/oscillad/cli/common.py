# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：common.py
# @Date   ：2026/10/18 10:20
# @Author ：leemysw
# 2026/10/18 10:20   Create
# =====================================================
"""
[INPUT]: 依赖 typer, pydantic, oscillad.core.exceptions, oscillad.utils
[OUTPUT]: 对外提供 console、共享选项、错误到退出码的映射、结果写出
[POS]: cli 模块的共享工具函数
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

import typer
from pydantic import ValidationError

from oscillad.core.exceptions import EXIT_NUMERICAL, EXIT_PHYSICS, OscilladError
from oscillad.core.simulator import OscillatorSimulator, RunReport
from oscillad.schema.models import OutputFormat
from oscillad.utils.console import get_console
from oscillad.utils.progress import ProgressManager
from oscillad.utils.render_table import render_csv, render_json, render_mapping

# 人类可读输出走 stderr，stdout 只输出数据
console = get_console()
data_console = get_console(stderr=False)

# ==============================================================================
# 共享选项
# ==============================================================================
ConfigOption = typer.Option(
    ...,
    "--config",
    "-c",
    help="场景文件（平铺 key = value）",
    exists=True,
    dir_okay=False,
    readable=True,
)
OutOption = typer.Option(None, "--out", "-o", help="输出文件（缺省写 stdout）", dir_okay=False)
FormatOption = typer.Option(OutputFormat.CSV, "--format", "-f", help="输出格式: csv / json")


@contextmanager
def handle_errors() -> Iterator[None]:
    """领域错误 → 对应退出码；未预期的异常 → 4"""
    try:
        yield
    except (typer.Exit, typer.Abort):
        raise
    except OscilladError as exc:
        console.error(str(exc))
        raise typer.Exit(exc.exit_code) from None
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        console.error(f"参数无效 {location}: {first['msg']}")
        raise typer.Exit(EXIT_PHYSICS) from None
    except Exception as exc:
        console.error(f"数值计算失败: {type(exc).__name__}: {exc}")
        raise typer.Exit(EXIT_NUMERICAL) from None


def load_simulator(config: Path, quiet: bool = True) -> OscillatorSimulator:
    return OscillatorSimulator.from_file(config, progress=ProgressManager(silent=quiet))


def write_output(text: str, out: Optional[Path]) -> None:
    """写文件（"\\n" 换行，UTF-8）或写 stdout"""
    if out is None:
        typer.echo(text, nl=False)
        return
    with open(out, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
    console.print(f"[green]✅ 已写入[/green] {out}", highlight=False)


def emit_report(report: RunReport, out: Optional[Path], fmt: OutputFormat) -> None:
    """输出告警并按格式渲染表格或对象"""
    for warning in report.warnings:
        console.warn(warning)
    if report.header:
        render = render_json if fmt is OutputFormat.JSON else render_csv
        text = render(report.header, report.rows, report.footer)
    else:
        text = render_mapping(report.payload, as_csv=fmt is OutputFormat.CSV)
    write_output(text, out)
