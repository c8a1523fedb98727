# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：progress.py
# @Date   ：2026/10/17 09:30
# @Author ：leemysw
# 2026/10/16 16:20   Create
# 2026/10/17 09:30   Thread-safe advance for sweep workers
# =====================================================
"""
[INPUT]: 依赖 rich.progress 的进度显示组件
[OUTPUT]: 对外提供 ProgressManager 类
[POS]: utils 模块的进度管理器，供 simulator 的参数扫描使用
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

import threading
from contextlib import contextmanager
from typing import Callable, Generator, Optional

from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn

from oscillad.utils.console import get_console

ProgressCallback = Callable[[str, int, int], None]
Advance = Callable[[], None]


class ProgressManager:
    """
    统一的进度管理器

    - 交互模式：在 stderr 上显示 Rich 进度条
    - 静默模式（--quiet / 测试）：只通过回调报告进度
    """

    def __init__(
            self,
            *,
            silent: bool = False,
            callback: Optional[ProgressCallback] = None,
    ):
        self.silent = silent
        self.callback = callback
        self._lock = threading.Lock()

    def report(self, stage: str, current: int, total: int) -> None:
        if self.callback:
            self.callback(stage, current, total)

    @contextmanager
    def bar(self, description: str, total: int) -> Generator[Advance, None, None]:
        """进度条上下文管理器；advance 可在工作线程中调用"""
        self.report(description, 0, total)
        current = 0

        if self.silent:
            def advance() -> None:
                nonlocal current
                with self._lock:
                    current += 1
                    self.report(description, current, total)

            yield advance
            return

        with Progress(
                SpinnerColumn(),
                TextColumn("[progress.description]{task.description}"),
                BarColumn(bar_width=20),
                TaskProgressColumn(),
                console=get_console(),
                transient=True,
        ) as progress:
            task_id = progress.add_task(f"[cyan]{description}[/cyan]", total=total)

            def advance() -> None:
                nonlocal current
                with self._lock:
                    current += 1
                    progress.advance(task_id, 1)
                    self.report(description, current, total)

            yield advance
