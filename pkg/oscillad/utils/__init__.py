# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：__init__.py
# @Date   ：2026/10/17 13:20
# @Author ：leemysw
# 2026/10/16 16:00   Create
# =====================================================
"""
[INPUT]: None
[OUTPUT]: 对外提供配置、控制台、进度与渲染工具
[POS]: utils 模块入口
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from oscillad.utils.config import ScenarioConfig, load_config, parse_config
from oscillad.utils.console import get_console
from oscillad.utils.progress import ProgressManager

__all__ = ["ScenarioConfig", "load_config", "parse_config", "get_console", "ProgressManager"]
