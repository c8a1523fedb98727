# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：__init__.py
# @Date   ：2026/10/18 12:30
# @Author ：leemysw
# 2026/10/12 10:30   Create
# =====================================================
"""
[INPUT]: None
[OUTPUT]: 对外提供版本号 __version__ 和主要 API
[POS]: oscillad 包入口，是整个项目的对外接口
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

__version__ = "0.1.0"

from oscillad.core.simulator import OscillatorSimulator, RunReport
from oscillad.utils.config import ScenarioConfig, load_config

__all__ = ["__version__", "OscillatorSimulator", "RunReport", "ScenarioConfig", "load_config"]
