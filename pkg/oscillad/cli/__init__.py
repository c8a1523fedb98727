# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：__init__.py
# @Date   ：2026/10/18 12:20
# @Author ：leemysw
# 2026/10/18 12:20   Create
# =====================================================
"""
[INPUT]: None
[OUTPUT]: 对外提供 app
[POS]: cli 模块入口
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

from oscillad.cli.main import app

__all__ = ["app"]
