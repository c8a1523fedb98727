# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：main.py
# @Date   ：2026/10/18 12:40
# @Author ：leemysw
#
# 2026/10/18 12:40   Create
# =====================================================

from oscillad.cli.main import app

if __name__ == '__main__':
    app()
