# !/usr/bin/env python
# -*- coding: utf-8 -*-
# =====================================================
# @File   ：render_table.py
# @Date   ：2026/10/17 13:10
# @Author ：leemysw
# 2026/10/17 13:10   Create
# =====================================================
"""
[INPUT]: 依赖 csv, json
[OUTPUT]: 对外提供 format_number, render_csv, render_json, render_mapping
[POS]: utils 模块的确定性表格渲染，被 cli.common 写出结果
[PROTOCOL]: 变更时更新此头部，然后检查 CLAUDE.md
"""

import csv
import io
import json
from typing import Any, Iterable, Mapping, Optional, Sequence

Row = Sequence[Any]


def format_number(value: Any) -> str:
    """CSV 单元格: 浮点数取最短往返十进制 repr，None 为空"""
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    try:
        # np.float64 的 repr 带类型前缀，统一转成 float
        return repr(float(value))
    except (TypeError, ValueError):
        return str(value)


def _json_value(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Mapping):
        return {str(k): _json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return float(value)


# ==========================================================================
# 表格
# ==========================================================================
def render_csv(header: Sequence[str], rows: Iterable[Row], footer: Optional[Mapping[str, Any]] = None) -> str:
    """表头 + 数据行 + `# key = value` 页脚"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(value) for value in row])
    for key, value in (footer or {}).items():
        buffer.write(f"# {key} = {format_number(value)}\n")
    return buffer.getvalue()


def render_json(header: Sequence[str], rows: Iterable[Row], footer: Optional[Mapping[str, Any]] = None) -> str:
    """{"rows": [{列名: 值}], "footer": {...}}，与 CSV 一一对应"""
    payload = {
        "rows": [{name: _json_value(value) for name, value in zip(header, row)} for row in rows],
        "footer": _json_value(dict(footer or {})),
    }
    return json.dumps(payload, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


# ==========================================================================
# 键值对象
# ==========================================================================
def render_mapping(payload: Mapping[str, Any], as_csv: bool = False) -> str:
    """steady / pure-coeffs 的单个对象；CSV 形式为两列 key,value"""
    if as_csv:
        return render_csv(("key", "value"), _flatten(payload))
    return json.dumps(_json_value(dict(payload)), indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def _flatten(payload: Mapping[str, Any], prefix: str = "") -> list[tuple[str, Any]]:
    items: list[tuple[str, Any]] = []
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, Mapping):
            items.extend(_flatten(value, prefix=f"{name}."))
        elif isinstance(value, (list, tuple)):
            items.extend((f"{name}.{i}", v) for i, v in enumerate(value))
        else:
            items.append((name, value))
    return items
