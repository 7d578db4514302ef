# -*- coding: utf-8 -*-
"""
命令输出渲染

每次调用产生一个 CommandOutput：
- text 模式输出面向人的文本
- structured 模式输出单个 JSON 对象 {input, polynomial: {次数: 系数}, meta}
"""

import json
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from data_platform.models.bouquet_class import BouquetClass
from data_platform.models.polynomial import GenusPolynomial

CLASS_COLUMNS = ['canonical', 'edges', 'sequence', 'prime', 'orientable', 'faces', 'pde', 'pdg']


def _native(value):
    """numpy 标量转为 Python 原生类型"""
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"无法序列化: {type(value).__name__}")


@dataclass
class CommandOutput:
    """一次命令调用的输出"""
    input: str
    text: str
    polynomial: Optional[GenusPolynomial] = None
    meta: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'input': self.input,
            'polynomial': self.polynomial.to_dict() if self.polynomial is not None else None,
            'meta': self.meta,
        }

    def render(self, fmt: str = 'text') -> str:
        if fmt == 'structured':
            return json.dumps(self.to_dict(), ensure_ascii=False, indent=2, default=_native)
        return self.text


def classes_frame(classes: List[BouquetClass]) -> pd.DataFrame:
    """等价类列表 → 表格"""
    rows = []
    for c in classes:
        record = c.to_dict()
        rows.append({key: record[key] if record[key] is not None else "-" for key in CLASS_COLUMNS})
    return pd.DataFrame(rows, columns=CLASS_COLUMNS)


def frame_text(frame: pd.DataFrame) -> str:
    if frame.empty:
        return ""
    return frame.to_string(index=False)


def emit(output: CommandOutput, fmt: str = 'text', out_path: Optional[str] = None):
    """写到 --out 指定的文件，否则写到标准输出"""
    rendered = output.render(fmt)
    if out_path:
        with open(out_path, 'w', encoding='utf-8') as f:
            f.write(rendered + "\n")
        print(f"✅ 结果已保存: {out_path}", file=sys.stderr)
    else:
        print(rendered)
