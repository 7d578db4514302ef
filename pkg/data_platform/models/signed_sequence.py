# -*- coding: utf-8 -*-
"""
带符号序列数据模型

每个元素为 (alpha, twisted)。排序键为 twisted ? -alpha : alpha，
键相同时扭转边在前，因此 -0 排在 0 之前。
"""

import re
from dataclasses import dataclass
from typing import Dict, Any, Iterable, Tuple

from .base import BaseModel
from .errors import MalformedRotation

_ENTRY = re.compile(r'^\s*(-?)(\d+)\s*$')


def _sort_key(entry: Tuple[int, bool]) -> Tuple[int, int]:
    alpha, twisted = entry
    return (-alpha if twisted else alpha, 0 if twisted else 1)


@dataclass(frozen=True)
class SignedSequence(BaseModel):
    """花束的带符号序列 S(Θ)"""

    entries: Tuple[Tuple[int, bool], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self,
            'entries',
            tuple(sorted(((int(a), bool(t)) for a, t in self.entries), key=_sort_key)),
        )

    @classmethod
    def from_entries(cls, entries: Iterable[Tuple[int, bool]]) -> "SignedSequence":
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> "SignedSequence":
        """解析 "(-4, -1, -0, 0, 1)"；"-0" 表示扭转的平凡环"""
        body = text.strip()
        if body.startswith('(') and body.endswith(')'):
            body = body[1:-1]
        if not body.strip():
            return cls()
        entries = []
        for token in body.split(','):
            match = _ENTRY.match(token)
            if not match:
                raise MalformedRotation(f"非法带符号交错数: '{token.strip()}'")
            entries.append((int(match.group(2)), match.group(1) == '-'))
        return cls(tuple(entries))

    # ========== 计算属性 ==========

    def betas(self) -> Tuple[int, ...]:
        """带符号交错数 β = ±α（-0 记为 0）"""
        return tuple(-a if t else a for a, t in self.entries)

    def beta_sum(self) -> int:
        return sum(self.betas())

    def trivial_counts(self) -> Tuple[int, int]:
        """(扭转平凡环个数 i, 非扭转平凡环个数 j)"""
        i = sum(1 for a, t in self.entries if a == 0 and t)
        j = sum(1 for a, t in self.entries if a == 0 and not t)
        return i, j

    def __len__(self) -> int:
        return len(self.entries)

    def validate(self) -> tuple[bool, str]:
        if any(a < 0 for a, _ in self.entries):
            return False, "交错数不能为负"
        if self.beta_sum() % 2:
            return False, f"Σβ = {self.beta_sum()} 不是偶数"
        return True, ""

    def format(self) -> str:
        return "(" + ", ".join(
            f"-{a}" if t else str(a) for a, t in self.entries
        ) + ")"

    def __str__(self) -> str:
        return self.format()

    def to_dict(self) -> Dict[str, Any]:
        return {'sequence': self.format()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SignedSequence":
        return cls.parse(data['sequence'])
