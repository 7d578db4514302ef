# -*- coding: utf-8 -*-
"""
分类验证报告

记录小边数下“带符号序列决定花束 / 决定多项式”的验证结果，
以及在更大边数上找到的反例。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from data_platform.models.polynomial import GenusPolynomial

# 定理覆盖的范围：全部花束 e ≤ 3，可定向花束 e ≤ 4
CLAIM_MAX_ALL = 3
CLAIM_MAX_ORIENTABLE = 4


@dataclass(frozen=True)
class Violation:
    """一对序列相同但不等价（或多项式不同）的类"""
    kind: str                      # sequence / orientable_sequence / pde / pdg
    edges: int
    sequence: str
    first: str
    second: str
    first_value: str = ""
    second_value: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind,
            'edges': self.edges,
            'sequence': self.sequence,
            'first': self.first,
            'second': self.second,
            'first_value': self.first_value,
            'second_value': self.second_value,
        }


@dataclass
class ClassificationReport:
    """分类验证结果"""
    n_all: int
    n_orientable: int
    prime_counts_all: Dict[int, int] = field(default_factory=dict)
    prime_counts_orientable: Dict[int, int] = field(default_factory=dict)
    violations: List[Violation] = field(default_factory=list)

    def of_kind(self, kind: str) -> List[Violation]:
        return [v for v in self.violations if v.kind == kind]

    def first_violation(self, kind: str) -> Optional[int]:
        """该类反例出现的最小边数"""
        sizes = [v.edges for v in self.of_kind(kind)]
        return min(sizes) if sizes else None

    def find_pair(self, kind: str, first: str, second: str) -> Optional[Violation]:
        """按规范形查找反例对（与顺序无关）"""
        for v in self.of_kind(kind):
            if {v.first, v.second} == {first, second}:
                return v
        return None

    @property
    def claims_hold(self) -> bool:
        """定理范围内无任何反例"""
        for v in self.violations:
            limit = CLAIM_MAX_ORIENTABLE if v.kind in ('pdg', 'orientable_sequence') else CLAIM_MAX_ALL
            if v.edges <= limit:
                return False
        return True

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([v.to_dict() for v in self.violations],
                            columns=['kind', 'edges', 'sequence', 'first', 'second',
                                     'first_value', 'second_value'])

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n_all': self.n_all,
            'n_orientable': self.n_orientable,
            'prime_counts_all': {str(k): v for k, v in self.prime_counts_all.items()},
            'prime_counts_orientable': {str(k): v for k, v in self.prime_counts_orientable.items()},
            'claims_hold': self.claims_hold,
            'first_pde_violation': self.first_violation('pde'),
            'first_pdg_violation': self.first_violation('pdg'),
            'violations': [v.to_dict() for v in self.violations],
        }

    def summary(self) -> str:
        """生成摘要报告"""
        lines = [
            "📊 分类验证摘要",
            "=" * 50,
            f"全部花束: e ≤ {self.n_all}",
            f"可定向花束: e ≤ {self.n_orientable}",
            "素类个数 (全部): " + ", ".join(
                f"e={k}: {v}" for k, v in sorted(self.prime_counts_all.items())),
            "素类个数 (可定向): " + ", ".join(
                f"e={k}: {v}" for k, v in sorted(self.prime_counts_orientable.items())),
            "-" * 50,
        ]
        if not self.violations:
            lines.append("✅ 未发现反例")
        for v in self.violations:
            lines.append(f"  [{v.kind}] e={v.edges} S={v.sequence}: {v.first} vs {v.second}")
            if v.first_value or v.second_value:
                lines.append(f"      {v.first_value} vs {v.second_value}")
        lines.append("-" * 50)
        lines.append(f"定理范围内成立: {'✅' if self.claims_hold else '❌'}")
        return "\n".join(lines)


def polynomial_text(poly: Optional[GenusPolynomial]) -> str:
    return poly.format() if poly is not None else "-"
