# -*- coding: utf-8 -*-
"""
花束计算器

单顶点带状图上的组合运算：交错数、带符号序列、平凡环剥离、
连接 / 分解、规范形与同构判定。
"""

from typing import Dict, List, NamedTuple, Optional, Tuple

import pandas as pd

from data_platform.models.errors import NoSuchEdge
from data_platform.models.rotation import SignedRotation
from data_platform.models.signed_sequence import SignedSequence
from .surface_calculator import SurfaceCalculator


class StripResult(NamedTuple):
    """剥离平凡环的结果"""
    twisted: int
    untwisted: int
    reduced: SignedRotation


class BouquetCalculator:
    """
    花束计算器

    计算类型：
    1. 交错数 α(e) 与带符号序列 S(B)
    2. 连接 p ∨ q 与按闭弧的素分解
    3. 规范形（旋转 × 反射下字典序最小）
    """

    # ========== 交错数 ==========

    @staticmethod
    def interlace_numbers(r: SignedRotation) -> List[int]:
        """逐边交错数：恰有一个端点严格落在 e 两次出现之间的其他边数"""
        positions = r.positions()
        alphas = []
        for e, (p1, p2) in enumerate(positions):
            count = 0
            for f, (q1, q2) in enumerate(positions):
                if f != e and (p1 < q1 < p2) != (p1 < q2 < p2):
                    count += 1
            alphas.append(count)
        return alphas

    @staticmethod
    def signed_sequence(r: SignedRotation) -> SignedSequence:
        alphas = BouquetCalculator.interlace_numbers(r)
        return SignedSequence(tuple(zip(alphas, r.twisted)))

    @staticmethod
    def interlace_table(r: SignedRotation) -> pd.DataFrame:
        """逐边交错数表（按首次出现顺序）"""
        alphas = BouquetCalculator.interlace_numbers(r)
        return pd.DataFrame({
            'edge': list(r.labels),
            'twisted': list(r.twisted),
            'alpha': alphas,
            'beta': [f"-{a}" if t else str(a) for a, t in zip(alphas, r.twisted)],
        })

    # ========== 平凡环 / 删除 ==========

    @staticmethod
    def delete(r: SignedRotation, label: str) -> SignedRotation:
        """
        删除一条边

        Raises:
            NoSuchEdge
        """
        if label not in r.labels:
            raise NoSuchEdge(f"边 '{label}' 不存在")
        return SignedRotation.from_labels(
            [l for l in r.label_sequence() if l != label],
            [l for l in r.twisted_labels() if l != label],
        )

    @staticmethod
    def strip_trivial(r: SignedRotation) -> StripResult:
        """一次性删除所有 α = 0 的环，返回 (扭转数 i, 非扭转数 j, 剩余花束)"""
        alphas = BouquetCalculator.interlace_numbers(r)
        trivial = {r.labels[e] for e, a in enumerate(alphas) if a == 0}
        i = sum(1 for e, a in enumerate(alphas) if a == 0 and r.twisted[e])
        reduced = SignedRotation.from_labels(
            [l for l in r.label_sequence() if l not in trivial],
            [l for l in r.twisted_labels() if l not in trivial],
        )
        return StripResult(i, len(trivial) - i, reduced)

    # ========== 连接与分解 ==========

    @staticmethod
    def join(p: SignedRotation, q: SignedRotation, corner: Optional[int] = None) -> SignedRotation:
        """
        在 p 的角 corner 处插入 q（默认接在末尾）

        q 中与 p 冲突的标签追加 "'" 直到唯一。
        """
        size = len(p.seq)
        k = size if corner is None else corner
        if not 0 <= k <= size:
            raise ValueError(f"角 {k} 超出范围 0..{size}")
        taken = set(p.labels)
        rename: Dict[str, str] = {}
        for label in q.labels:
            new = label
            while new in taken:
                new += "'"
            rename[label] = new
            taken.add(new)
        base = p.label_sequence()
        inserted = [rename[l] for l in q.label_sequence()]
        twisted = set(p.twisted_labels()) | {rename[l] for l in q.twisted_labels()}
        return SignedRotation.from_labels(base[:k] + inserted + base[k:], twisted)

    @staticmethod
    def _shortest_closed_arc(r: SignedRotation) -> Optional[Tuple[int, int]]:
        """最短真闭弧 (起点, 长度)；不存在时返回 None"""
        n2 = len(r.seq)
        best = None
        for start in range(n2):
            inside = set()
            open_count = 0
            for k in range(n2 - 1):
                e = r.seq[(start + k) % n2]
                if e in inside:
                    open_count -= 1
                else:
                    inside.add(e)
                    open_count += 1
                if open_count == 0:
                    if best is None or k + 1 < best[1]:
                        best = (start, k + 1)
                    break
        return best

    @staticmethod
    def _sub_rotation(r: SignedRotation, positions: List[int]) -> SignedRotation:
        labels = [r.labels[r.seq[p]] for p in sorted(positions)]
        twisted = set(r.twisted_labels()) & set(labels)
        return SignedRotation.from_labels(labels, twisted)

    @staticmethod
    def _split(r: SignedRotation) -> List[SignedRotation]:
        if r.edge_count == 0:
            return []
        arc = BouquetCalculator._shortest_closed_arc(r)
        if arc is None:
            return [r]
        start, length = arc
        n2 = len(r.seq)
        inner = [(start + k) % n2 for k in range(length)]
        outer = [(start + length + k) % n2 for k in range(n2 - length)]
        return (
            BouquetCalculator._split(BouquetCalculator._sub_rotation(r, inner))
            + BouquetCalculator._split(BouquetCalculator._sub_rotation(r, outer))
        )

    @staticmethod
    def factor(r: SignedRotation) -> List[SignedRotation]:
        """
        素分解：沿真闭弧递归切分

        因子嵌套时（如 (a, b, b, a)），按返回顺序首尾拼接得到的花束与 r 不一定同构，
        但 ∂ε 相同；需要还原 r 本身时用 join(外层因子, 内层因子, corner=…) 把内层因子插回原来的角。

        Returns:
            素因子列表，按各因子首个标签在 r 中的位置排序；空花束返回 []
        """
        order = {label: p for p, label in reversed(list(enumerate(r.label_sequence())))}
        parts = BouquetCalculator._split(r)
        return sorted(parts, key=lambda part: order[part.labels[0]])

    @staticmethod
    def is_prime(r: SignedRotation) -> bool:
        """非空且不存在真闭弧"""
        return r.edge_count > 0 and BouquetCalculator._shortest_closed_arc(r) is None

    # ========== 规范形 ==========

    @staticmethod
    def _encode(seq, twisted) -> Tuple[int, ...]:
        index: Dict[int, int] = {}
        out = []
        for e in seq:
            if e in index:
                out.append(2 * index[e] + (1 if twisted[e] else 0))
            else:
                index[e] = len(index)
                out.append(2 * index[e])
        return tuple(out)

    @staticmethod
    def canonical_key(r: SignedRotation) -> Tuple[int, ...]:
        """2n 个旋转 × 反射下的字典序最小编码"""
        best: Optional[Tuple[int, ...]] = None
        for seq in (r.seq, r.seq[::-1]):
            for shift in range(len(seq)):
                key = BouquetCalculator._encode(seq[shift:] + seq[:shift], r.twisted)
                if best is None or key < best:
                    best = key
        return best or ()

    @staticmethod
    def canonical(r: SignedRotation) -> str:
        """规范形字符串，如 "(1, 2, -1, 2)"；空花束为 "()" """
        tokens = []
        for value in BouquetCalculator.canonical_key(r):
            label = str(value // 2 + 1)
            tokens.append(f"-{label}" if value % 2 else label)
        return "(" + ", ".join(tokens) + ")"

    @staticmethod
    def canonical_rotation(r: SignedRotation) -> SignedRotation:
        return SignedRotation.parse(BouquetCalculator.canonical(r))

    @staticmethod
    def iso(r1: SignedRotation, r2: SignedRotation) -> bool:
        return BouquetCalculator.canonical_key(r1) == BouquetCalculator.canonical_key(r2)

    @staticmethod
    def faces(r: SignedRotation) -> int:
        return SurfaceCalculator.faces(r)
