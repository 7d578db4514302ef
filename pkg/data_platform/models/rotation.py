# -*- coding: utf-8 -*-
"""
旋转系统数据模型

- RotationSystem: 多顶点带状图，每个顶点一个半边槽位的循环序列
- SignedRotation: 单顶点带状图（花束）的带符号旋转

文本格式:
    花束:   "(a, b, -a, c, b, -c, d, d)"  外层括号和空白均可省略
    图文件: 每行一个顶点 "v<i>: tok tok ..."，tok 可带 '-' 前缀
"""

import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Any, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .base import BaseModel, TwistMark
from .errors import (
    LabelCountNotTwo,
    DoubleNegative,
    MalformedRotation,
    NotABouquet,
    NoSuchEdge,
)

_VERTEX_LINE = re.compile(r'^\s*v(\d+)\s*:(.*)$')


class Slot(NamedTuple):
    """顶点循环序中的一个半边槽位"""
    label: str
    mark: TwistMark = TwistMark.PLAIN

    def render(self) -> str:
        return f"-{self.label}" if self.mark.is_marked() else self.label


def _split_token(token: str) -> Slot:
    token = token.strip()
    if not token:
        raise MalformedRotation("存在空标签")
    mark = TwistMark.from_token(token)
    label = token[1:] if mark.is_marked() else token
    if not label or label.startswith('-'):
        raise MalformedRotation(f"非法标签: '{token}'")
    if any(ch in label for ch in "(), \t"):
        raise MalformedRotation(f"非法标签: '{token}'")
    return Slot(label, mark)


def _check_pairs(slots: Iterable[Slot], allow_double_mark: bool = False):
    slots = list(slots)
    counts = Counter(s.label for s in slots)
    for label, count in counts.items():
        if count != 2:
            raise LabelCountNotTwo(f"边 '{label}' 出现 {count} 次，应为 2 次")
    if allow_double_mark:
        return
    marked = Counter(s.label for s in slots if s.mark.is_marked())
    for label, count in marked.items():
        if count == 2:
            raise DoubleNegative(f"边 '{label}' 的两个半边都带负号")


@dataclass(frozen=True)
class RotationSystem(BaseModel):
    """
    旋转系统（多顶点）

    vertices: 每个顶点的槽位循环序列；空序列表示孤立顶点。
    一条边恰有一个槽位被标记时为扭转边；两端都标记等同于都不标记。
    """

    vertices: Tuple[Tuple[Slot, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self,
            'vertices',
            tuple(tuple(Slot(s[0], s[1]) for s in vertex) for vertex in self.vertices),
        )
        _check_pairs(self.slots(), allow_double_mark=True)

    @classmethod
    def parse(cls, text: str) -> "RotationSystem":
        """
        解析图文件文本

        每个非空行 "v<i>: tok tok ..."，'#' 开头的行为注释。
        """
        vertices: Dict[int, Tuple[Slot, ...]] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0]
            if not line.strip():
                continue
            match = _VERTEX_LINE.match(line)
            if not match:
                raise MalformedRotation(f"第 {lineno} 行格式错误: '{raw.strip()}'")
            index = int(match.group(1))
            if index in vertices:
                raise MalformedRotation(f"第 {lineno} 行顶点 v{index} 重复")
            body = match.group(2).replace(',', ' ')
            vertices[index] = tuple(_split_token(tok) for tok in body.split())
        return cls(tuple(vertices[k] for k in sorted(vertices)))

    def slots(self) -> List[Slot]:
        return [slot for vertex in self.vertices for slot in vertex]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_labels(self) -> Tuple[str, ...]:
        """按首次出现顺序排列的边标签（即规范边下标）"""
        seen: Dict[str, None] = {}
        for slot in self.slots():
            seen.setdefault(slot.label, None)
        return tuple(seen)

    @property
    def edge_count(self) -> int:
        return len(self.edge_labels)

    def edge_index(self, label: str) -> int:
        try:
            return self.edge_labels.index(label)
        except ValueError:
            raise NoSuchEdge(f"边 '{label}' 不存在")

    def twisted_labels(self) -> Tuple[str, ...]:
        marked = Counter(s.label for s in self.slots() if s.mark.is_marked())
        return tuple(label for label in self.edge_labels if marked.get(label) == 1)

    def restricted(self, keep: Iterable[str]) -> "RotationSystem":
        """删除不在 keep 中的边，保留全部顶点"""
        keep = set(keep)
        return RotationSystem(tuple(
            tuple(s for s in vertex if s.label in keep) for vertex in self.vertices
        ))

    def to_signed_rotation(self) -> "SignedRotation":
        """单顶点旋转系统转为带符号旋转"""
        if self.vertex_count != 1:
            raise NotABouquet(f"旋转系统有 {self.vertex_count} 个顶点，不是花束")
        return SignedRotation.from_labels(
            [s.label for s in self.vertices[0]], self.twisted_labels()
        )

    def format(self) -> str:
        return "\n".join(
            f"v{i}: " + " ".join(s.render() for s in vertex)
            for i, vertex in enumerate(self.vertices)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'vertices': [[s.render() for s in vertex] for vertex in self.vertices],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RotationSystem":
        return cls(tuple(
            tuple(_split_token(tok) for tok in vertex) for vertex in data['vertices']
        ))


@dataclass(frozen=True)
class SignedRotation(BaseModel):
    """
    花束的带符号旋转

    seq:     长度 2n 的循环序列，元素为边下标（按首次出现编号 0..n-1）
    twisted: 每条边是否扭转
    labels:  每条边的标签

    扭转边的负号统一放在第二次出现处。
    """

    seq: Tuple[int, ...] = ()
    twisted: Tuple[bool, ...] = ()
    labels: Tuple[str, ...] = ()

    @classmethod
    def from_labels(cls, sequence: Sequence[str], twisted: Iterable[str] = ()) -> "SignedRotation":
        """由标签序列和扭转边集合构造（按首次出现重新编号）"""
        twisted = set(twisted)
        index: Dict[str, int] = {}
        seq = []
        for label in sequence:
            if label not in index:
                index[label] = len(index)
            seq.append(index[label])
        counts = Counter(seq)
        for label, i in index.items():
            if counts[i] != 2:
                raise LabelCountNotTwo(f"边 '{label}' 出现 {counts[i]} 次，应为 2 次")
        labels = tuple(index)
        return cls(
            seq=tuple(seq),
            twisted=tuple(label in twisted for label in labels),
            labels=labels,
        )

    @classmethod
    def parse(cls, text: str) -> "SignedRotation":
        """
        解析 "(a, b, -a, c, b, -c, d, d)" 形式的带符号旋转

        空输入（或 "()"）为空花束。
        """
        body = text.strip()
        if body.startswith('(') and body.endswith(')'):
            body = body[1:-1]
        if not body.strip():
            return cls()
        slots = [_split_token(tok) for tok in body.split(',')]
        _check_pairs(slots)
        twisted = {s.label for s in slots if s.mark.is_marked()}
        return cls.from_labels([s.label for s in slots], twisted)

    # ========== 属性 ==========

    @property
    def edge_count(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.seq)

    def positions(self) -> List[Tuple[int, int]]:
        """每条边两次出现的位置 (p1, p2)，p1 < p2"""
        pos: List[List[int]] = [[] for _ in self.labels]
        for p, e in enumerate(self.seq):
            pos[e].append(p)
        return [(p[0], p[1]) for p in pos]

    def signs(self) -> Tuple[bool, ...]:
        """逐位置是否带负号（扭转边的第二次出现）"""
        seen = set()
        out = []
        for e in self.seq:
            out.append(e in seen and self.twisted[e])
            seen.add(e)
        return tuple(out)

    def tokens(self) -> List[str]:
        return [
            f"-{self.labels[e]}" if neg else self.labels[e]
            for e, neg in zip(self.seq, self.signs())
        ]

    def label_sequence(self) -> List[str]:
        return [self.labels[e] for e in self.seq]

    def twisted_labels(self) -> Tuple[str, ...]:
        return tuple(label for label, tw in zip(self.labels, self.twisted) if tw)

    def is_orientable(self) -> bool:
        """花束可定向当且仅当没有扭转环"""
        return not any(self.twisted)

    def format(self) -> str:
        return "(" + ", ".join(self.tokens()) + ")"

    def __str__(self) -> str:
        return self.format()

    def to_rotation_system(self) -> RotationSystem:
        return RotationSystem((tuple(
            Slot(self.labels[e], TwistMark.MARKED if neg else TwistMark.PLAIN)
            for e, neg in zip(self.seq, self.signs())
        ),))

    def to_dict(self) -> Dict[str, Any]:
        return {'rotation': self.format()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SignedRotation":
        return cls.parse(data['rotation'])


def parse_rotation(text: str) -> SignedRotation:
    """模块级入口，等价于 SignedRotation.parse"""
    return SignedRotation.parse(text)


def as_rotation_system(r) -> RotationSystem:
    """接受 SignedRotation 或 RotationSystem，统一为 RotationSystem"""
    if isinstance(r, SignedRotation):
        return r.to_rotation_system()
    return r
