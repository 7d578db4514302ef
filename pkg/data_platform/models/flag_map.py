# -*- coding: utf-8 -*-
"""
旗标映射数据模型 (Graph-encoded map)

每条边 4 个旗标，三个无不动点对合 a0 / a1 / a2 编码整个嵌入图：
- a0: 沿边走到另一端（按扭转规则换侧）
- a1: 绕顶点转过一个角
- a2: 同一边端点处换侧
"""

from dataclasses import dataclass, field
from typing import Dict, Any, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .base import BaseModel
from .errors import (
    MalformedFlagMap,
    NotInvolution,
    FixedPoint,
    BadEdgeOrbit,
    MaskOutOfRange,
)


def orbit_labels(flag_count: int, *perms: np.ndarray) -> Tuple[int, np.ndarray]:
    """
    计算若干置换生成的群在旗标上的轨道

    Returns:
        (轨道数, 每个旗标所属轨道编号)
    """
    if flag_count == 0:
        return 0, np.zeros(0, dtype=np.int64)
    rows = np.concatenate([np.arange(flag_count)] * len(perms))
    cols = np.concatenate(perms)
    graph = coo_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)),
        shape=(flag_count, flag_count),
    )
    return connected_components(graph, directed=False)


def _frozen_array(values: Sequence[int]) -> np.ndarray:
    arr = np.array(values, dtype=np.int64).reshape(-1)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class FlagMap(BaseModel):
    """
    旗标映射

    不可变；partial_dual / restrict 等运算总是返回新实例。
    孤立顶点不占旗标，只以计数形式保存。
    """

    a0: np.ndarray = field(default_factory=lambda: _frozen_array([]))
    a1: np.ndarray = field(default_factory=lambda: _frozen_array([]))
    a2: np.ndarray = field(default_factory=lambda: _frozen_array([]))
    edge_of: np.ndarray = field(default_factory=lambda: _frozen_array([]))
    isolated_vertices: int = 0
    labels: Tuple[str, ...] = ()

    @classmethod
    def build(
        cls,
        a0: Sequence[int],
        a1: Sequence[int],
        a2: Sequence[int],
        edge_of: Sequence[int],
        isolated_vertices: int = 0,
        labels: Optional[Sequence[str]] = None,
    ) -> "FlagMap":
        """
        构造并校验旗标映射

        Raises:
            MalformedFlagMap / FixedPoint / NotInvolution / BadEdgeOrbit
        """
        arrays = [_frozen_array(x) for x in (a0, a1, a2, edge_of)]
        n = len(arrays[0])
        if any(len(arr) != n for arr in arrays):
            raise MalformedFlagMap(
                f"数组长度不一致: {[len(arr) for arr in arrays]}"
            )
        if isolated_vertices < 0:
            raise MalformedFlagMap(f"孤立顶点数不能为负: {isolated_vertices}")

        for name, perm in zip(("a0", "a1", "a2"), arrays[:3]):
            cls._check_involution(name, perm)

        edge_count = cls._check_edge_orbits(arrays[0], arrays[2], arrays[3])
        if labels is None:
            labels = tuple(str(i) for i in range(edge_count))
        elif len(labels) != edge_count:
            raise MalformedFlagMap(f"标签数 {len(labels)} 与边数 {edge_count} 不符")

        return cls(
            a0=arrays[0],
            a1=arrays[1],
            a2=arrays[2],
            edge_of=arrays[3],
            isolated_vertices=int(isolated_vertices),
            labels=tuple(labels),
        )

    @classmethod
    def trusted(
        cls,
        a0: Sequence[int],
        a1: Sequence[int],
        a2: Sequence[int],
        edge_of: Sequence[int],
        isolated_vertices: int = 0,
        labels: Sequence[str] = (),
    ) -> "FlagMap":
        """已知合法时跳过校验（对合手术与旋转系统构造的内部路径）"""
        return cls(
            a0=_frozen_array(a0),
            a1=_frozen_array(a1),
            a2=_frozen_array(a2),
            edge_of=_frozen_array(edge_of),
            isolated_vertices=int(isolated_vertices),
            labels=tuple(labels),
        )

    @staticmethod
    def _check_involution(name: str, perm: np.ndarray):
        n = len(perm)
        if n == 0:
            return
        if perm.min() < 0 or perm.max() >= n:
            raise MalformedFlagMap(f"{name} 含越界旗标下标")
        fixed = np.nonzero(perm == np.arange(n))[0]
        if len(fixed):
            raise FixedPoint(f"{name} 在旗标 {int(fixed[0])} 处有不动点")
        broken = np.nonzero(perm[perm] != np.arange(n))[0]
        if len(broken):
            raise NotInvolution(f"{name} 不是对合: 旗标 {int(broken[0])}")

    @staticmethod
    def _check_edge_orbits(a0: np.ndarray, a2: np.ndarray, edge_of: np.ndarray) -> int:
        n = len(a0)
        if n == 0:
            return 0
        count, labels = orbit_labels(n, a0, a2)
        sizes = np.bincount(labels, minlength=count)
        if np.any(sizes != 4):
            bad = int(np.nonzero(sizes != 4)[0][0])
            raise BadEdgeOrbit(f"<a0,a2> 轨道 {bad} 含 {int(sizes[bad])} 个旗标")
        rep = np.zeros(count, dtype=np.int64)
        rep[labels] = edge_of
        mismatch = np.nonzero(rep[labels] != edge_of)[0]
        if len(mismatch):
            raise BadEdgeOrbit(f"旗标 {int(mismatch[0])} 与同轨道旗标的 edge_of 不一致")
        if len(np.unique(edge_of)) != count or edge_of.min() < 0 or edge_of.max() >= count:
            raise BadEdgeOrbit("edge_of 必须为每条边轨道分配 0..e-1 中互不相同的编号")
        return count

    # ========== 属性 ==========

    @property
    def flag_count(self) -> int:
        return len(self.a0)

    @property
    def edge_count(self) -> int:
        return self.flag_count // 4

    def edge_label(self, edge: int) -> str:
        if self.labels:
            return self.labels[edge]
        return str(edge)

    def __eq__(self, other) -> bool:
        """旗标完全一致（逐旗标比较三个对合）"""
        if not isinstance(other, FlagMap):
            return NotImplemented
        return (
            self.isolated_vertices == other.isolated_vertices
            and np.array_equal(self.a0, other.a0)
            and np.array_equal(self.a1, other.a1)
            and np.array_equal(self.a2, other.a2)
            and np.array_equal(self.edge_of, other.edge_of)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'a0': self.a0.tolist(),
            'a1': self.a1.tolist(),
            'a2': self.a2.tolist(),
            'edge_of': self.edge_of.tolist(),
            'isolated_vertices': self.isolated_vertices,
            'labels': list(self.labels),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FlagMap":
        return cls.build(
            data['a0'],
            data['a1'],
            data['a2'],
            data['edge_of'],
            data.get('isolated_vertices', 0),
            data.get('labels'),
        )


@dataclass(frozen=True)
class EdgeSubset(BaseModel):
    """
    边子集 A ⊆ E(G)，按规范边下标编码为位掩码
    """

    mask: int = 0
    edge_count: int = 0

    def __post_init__(self):
        ok, msg = self.validate()
        if not ok:
            raise MaskOutOfRange(msg)

    def validate(self) -> tuple[bool, str]:
        if self.mask < 0 or self.mask >= (1 << self.edge_count):
            return False, f"掩码 {self.mask} 超出 {self.edge_count} 条边的范围"
        return True, ""

    @classmethod
    def empty(cls, edge_count: int) -> "EdgeSubset":
        return cls(0, edge_count)

    @classmethod
    def full(cls, edge_count: int) -> "EdgeSubset":
        return cls((1 << edge_count) - 1, edge_count)

    @classmethod
    def from_indices(cls, indices, edge_count: int) -> "EdgeSubset":
        mask = 0
        for i in indices:
            if not 0 <= i < edge_count:
                raise MaskOutOfRange(f"边下标 {i} 超出范围 0..{edge_count - 1}")
            mask |= 1 << i
        return cls(mask, edge_count)

    def complement(self) -> "EdgeSubset":
        """边数范围内的按位补集"""
        return EdgeSubset(((1 << self.edge_count) - 1) ^ self.mask, self.edge_count)

    def __contains__(self, edge: int) -> bool:
        return bool((self.mask >> edge) & 1)

    def indices(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.edge_count) if (self.mask >> i) & 1)

    def membership(self) -> np.ndarray:
        """逐边布尔数组"""
        return np.array([(self.mask >> i) & 1 for i in range(self.edge_count)], dtype=bool)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def to_dict(self) -> Dict[str, Any]:
        return {'mask': self.mask, 'edge_count': self.edge_count}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "EdgeSubset":
        return cls(int(data['mask']), int(data['edge_count']))
