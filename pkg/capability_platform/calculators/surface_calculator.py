# -*- coding: utf-8 -*-
"""
曲面计算器

旗标映射上的全部拓扑计算：构造、计数、欧拉亏格、可定向性、
偏对偶、限制、以及从旗标映射反解旋转系统。

旗标约定：
- 全局槽位 s 占旗标 2s (左侧 L) 与 2s+1 (右侧 R)
- a2: 槽位内 L ↔ R
- a1: (s, R) ↔ (s 的后继槽位, L)
- a0: 非扭转边 (s,L)↔(t,R), (s,R)↔(t,L)；扭转边 (s,L)↔(t,L), (s,R)↔(t,R)
"""

import logging
from typing import Dict, List, NamedTuple, Tuple, Union

import networkx as nx
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from data_platform.models.errors import MaskOutOfRange, NonOrientable
from data_platform.models.flag_map import FlagMap, EdgeSubset, orbit_labels
from data_platform.models.rotation import (
    RotationSystem,
    SignedRotation,
    Slot,
    as_rotation_system,
)
from data_platform.models.base import TwistMark

logger = logging.getLogger(__name__)

RibbonInput = Union[SignedRotation, RotationSystem]


class SurfaceCounts(NamedTuple):
    """顶点 / 边 / 面 / 连通分支数"""
    vertices: int
    edges: int
    faces: int
    components: int

    @property
    def euler_genus(self) -> int:
        return 2 * self.components - self.vertices + self.edges - self.faces


class SurfaceCalculator:
    """
    曲面计算器

    所有方法均为静态方法，输入不可变，返回新对象。
    """

    # ========== 构造 ==========

    @staticmethod
    def to_map(r: RibbonInput, validate: bool = True) -> FlagMap:
        """
        旋转系统 → 旗标映射

        Args:
            r: SignedRotation 或 RotationSystem
            validate: 是否执行完整对合校验
        """
        rs = as_rotation_system(r)
        labels = rs.edge_labels
        index = {label: i for i, label in enumerate(labels)}
        n_slots = sum(len(v) for v in rs.vertices)

        a0 = np.zeros(2 * n_slots, dtype=np.int64)
        a1 = np.zeros(2 * n_slots, dtype=np.int64)
        a2 = np.zeros(2 * n_slots, dtype=np.int64)
        edge_of = np.zeros(2 * n_slots, dtype=np.int64)

        ends: Dict[str, List[Tuple[int, TwistMark]]] = {label: [] for label in labels}
        isolated = 0
        base = 0
        for vertex in rs.vertices:
            degree = len(vertex)
            if degree == 0:
                isolated += 1
                continue
            for k, slot in enumerate(vertex):
                s = base + k
                nxt = base + (k + 1) % degree
                a2[2 * s] = 2 * s + 1
                a2[2 * s + 1] = 2 * s
                a1[2 * s + 1] = 2 * nxt
                a1[2 * nxt] = 2 * s + 1
                edge_of[2 * s] = edge_of[2 * s + 1] = index[slot.label]
                ends[slot.label].append((s, slot.mark))
            base += degree

        for label, ((s, mark_s), (t, mark_t)) in ends.items():
            if mark_s != mark_t:
                a0[2 * s], a0[2 * t] = 2 * t, 2 * s
                a0[2 * s + 1], a0[2 * t + 1] = 2 * t + 1, 2 * s + 1
            else:
                a0[2 * s], a0[2 * t + 1] = 2 * t + 1, 2 * s
                a0[2 * s + 1], a0[2 * t] = 2 * t, 2 * s + 1

        if validate:
            return FlagMap.build(a0, a1, a2, edge_of, isolated, labels)
        return FlagMap.trusted(a0, a1, a2, edge_of, isolated, labels)

    # ========== 计数与亏格 ==========

    @staticmethod
    def counts(m: FlagMap) -> SurfaceCounts:
        n = m.flag_count
        iso = m.isolated_vertices
        v, _ = orbit_labels(n, m.a1, m.a2)
        f, _ = orbit_labels(n, m.a0, m.a1)
        c, _ = orbit_labels(n, m.a0, m.a1, m.a2)
        return SurfaceCounts(v + iso, m.edge_count, f + iso, c + iso)

    @staticmethod
    def euler_genus(m: FlagMap) -> int:
        """ε = 2k − v + e − f"""
        return SurfaceCalculator.counts(m).euler_genus

    @staticmethod
    def component_genera(m: FlagMap) -> List[int]:
        """逐连通分支的欧拉亏格（孤立顶点各为一个亏格 0 的分支）"""
        n = m.flag_count
        out = [0] * m.isolated_vertices
        if n == 0:
            return out
        k, comp = orbit_labels(n, m.a0, m.a1, m.a2)

        def per_component(*perms):
            _, lab = orbit_labels(n, *perms)
            _, first = np.unique(lab, return_index=True)
            return np.bincount(comp[first], minlength=k)

        v = per_component(m.a1, m.a2)
        f = per_component(m.a0, m.a1)
        e = np.bincount(comp, minlength=k) // 4
        out.extend(int(x) for x in 2 - v + e - f)
        return out

    @staticmethod
    def orientable(m: FlagMap) -> bool:
        """二部双覆盖的连通分支数恰为原图的两倍时可定向"""
        n = m.flag_count
        if n == 0:
            return True
        base = np.arange(n)
        perms = (m.a0, m.a1, m.a2)
        rows = np.concatenate([np.concatenate([base, base + n]) for _ in perms])
        cols = np.concatenate([np.concatenate([p + n, p]) for p in perms])
        graph = coo_matrix(
            (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(2 * n, 2 * n)
        )
        doubled, _ = connected_components(graph, directed=False)
        k, _ = orbit_labels(n, *perms)
        return doubled == 2 * k

    @staticmethod
    def genus(m: FlagMap) -> int:
        """
        可定向亏格 γ = ε / 2

        Raises:
            NonOrientable
        """
        if not SurfaceCalculator.orientable(m):
            raise NonOrientable("带状图不可定向，无可定向亏格")
        return SurfaceCalculator.euler_genus(m) // 2

    # ========== 偏对偶与限制 ==========

    @staticmethod
    def _mask_of(m: FlagMap, subset: Union[EdgeSubset, int]) -> int:
        mask = subset.mask if isinstance(subset, EdgeSubset) else int(subset)
        if mask < 0 or mask >> m.edge_count:
            raise MaskOutOfRange(f"掩码 {mask} 超出 {m.edge_count} 条边的范围")
        return mask

    @staticmethod
    def partial_dual(m: FlagMap, subset: Union[EdgeSubset, int]) -> FlagMap:
        """
        关于边子集 A 的偏对偶：A 中旗标上交换 a0 与 a2

        Raises:
            MaskOutOfRange
        """
        mask = SurfaceCalculator._mask_of(m, subset)
        members = EdgeSubset(mask, m.edge_count).membership()
        in_a = members[m.edge_of] if m.flag_count else np.zeros(0, dtype=bool)
        return FlagMap.trusted(
            np.where(in_a, m.a2, m.a0),
            m.a1,
            np.where(in_a, m.a0, m.a2),
            m.edge_of,
            m.isolated_vertices,
            m.labels,
        )

    @staticmethod
    def restrict(r: RibbonInput, subset: Union[EdgeSubset, int]) -> FlagMap:
        """删除 A 以外的边（保留全部顶点）"""
        rs = as_rotation_system(r)
        labels = rs.edge_labels
        mask = subset.mask if isinstance(subset, EdgeSubset) else int(subset)
        if mask < 0 or mask >> len(labels):
            raise MaskOutOfRange(f"掩码 {mask} 超出 {len(labels)} 条边的范围")
        keep = [label for i, label in enumerate(labels) if (mask >> i) & 1]
        return SurfaceCalculator.to_map(rs.restricted(keep), validate=False)

    # ========== 反解旋转系统 ==========

    @staticmethod
    def _second_slot_twists(m: FlagMap, flat: List[Tuple[int, int]]) -> Dict[int, bool]:
        """每条边第二个槽位的下标 → 该边是否扭转（a0 把两侧 L 配在一起）"""
        first_slot: Dict[int, int] = {}
        out: Dict[int, bool] = {}
        for g, (left, _) in enumerate(flat):
            edge = int(m.edge_of[left])
            if edge not in first_slot:
                first_slot[edge] = g
                continue
            out[g] = int(m.a0[flat[first_slot[edge]][0]]) == left
        return out

    @staticmethod
    def _orient_walks(m: FlagMap, walks: List[List[Tuple[int, int]]]) -> List[List[Tuple[int, int]]]:
        """
        沿生成森林翻转顶点朝向，使树边均不扭转

        翻转 = 槽位逆序且每个槽位 L/R 互换；环边的扭转性不受影响。
        """
        vertex_of: Dict[int, int] = {}
        for v, slots in enumerate(walks):
            for left, right in slots:
                vertex_of[left] = vertex_of[right] = v
        flat = [pair for slots in walks for pair in slots]
        twists = SurfaceCalculator._second_slot_twists(m, flat)

        graph = nx.MultiGraph()
        graph.add_nodes_from(range(len(walks)))
        for g, twisted in twists.items():
            left = flat[g][0]
            u = vertex_of[int(m.a0[left])]
            w = vertex_of[left]
            if u != w:
                graph.add_edge(u, w, twisted=twisted)

        flip = [False] * len(walks)
        for component in nx.connected_components(graph):
            root = min(component)
            for parent, child in nx.bfs_edges(graph, root):
                twisted = next(iter(graph[parent][child].values()))['twisted']
                flip[child] = flip[parent] ^ twisted

        return [
            [(right, left) for left, right in reversed(slots)] if flip[v] else slots
            for v, slots in enumerate(walks)
        ]

    @staticmethod
    def extract_with_bijection(m: FlagMap) -> Tuple[RotationSystem, np.ndarray]:
        """
        旗标映射 → 旋转系统，并返回旗标双射

        Returns:
            (旋转系统, bijection)，bijection[新旗标] = 原旗标
        """
        n = m.flag_count
        visited = np.zeros(n, dtype=bool)
        walks: List[List[Tuple[int, int]]] = []
        for start in range(n):
            if visited[start]:
                continue
            slots = []
            f = start
            while True:
                left = f
                right = int(m.a2[left])
                visited[left] = visited[right] = True
                slots.append((left, right))
                f = int(m.a1[right])
                if f == start:
                    break
            walks.append(slots)

        walks = SurfaceCalculator._orient_walks(m, walks)
        flat = [pair for slots in walks for pair in slots]
        marked = {g for g, twisted in SurfaceCalculator._second_slot_twists(m, flat).items() if twisted}

        vertices = []
        g = 0
        for slots in walks:
            vertex = []
            for left, _ in slots:
                mark = TwistMark.MARKED if g in marked else TwistMark.PLAIN
                vertex.append(Slot(m.edge_label(int(m.edge_of[left])), mark))
                g += 1
            vertices.append(tuple(vertex))
        vertices.extend(() for _ in range(m.isolated_vertices))

        bijection = np.array([flag for pair in flat for flag in pair], dtype=np.int64)
        return RotationSystem(tuple(vertices)), bijection

    @staticmethod
    def extract_rotation(m: FlagMap) -> RotationSystem:
        return SurfaceCalculator.extract_with_bijection(m)[0]

    @staticmethod
    def bouquet_partial_dual(r: RibbonInput) -> Tuple[RotationSystem, EdgeSubset]:
        """
        关于一棵生成森林作偏对偶，得到每个连通分支一个顶点的带状图

        Returns:
            (新旋转系统, 所用生成森林对应的边子集)
        """
        rs = as_rotation_system(r)
        labels = rs.edge_labels
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(rs.vertex_count))
        endpoints: Dict[str, List[int]] = {label: [] for label in labels}
        for v, vertex in enumerate(rs.vertices):
            for slot in vertex:
                endpoints[slot.label].append(v)
        for label, (u, w) in endpoints.items():
            graph.add_edge(u, w, key=label)

        forest = [key for _, _, key in nx.minimum_spanning_edges(
            graph, algorithm='kruskal', keys=True, data=False
        )]
        subset = EdgeSubset.from_indices(
            [labels.index(label) for label in forest], len(labels)
        )
        logger.debug(f"生成森林 {forest} ({len(forest)} 条边)")
        dual = SurfaceCalculator.partial_dual(SurfaceCalculator.to_map(rs, validate=False), subset)
        return SurfaceCalculator.extract_rotation(dual), subset

    @staticmethod
    def faces(r: RibbonInput) -> int:
        return SurfaceCalculator.counts(SurfaceCalculator.to_map(r, validate=False)).faces
