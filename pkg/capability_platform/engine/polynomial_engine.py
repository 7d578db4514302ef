# -*- coding: utf-8 -*-
"""
偏对偶多项式引擎 (Partial-Dual Engine)

功能:
1. 直接枚举全部 2^e 个偏对偶求 ∂ε（可按掩码区间分片并行）
2. 花束快速路径：剥离平凡环 → 素分解 → 逐因子 ε(A)+ε(A^c) 求和
3. ∂Γ = ∂ε 次数减半
4. 偏对偶不变性 / 可加性 / 生成森林约化等交叉校验
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple, Union

import numpy as np

from data_platform.models.errors import CapExceeded, NonOrientable
from data_platform.models.flag_map import FlagMap, EdgeSubset, orbit_labels
from data_platform.models.polynomial import GenusPolynomial
from data_platform.models.rotation import (
    RotationSystem,
    SignedRotation,
    as_rotation_system,
)
from capability_platform.calculators import BouquetCalculator, SurfaceCalculator

logger = logging.getLogger(__name__)

RibbonInput = Union[SignedRotation, RotationSystem]
SubsetInput = Union[EdgeSubset, int, Iterable[str]]


@dataclass
class EngineConfig:
    """引擎配置"""
    threads: int = 1                 # 并行进程数，1 为单线程
    max_direct_edges: int = 62       # 直接枚举的边数上限
    prime_cache_size: int = 4096     # 素因子多项式 LRU 缓存条目上限

    @classmethod
    def from_config(cls, config: Dict) -> "EngineConfig":
        engine = config.get('engine', {})
        return cls(
            threads=int(engine.get('threads', 1)),
            max_direct_edges=int(engine.get('max_direct_edges', 62)),
            prime_cache_size=int(engine.get('prime_cache_size', 4096)),
        )


def _histogram_shard(
    a0: np.ndarray,
    a1: np.ndarray,
    a2: np.ndarray,
    edge_of: np.ndarray,
    base: int,
    start: int,
    stop: int,
) -> Dict[int, int]:
    """
    掩码区间 [start, stop) 上的欧拉亏格直方图

    base = 2k + e − 2·孤立顶点数；偏对偶不改变连通分支，只需重算 v 与 f。
    """
    n = len(a0)
    shifts = np.arange((n // 4) or 1, dtype=np.int64)
    hist: Counter = Counter()
    for mask in range(start, stop):
        in_a = ((mask >> shifts) & 1).astype(bool)[edge_of]
        new_a0 = np.where(in_a, a2, a0)
        new_a2 = np.where(in_a, a0, a2)
        v, _ = orbit_labels(n, a1, new_a2)
        f, _ = orbit_labels(n, new_a0, a1)
        hist[base - v - f] += 1
    return dict(hist)


class PartialDualEngine:
    """
    偏对偶多项式引擎

    使用示例:
        engine = PartialDualEngine(EngineConfig(threads=4))
        poly = engine.pde_direct(SignedRotation.parse("(a,b,c,d,-b,-a,c,d)"))
    """

    def __init__(self, config: EngineConfig = None):
        self.config = config or EngineConfig()
        self._prime_by_key = lru_cache(maxsize=self.config.prime_cache_size)(self._prime_from_key)

    def reset(self):
        """清空素因子缓存"""
        self._prime_by_key.cache_clear()

    def cache_info(self):
        return self._prime_by_key.cache_info()

    # ========== 直接枚举 ==========

    def pde_direct(self, r: RibbonInput) -> GenusPolynomial:
        """
        ∂ε = Σ_{A⊆E} z^{ε(G^A)}，按掩码升序枚举

        Raises:
            CapExceeded: 边数超过 max_direct_edges
        """
        m = SurfaceCalculator.to_map(as_rotation_system(r), validate=False)
        return self.pde_of_map(m)

    def pde_of_map(self, m: FlagMap) -> GenusPolynomial:
        e = m.edge_count
        if e > self.config.max_direct_edges:
            raise CapExceeded(
                f"{e} 条边超过直接枚举上限 {self.config.max_direct_edges}"
            )
        if e == 0:
            return GenusPolynomial.one()

        counts = SurfaceCalculator.counts(m)
        base = 2 * counts.components + e - 2 * m.isolated_vertices
        total = 1 << e
        shards = self._shards(total)
        logger.info(f"直接枚举开始: {e} 条边, {total} 个子集, {len(shards)} 个分片")

        args = (m.a0, m.a1, m.a2, m.edge_of, base)
        hist: Counter = Counter()
        if len(shards) == 1:
            hist.update(_histogram_shard(*args, 0, total))
        else:
            with ProcessPoolExecutor(max_workers=self.config.threads) as pool:
                futures = [pool.submit(_histogram_shard, *args, lo, hi) for lo, hi in shards]
                for (lo, hi), future in zip(shards, futures):
                    part = future.result()
                    logger.debug(f"分片 [{lo}, {hi}) 完成: {part}")
                    hist.update(part)

        poly = GenusPolynomial.from_coeffs(hist)
        logger.info(f"直接枚举完成: {poly}")
        return poly

    def _shards(self, total: int) -> List[Tuple[int, int]]:
        threads = max(1, self.config.threads)
        if threads == 1 or total < 2 * threads:
            return [(0, total)]
        step = -(-total // threads)
        return [(lo, min(lo + step, total)) for lo in range(0, total, step)]

    # ========== 花束快速路径 ==========

    def _prime_pde(self, factor: SignedRotation) -> GenusPolynomial:
        """单个因子: Σ_A z^{ε(A)+ε(A^c)}，按规范形缓存"""
        return self._prime_by_key(BouquetCalculator.canonical(factor))

    def _prime_from_key(self, key: str) -> GenusPolynomial:
        # 规范形与原因子同构，∂ε 相同
        factor = SignedRotation.parse(key)
        k = factor.edge_count
        eps = np.zeros(1 << k, dtype=np.int64)
        for mask in range(1 << k):
            sub = SurfaceCalculator.restrict(factor, mask)
            # 单顶点: ε = 2 − 1 + |A| − f
            f, _ = orbit_labels(sub.flag_count, sub.a0, sub.a1)
            size = bin(mask).count("1")
            eps[mask] = 1 + size - (f if size else 1)
        full = (1 << k) - 1
        hist = Counter(int(eps[mask] + eps[full ^ mask]) for mask in range(1 << k))
        poly = GenusPolynomial.from_coeffs(hist)
        logger.debug(f"因子 {key} ({k} 条边): {poly}")
        return poly

    def pde_bouquet(self, r: SignedRotation) -> GenusPolynomial:
        """
        花束 ∂ε：2^{i+j} z^i · Π 素因子 ∂ε

        与 pde_direct 结果一致，但只在素因子上枚举。
        """
        stripped = BouquetCalculator.strip_trivial(r)
        i, j = stripped.twisted, stripped.untwisted
        result = GenusPolynomial.monomial(i, 2 ** (i + j))
        factors = BouquetCalculator.factor(stripped.reduced)
        logger.debug(f"剥离 {i} 个扭转 / {j} 个非扭转平凡环, 剩余 {len(factors)} 个素因子")
        for factor in factors:
            result = result * self._prime_pde(factor)
        return result

    def pde(self, r: RibbonInput) -> GenusPolynomial:
        """单顶点走快速路径，其余直接枚举"""
        if isinstance(r, SignedRotation):
            return self.pde_bouquet(r)
        if r.vertex_count == 1:
            return self.pde_bouquet(r.to_signed_rotation())
        return self.pde_direct(r)

    def pdg(self, r: RibbonInput) -> GenusPolynomial:
        """
        ∂Γ = ∂ε(z^½)

        Raises:
            NonOrientable
        """
        m = SurfaceCalculator.to_map(as_rotation_system(r), validate=False)
        if not SurfaceCalculator.orientable(m):
            raise NonOrientable("带状图不可定向，∂Γ 无定义")
        return self.pde(r).halve_exponents()

    def pde_via_bouquets(self, r: RibbonInput) -> GenusPolynomial:
        """沿生成森林偏对偶约化为花束，逐顶点快速路径后相乘"""
        reduced, _ = SurfaceCalculator.bouquet_partial_dual(r)
        result = GenusPolynomial.one()
        for vertex in reduced.vertices:
            if vertex:
                bouquet = RotationSystem((vertex,)).to_signed_rotation()
                result = result * self.pde_bouquet(bouquet)
        return result

    # ========== 交叉校验 ==========

    @staticmethod
    def subset_of(r: RibbonInput, subset: SubsetInput) -> EdgeSubset:
        """EdgeSubset / 掩码 / 标签集合统一为 EdgeSubset"""
        rs = as_rotation_system(r)
        if isinstance(subset, EdgeSubset):
            return EdgeSubset(subset.mask, rs.edge_count)
        if isinstance(subset, int):
            return EdgeSubset(subset, rs.edge_count)
        return EdgeSubset.from_indices(
            [rs.edge_index(label) for label in subset], rs.edge_count
        )

    def check_invariance(self, r: RibbonInput, subset: SubsetInput) -> bool:
        """∂ε_G == ∂ε_{G^A}"""
        rs = as_rotation_system(r)
        a = self.subset_of(rs, subset)
        dual = SurfaceCalculator.partial_dual(SurfaceCalculator.to_map(rs, validate=False), a)
        return self.pde_direct(rs) == self.pde_direct(SurfaceCalculator.extract_rotation(dual))

    def check_additivity(self, r: SignedRotation, subset: SubsetInput) -> bool:
        """
        花束上 ε(G^A) = ε(A) + ε(A^c)；可定向时还检查 γ 的同样等式
        """
        a = self.subset_of(r, subset)
        m = SurfaceCalculator.to_map(r, validate=False)
        dual = SurfaceCalculator.partial_dual(m, a)
        part = SurfaceCalculator.restrict(r, a)
        rest = SurfaceCalculator.restrict(r, a.complement())
        ok = SurfaceCalculator.euler_genus(dual) == (
            SurfaceCalculator.euler_genus(part) + SurfaceCalculator.euler_genus(rest)
        )
        if ok and r.is_orientable():
            ok = SurfaceCalculator.genus(dual) == (
                SurfaceCalculator.genus(part) + SurfaceCalculator.genus(rest)
            )
        return ok
