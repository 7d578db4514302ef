# -*- coding: utf-8 -*-
"""
花束普查 (Bouquet Census)

功能:
1. 无同构重复地枚举 n 条边的花束（位置配对递归 × 扭转位掩码，按规范形去重）
2. 按带符号序列分类并验证“序列决定多项式”
3. Θ_t 族的亏格与 ∂Γ 闭式
4. 两个猜想的穷举搜索
"""

import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterator, List, Optional, Set, Tuple

import pandas as pd

from data_platform.models.base import ConjectureId
from data_platform.models.bouquet_class import BouquetClass
from data_platform.models.errors import CapExceeded
from data_platform.models.polynomial import GenusPolynomial
from data_platform.models.rotation import SignedRotation
from capability_platform.calculators import BouquetCalculator, SurfaceCalculator
from capability_platform.engine import EngineConfig, PartialDualEngine
from .report import ClassificationReport, Violation, polynomial_text

logger = logging.getLogger(__name__)


def _matchings(size: int, first: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    2n 个位置的全部完美匹配：最小空闲位置依次与其后每个空闲位置配对

    first 不为 None 时固定位置 0 的配对对象（用于分片）。
    """
    pairing = [-1] * size

    def extend():
        try:
            i = pairing.index(-1)
        except ValueError:
            yield tuple(pairing)
            return
        partners = [first] if (i == 0 and first is not None) else range(i + 1, size)
        for j in partners:
            if pairing[j] == -1:
                pairing[i], pairing[j] = j, i
                yield from extend()
                pairing[i] = pairing[j] = -1

    yield from extend()


def _rotation_from(pairing: Tuple[int, ...], twist_mask: int) -> SignedRotation:
    index: Dict[int, int] = {}
    seq = []
    for p, q in enumerate(pairing):
        if p < q:
            index[p] = len(index)
            seq.append(index[p])
        else:
            seq.append(index[q])
    n = len(index)
    return SignedRotation(
        seq=tuple(seq),
        twisted=tuple(bool((twist_mask >> e) & 1) for e in range(n)),
        labels=tuple(str(e + 1) for e in range(n)),
    )


def _raw(n: int, orientable_only: bool, first: Optional[int] = None) -> Iterator[SignedRotation]:
    masks = [0] if orientable_only else range(1 << n)
    for pairing in _matchings(2 * n, first):
        for mask in masks:
            yield _rotation_from(pairing, mask)


def _canonical_shard(n: int, orientable_only: bool, first: Optional[int]) -> Set[Tuple[int, ...]]:
    """一个分片（位置 0 的配对对象固定）内的规范编码集合"""
    return {BouquetCalculator.canonical_key(r) for r in _raw(n, orientable_only, first)}


class BouquetCensus:
    """
    花束普查

    使用示例:
        census = BouquetCensus()
        classes = census.enumerate_bouquets(3, prime_only=True)
    """

    def __init__(
        self,
        engine: PartialDualEngine = None,
        max_edges: int = 6,
        search_max_edges: int = 5,
    ):
        self.engine = engine or PartialDualEngine()
        self.max_edges = max_edges
        self.search_max_edges = search_max_edges
        self._classes: Dict[str, BouquetClass] = {}

    @classmethod
    def from_config(cls, config: Dict, engine: PartialDualEngine = None) -> "BouquetCensus":
        census = config.get('census', {})
        return cls(
            engine=engine or PartialDualEngine(EngineConfig.from_config(config)),
            max_edges=int(census.get('max_edges', 6)),
            search_max_edges=int(census.get('search_max_edges', 5)),
        )

    def _check_cap(self, n: int):
        if n < 0:
            raise ValueError(f"边数不能为负: {n}")
        if n > self.max_edges:
            raise CapExceeded(f"边数 {n} 超过普查上限 {self.max_edges}")

    # ========== 枚举 ==========

    def raw_rotations(self, n: int, orientable_only: bool = False) -> Iterator[SignedRotation]:
        """未去重的全部带符号旋转：(2n−1)!! 个匹配 × 2^n 种扭转"""
        self._check_cap(n)
        return _raw(n, orientable_only)

    def canonical_forms(self, n: int, orientable_only: bool = False) -> List[str]:
        """n 条边花束的全部规范形，按字符串排序"""
        self._check_cap(n)
        threads = max(1, self.engine.config.threads)
        if n == 0:
            keys = _canonical_shard(0, orientable_only, None)
        elif threads == 1:
            keys = _canonical_shard(n, orientable_only, None)
        else:
            keys = set()
            with ProcessPoolExecutor(max_workers=threads) as pool:
                futures = {
                    first: pool.submit(_canonical_shard, n, orientable_only, first)
                    for first in range(1, 2 * n)
                }
                for first, future in futures.items():
                    part = future.result()
                    logger.debug(f"分片 0↔{first}: {len(part)} 个规范编码")
                    keys |= part
        forms = sorted(self._render(key) for key in keys)
        return forms

    @staticmethod
    def _render(key: Tuple[int, ...]) -> str:
        tokens = [f"-{v // 2 + 1}" if v % 2 else str(v // 2 + 1) for v in key]
        return "(" + ", ".join(tokens) + ")"

    def classify(self, r: SignedRotation) -> BouquetClass:
        """计算（并缓存）一个花束所在的等价类"""
        canonical = BouquetCalculator.canonical(r)
        cached = self._classes.get(canonical)
        if cached is not None:
            return cached
        rotation = SignedRotation.parse(canonical)
        pde = self.engine.pde_bouquet(rotation)
        orientable = rotation.is_orientable()
        result = BouquetClass(
            canonical=canonical,
            rotation=rotation,
            sequence=BouquetCalculator.signed_sequence(rotation),
            prime=BouquetCalculator.is_prime(rotation),
            orientable=orientable,
            faces=BouquetCalculator.faces(rotation),
            pde=pde,
            pdg=pde.halve_exponents() if orientable else None,
        )
        self._classes[canonical] = result
        return result

    def enumerate_bouquets(
        self,
        n: int,
        orientable_only: bool = False,
        prime_only: bool = False,
    ) -> List[BouquetClass]:
        """
        恰好 n 条边的全部花束等价类

        Raises:
            CapExceeded: n 超过普查上限
        """
        forms = self.canonical_forms(n, orientable_only)
        logger.info(f"普查 e={n}{' (可定向)' if orientable_only else ''}: {len(forms)} 个类")
        classes = [self.classify(SignedRotation.parse(form)) for form in forms]
        if prime_only:
            classes = [c for c in classes if c.prime]
        return classes

    def classes_up_to(self, n: int, orientable_only: bool = False,
                      prime_only: bool = False) -> List[BouquetClass]:
        """1..n 条边的全部类"""
        out: List[BouquetClass] = []
        for k in range(1, n + 1):
            out.extend(self.enumerate_bouquets(k, orientable_only, prime_only))
        return out

    # ========== Θ_t 族 ==========

    @staticmethod
    def theta(t: int) -> SignedRotation:
        """(1, 2, ⋯, t, 1, 2, ⋯, t)"""
        if t < 0:
            raise ValueError(f"t 不能为负: {t}")
        labels = [str(i) for i in range(1, t + 1)]
        return SignedRotation.from_labels(labels + labels)

    @staticmethod
    def theta_genus(t: int) -> int:
        """γ(Θ_t)：t 为奇数时 (t−1)/2，偶数时 t/2"""
        return t // 2

    @staticmethod
    def theta_closed_form(t: int) -> GenusPolynomial:
        if t == 0:
            return GenusPolynomial.one()
        if t % 2:
            return GenusPolynomial.monomial((t - 1) // 2, 2 ** t)
        return (GenusPolynomial.monomial(t // 2, 2 ** (t - 1))
                + GenusPolynomial.monomial((t - 2) // 2, 2 ** (t - 1)))

    def theta_pdg(self, t: int) -> GenusPolynomial:
        """直接枚举得到的 ∂Γ(Θ_t)"""
        return self.engine.pde_direct(self.theta(t)).halve_exponents()

    def check_theta_formula(self, t: int) -> bool:
        return self.theta_pdg(t) == self.theta_closed_form(t)

    def theta_table(self, t_max: int = 10) -> pd.DataFrame:
        rows = []
        for t in range(1, t_max + 1):
            r = self.theta(t)
            m = SurfaceCalculator.to_map(r, validate=False)
            pdg = self.theta_pdg(t)
            closed = self.theta_closed_form(t)
            genus = SurfaceCalculator.genus(m)
            rows.append({
                't': t,
                'sequence': BouquetCalculator.signed_sequence(r).format(),
                'genus': genus,
                'genus_formula': self.theta_genus(t),
                'faces': SurfaceCalculator.counts(m).faces,
                'pdg': pdg.format(),
                'closed_form': closed.format(),
                'match': pdg == closed and genus == self.theta_genus(t),
            })
        return pd.DataFrame(rows)

    # ========== 猜想搜索 ==========

    def _search_bound(self, n: Optional[int]) -> int:
        bound = self.search_max_edges if n is None else n
        self._check_cap(bound)
        return bound

    def search_conjecture_31(self, n: Optional[int] = None) -> List[BouquetClass]:
        """≤ n 条边、∂Γ 恰有一个非零系数且次数 ≥ 1 的可定向类"""
        bound = self._search_bound(n)
        hits = [c for c in self.classes_up_to(bound, orientable_only=True)
                if c.pdg.is_singleton_nonconstant()]
        logger.info(f"单系数搜索 e ≤ {bound}: {len(hits)} 个命中")
        return hits

    def search_conjecture_53(self, n: Optional[int] = None) -> List[BouquetClass]:
        """≤ n 条边、∂ε 不是插值多项式的不可定向类"""
        bound = self._search_bound(n)
        hits = [c for c in self.classes_up_to(bound)
                if not c.orientable and not c.pde.is_interpolating()]
        logger.info(f"插值搜索 e ≤ {bound}: {len(hits)} 个命中")
        return hits

    def search(self, conjecture: ConjectureId, n: Optional[int] = None) -> List[BouquetClass]:
        if conjecture == ConjectureId.SINGLE_COEFFICIENT:
            return self.search_conjecture_31(n)
        return self.search_conjecture_53(n)

    # ========== 分类 ==========

    @staticmethod
    def _collect(classes: List[BouquetClass], kind: str, label: str = None) -> List[Violation]:
        groups: Dict[str, List[BouquetClass]] = defaultdict(list)
        for c in classes:
            groups[c.sequence.format()].append(c)
        found = []
        for sequence, members in groups.items():
            for i, first in enumerate(members):
                for second in members[i + 1:]:
                    if kind == 'sequence':
                        found.append(Violation(label or kind, first.edge_count, sequence,
                                               first.canonical, second.canonical))
                        continue
                    a = first.pde if kind == 'pde' else first.pdg
                    b = second.pde if kind == 'pde' else second.pdg
                    if a != b:
                        found.append(Violation(kind, first.edge_count, sequence,
                                               first.canonical, second.canonical,
                                               polynomial_text(a), polynomial_text(b)))
        return found

    def verify_classification(self, n_all: int = 3, n_orientable: int = 4) -> ClassificationReport:
        """
        验证带符号序列在素类上是完全不变量，且序列相同则多项式相同

        超出定理范围的边数上不失败，只记录找到的反例。
        """
        report = ClassificationReport(n_all=n_all, n_orientable=n_orientable)
        for k in range(1, n_all + 1):
            classes = self.enumerate_bouquets(k)
            primes = [c for c in classes if c.prime]
            report.prime_counts_all[k] = len(primes)
            report.violations.extend(self._collect(primes, 'sequence'))
            report.violations.extend(self._collect(classes, 'pde'))
        for k in range(1, n_orientable + 1):
            classes = self.enumerate_bouquets(k, orientable_only=True)
            primes = [c for c in classes if c.prime]
            report.prime_counts_orientable[k] = len(primes)
            if k > n_all:
                report.violations.extend(self._collect(primes, "sequence", "orientable_sequence"))
            report.violations.extend(self._collect(classes, "pdg"))
        logger.info(f"分类验证完成: {len(report.violations)} 个反例")
        return report

    def classification_table(self, n_all: int = 3, n_orientable: int = 4) -> pd.DataFrame:
        """
        素类按多项式分组的表：同一行列出共享多项式的全部序列

        Returns:
            DataFrame[edges, sequences, pde, pdg]
        """
        primes: Dict[str, BouquetClass] = {}
        for c in self.classes_up_to(n_all, prime_only=True):
            primes[c.canonical] = c
        for c in self.classes_up_to(n_orientable, orientable_only=True, prime_only=True):
            primes[c.canonical] = c

        groups: Dict[Tuple[int, str, str], List[str]] = defaultdict(list)
        for c in primes.values():
            key = (c.edge_count, c.pde.format(), polynomial_text(c.pdg))
            sequence = c.sequence.format()
            if sequence not in groups[key]:
                groups[key].append(sequence)

        rows = [
            {
                'edges': edges,
                'sequences': ", ".join(sorted(sequences)),
                'pde': pde,
                'pdg': pdg,
            }
            for (edges, pde, pdg), sequences in groups.items()
        ]
        table = pd.DataFrame(rows, columns=['edges', 'sequences', 'pde', 'pdg'])
        return table.sort_values(['edges', 'sequences']).reset_index(drop=True)
