# -*- coding: utf-8 -*-
"""
能力中台 (Capability Platform)

统一算法层，提供：
1. 曲面 / 花束计算器
2. 偏对偶多项式引擎
3. 花束普查与分类验证

使用示例:
    from capability_platform import PartialDualEngine, BouquetCalculator
    from data_platform.models import SignedRotation

    r = SignedRotation.parse("(a, b, c, a, b, c)")
    BouquetCalculator.signed_sequence(r)          # (2, 2, 2)
    PartialDualEngine().pdg(r)                    # 8z
"""

from .calculators import (
    SurfaceCalculator,
    SurfaceCounts,
    BouquetCalculator,
    StripResult,
)
from .engine import EngineConfig, PartialDualEngine
from .census import BouquetCensus, ClassificationReport

__version__ = '1.0.0'
__all__ = [
    # Calculators
    'SurfaceCalculator',
    'SurfaceCounts',
    'BouquetCalculator',
    'StripResult',
    # Engine
    'EngineConfig',
    'PartialDualEngine',
    # Census
    'BouquetCensus',
    'ClassificationReport',
]
