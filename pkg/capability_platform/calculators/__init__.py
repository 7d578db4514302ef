# -*- coding: utf-8 -*-
"""
计算器

旗标映射与花束上所有拓扑 / 组合计算的集中入口。
"""

from .surface_calculator import SurfaceCalculator, SurfaceCounts
from .bouquet_calculator import BouquetCalculator, StripResult

__all__ = [
    'SurfaceCalculator',
    'SurfaceCounts',
    'BouquetCalculator',
    'StripResult',
]
