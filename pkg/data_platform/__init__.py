# -*- coding: utf-8 -*-
"""
数据中台 (Data Platform)

带状图的统一数据模型：
1. 旗标映射 FlagMap / 边子集 EdgeSubset
2. 旋转系统 RotationSystem / 带符号旋转 SignedRotation
3. 带符号序列 SignedSequence / 亏格多项式 GenusPolynomial
4. 普查等价类 BouquetClass

使用示例:
    from data_platform import SignedRotation, GenusPolynomial

    r = SignedRotation.parse("(a, b, c, d, -b, -a, c, d)")
    p = GenusPolynomial.parse("4z^2 + 12z^4")
"""

from .models import (
    FlagMap,
    EdgeSubset,
    Slot,
    RotationSystem,
    SignedRotation,
    SignedSequence,
    GenusPolynomial,
    BouquetClass,
    TwistMark,
    ConjectureId,
    RibbonGraphError,
)

__version__ = '1.0.0'
__all__ = [
    # Models
    'FlagMap',
    'EdgeSubset',
    'Slot',
    'RotationSystem',
    'SignedRotation',
    'SignedSequence',
    'GenusPolynomial',
    'BouquetClass',
    # Enums
    'TwistMark',
    'ConjectureId',
    # Errors
    'RibbonGraphError',
]
