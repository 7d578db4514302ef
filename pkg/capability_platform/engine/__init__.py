# -*- coding: utf-8 -*-
"""
偏对偶多项式引擎

使用示例:
    from capability_platform.engine import PartialDualEngine, EngineConfig

    engine = PartialDualEngine(EngineConfig(threads=2))
    engine.pdg(rotation)
"""

from .polynomial_engine import EngineConfig, PartialDualEngine

__all__ = ['EngineConfig', 'PartialDualEngine']
