# -*- coding: utf-8 -*-
"""通用工具：配置加载"""

from .config import DEFAULT_CONFIG, load_config

__all__ = ['DEFAULT_CONFIG', 'load_config']
