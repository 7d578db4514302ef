# -*- coding: utf-8 -*-
"""
配置加载

DEFAULT_CONFIG 为内置默认值；load_config() 将 YAML 配置文件合并到默认值之上，
再应用环境变量覆盖（PD_THREADS → engine.threads）。
"""

import copy
import logging
import os
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

CONFIG_FILE = "pd_config.yaml"
THREADS_ENV = "PD_THREADS"

DEFAULT_CONFIG: Dict[str, Dict[str, Any]] = {
    "engine": {
        "threads": 1,
        "max_direct_edges": 62,
        "prime_cache_size": 4096,
    },
    "census": {
        "max_edges": 6,
        "search_max_edges": 5,
    },
    "verify": {
        "theta_max": 10,
        "theta_max_tests": 12,
    },
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """按节递归合并，override 优先"""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[str] = None) -> Dict[str, Dict[str, Any]]:
    """
    加载配置

    Args:
        path: YAML 文件路径；为 None 时读取当前目录下的 pd_config.yaml（不存在则用默认值）

    Raises:
        FileNotFoundError: 显式指定的文件不存在
        ValueError: 文件内容不是映射
    """
    config = copy.deepcopy(DEFAULT_CONFIG)
    target = path or CONFIG_FILE
    if os.path.exists(target):
        with open(target, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ValueError(f"配置文件 {target} 顶层必须是映射")
        config = _merge(config, data)
        logger.debug(f"已加载配置文件 {target}")
    elif path is not None:
        raise FileNotFoundError(f"配置文件不存在: {path}")

    threads = os.environ.get(THREADS_ENV)
    if threads:
        try:
            config["engine"]["threads"] = max(1, int(threads))
        except ValueError:
            logger.warning(f"忽略非法的 {THREADS_ENV}={threads!r}")
    return config
