# -*- coding: utf-8 -*-
"""
Pytest 配置文件
设置项目根路径和共享 fixtures
"""
import sys
import os
import random
import pytest

# 将项目根目录添加到 Python 路径
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, PROJECT_ROOT)

from data_platform.models import SignedRotation, RotationSystem
from capability_platform.engine import PartialDualEngine, EngineConfig
from capability_platform.census import BouquetCensus


@pytest.fixture
def engine():
    """单线程引擎"""
    return PartialDualEngine(EngineConfig(threads=1))


@pytest.fixture(scope="session")
def census():
    """会话级普查实例（缓存等价类，避免重复计算）"""
    return BouquetCensus(PartialDualEngine(EngineConfig(threads=1)))


@pytest.fixture
def rng():
    """固定种子的随机数生成器"""
    return random.Random(20260314)


@pytest.fixture
def noninterpolating_bouquet():
    """∂ε = 4z^2 + 12z^4 的四边花束"""
    return SignedRotation.parse("(a, b, c, d, -b, -a, c, d)")


@pytest.fixture
def nine_edge_bouquet():
    return SignedRotation.parse("(h, a, b, c, d, c, a, d, b, h, i, e, f, -e, g, -f, g, -i)")


@pytest.fixture
def two_vertex_graph():
    """两顶点：一条连接边 x，各带一个环"""
    return RotationSystem.parse("v0: x a a\nv1: x b -b\n")


def random_bouquet(rng: random.Random, edges: int, twist_prob: float = 0.5) -> SignedRotation:
    """随机花束：随机排列 2n 个位置，每条边按概率扭转"""
    labels = [f"e{i}" for i in range(edges)]
    sequence = labels + labels
    rng.shuffle(sequence)
    twisted = [label for label in labels if rng.random() < twist_prob]
    return SignedRotation.from_labels(sequence, twisted)


@pytest.fixture
def make_bouquet(rng):
    """随机花束工厂: make_bouquet(edges, twist_prob=0.5)"""
    def factory(edges: int, twist_prob: float = 0.5) -> SignedRotation:
        return random_bouquet(rng, edges, twist_prob)
    return factory
