# -*- coding: utf-8 -*-
"""
基础模型类和枚举定义
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Any


class TwistMark(Enum):
    """半边标记：一条边恰有一个半边被标记时为扭转边"""
    PLAIN = "plain"      # 无标记 (+)
    MARKED = "marked"    # 标记 (-)

    @classmethod
    def from_token(cls, token: str) -> "TwistMark":
        """根据 token 前缀判断标记"""
        return cls.MARKED if token.startswith('-') else cls.PLAIN

    def is_marked(self) -> bool:
        return self is TwistMark.MARKED


class ConjectureId(Enum):
    """可搜索的猜想编号"""
    SINGLE_COEFFICIENT = "3.1"   # 非常数且只有一个非零系数的 pDg 多项式
    INTERPOLATING = "5.3"        # 不可定向带状图的 pDe 多项式插值性

    @classmethod
    def from_value(cls, value: str) -> "ConjectureId":
        for item in cls:
            if item.value == value:
                return item
        raise ValueError(f"未知猜想编号: {value}")


@dataclass(frozen=True)
class BaseModel(ABC):
    """
    基础数据模型

    所有模型都是不可变的（frozen=True），计算结果通过创建新实例返回。
    """

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        pass

    @classmethod
    @abstractmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BaseModel":
        """从字典创建"""
        pass

    def validate(self) -> tuple[bool, str]:
        """
        数据校验

        Returns:
            (是否通过, 错误信息)
        """
        return True, ""
