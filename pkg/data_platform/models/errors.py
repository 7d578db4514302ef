# -*- coding: utf-8 -*-
"""
统一异常定义

所有带状图相关错误都继承 RibbonGraphError，CLI 按类别映射退出码。
"""


class RibbonGraphError(Exception):
    """带状图计算相关错误的基类"""
    pass


# --- 旗标映射 (FlagMap) 校验 ---

class InvalidFlagMap(RibbonGraphError):
    """旗标映射数据不合法"""
    pass


class MalformedFlagMap(InvalidFlagMap):
    """数组长度不一致或下标越界"""
    pass


class NotInvolution(InvalidFlagMap):
    """置换不是对合 (a[a[i]] != i)"""
    pass


class FixedPoint(InvalidFlagMap):
    """对合存在不动点"""
    pass


class BadEdgeOrbit(InvalidFlagMap):
    """<a0,a2> 轨道大小不为 4，或轨道内 edge_of 不一致"""
    pass


class MaskOutOfRange(RibbonGraphError):
    """边子集掩码超出边数范围"""
    pass


# --- 旋转解析 ---

class RotationParseError(RibbonGraphError):
    """旋转文本解析失败"""
    pass


class LabelCountNotTwo(RotationParseError):
    """某条边的标签出现次数不是 2"""
    pass


class DoubleNegative(RotationParseError):
    """同一条边的两个半边都带负号"""
    pass


class MalformedRotation(RotationParseError):
    """空标签、非法标签或图文件行格式错误"""
    pass


class NoSuchEdge(RibbonGraphError):
    """边不存在"""
    pass


class NotABouquet(RibbonGraphError):
    """单顶点操作作用在了多顶点旋转系统上"""
    pass


class NonOrientable(RibbonGraphError):
    """要求可定向输入，但带状图不可定向"""
    pass


# --- 多项式 ---

class PolynomialError(RibbonGraphError):
    """多项式相关错误"""
    pass


class OddExponent(PolynomialError):
    """指数减半时遇到奇数次项（上游输入不可定向）"""
    pass


class MalformedPolynomial(PolynomialError):
    """多项式文本解析失败"""
    pass


class CapExceeded(RibbonGraphError):
    """超出枚举上限（普查边数上限或直接枚举边数上限）"""
    pass
