# -*- coding: utf-8 -*-
"""
统一数据模型层

所有数据模型都是不可变的值对象，计算由 capability_platform 完成。
"""

from .base import BaseModel, TwistMark, ConjectureId
from .errors import (
    RibbonGraphError,
    InvalidFlagMap,
    MalformedFlagMap,
    NotInvolution,
    FixedPoint,
    BadEdgeOrbit,
    MaskOutOfRange,
    RotationParseError,
    LabelCountNotTwo,
    DoubleNegative,
    MalformedRotation,
    NoSuchEdge,
    NotABouquet,
    NonOrientable,
    PolynomialError,
    OddExponent,
    MalformedPolynomial,
    CapExceeded,
)
from .flag_map import FlagMap, EdgeSubset
from .rotation import Slot, RotationSystem, SignedRotation, parse_rotation, as_rotation_system
from .signed_sequence import SignedSequence
from .polynomial import GenusPolynomial, parse_poly
from .bouquet_class import BouquetClass

__all__ = [
    'BaseModel',
    'TwistMark',
    'ConjectureId',
    # Errors
    'RibbonGraphError',
    'InvalidFlagMap',
    'MalformedFlagMap',
    'NotInvolution',
    'FixedPoint',
    'BadEdgeOrbit',
    'MaskOutOfRange',
    'RotationParseError',
    'LabelCountNotTwo',
    'DoubleNegative',
    'MalformedRotation',
    'NoSuchEdge',
    'NotABouquet',
    'NonOrientable',
    'PolynomialError',
    'OddExponent',
    'MalformedPolynomial',
    'CapExceeded',
    # Models
    'FlagMap',
    'EdgeSubset',
    'Slot',
    'RotationSystem',
    'SignedRotation',
    'parse_rotation',
    'as_rotation_system',
    'SignedSequence',
    'GenusPolynomial',
    'parse_poly',
    'BouquetClass',
]
