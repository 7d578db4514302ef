# -*- coding: utf-8 -*-
"""
亏格多项式数据模型

z 的单变量稀疏整系数多项式，系数为任意精度整数，零系数从不存储。
文本格式按次数升序: "4z^2 + 12z^4"，常数项不带 z。
"""

import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Any, Iterable, Mapping, Tuple

from .base import BaseModel
from .errors import OddExponent, MalformedPolynomial

_TERM = re.compile(r'^(-?\d+|-)?\s*\*?\s*(z(?:\^(\d+))?)?$')


def _normalize(pairs: Iterable[Tuple[int, int]]) -> Tuple[Tuple[int, int], ...]:
    acc: Dict[int, int] = defaultdict(int)
    for degree, coeff in pairs:
        acc[int(degree)] += int(coeff)
    return tuple(sorted((d, c) for d, c in acc.items() if c != 0))


@dataclass(frozen=True)
class GenusPolynomial(BaseModel):
    """
    亏格多项式

    terms: 按次数升序的 (次数, 系数) 元组
    """

    terms: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'terms', _normalize(self.terms))
        ok, msg = self.validate()
        if not ok:
            raise MalformedPolynomial(msg)

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[int, int]) -> "GenusPolynomial":
        return cls(tuple(coeffs.items()))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "GenusPolynomial":
        return cls(((degree, coeff),))

    @classmethod
    def zero(cls) -> "GenusPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "GenusPolynomial":
        return cls(((0, 1),))

    def validate(self) -> tuple[bool, str]:
        for degree, coeff in self.terms:
            if degree < 0:
                return False, f"次数不能为负: {degree}"
            if coeff == 0:
                return False, f"零系数不应存储: z^{degree}"
        return True, ""

    # ========== 运算 ==========

    @property
    def coeffs(self) -> Dict[int, int]:
        """次数 → 系数"""
        return dict(self.terms)

    def degrees(self) -> Tuple[int, ...]:
        return tuple(d for d, _ in self.terms)

    def add(self, other: "GenusPolynomial") -> "GenusPolynomial":
        return GenusPolynomial(self.terms + other.terms)

    def mul(self, other: "GenusPolynomial") -> "GenusPolynomial":
        return GenusPolynomial(tuple(
            (d1 + d2, c1 * c2)
            for d1, c1 in self.terms
            for d2, c2 in other.terms
        ))

    def __add__(self, other: "GenusPolynomial") -> "GenusPolynomial":
        return self.add(other)

    def __mul__(self, other) -> "GenusPolynomial":
        if isinstance(other, int):
            return GenusPolynomial(tuple((d, c * other) for d, c in self.terms))
        return self.mul(other)

    __rmul__ = __mul__

    def evaluate(self, x: int) -> int:
        """在整数点求值；x=1 时为系数和"""
        return sum(c * x ** d for d, c in self.terms)

    def halve_exponents(self) -> "GenusPolynomial":
        """
        次数减半: ∂Γ(z) = ∂ε(z^½)

        Raises:
            OddExponent: 存在奇数次项
        """
        for degree, _ in self.terms:
            if degree % 2:
                raise OddExponent(f"存在奇数次项 z^{degree}，输入不可定向")
        return GenusPolynomial(tuple((d // 2, c) for d, c in self.terms))

    # ========== 谓词 ==========

    def is_interpolating(self) -> bool:
        """非零系数的次数是否构成连续区间（空多项式视为插值）"""
        degrees = self.degrees()
        if not degrees:
            return True
        return len(degrees) == degrees[-1] - degrees[0] + 1

    def is_singleton_nonconstant(self) -> bool:
        """是否恰有一个非零系数且其次数 ≥ 1"""
        return len(self.terms) == 1 and self.terms[0][0] >= 1

    def all_coefficients_even(self) -> bool:
        return all(c % 2 == 0 for _, c in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # ========== 文本 ==========

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for degree, coeff in self.terms:
            if degree == 0:
                parts.append(str(coeff))
                continue
            head = "" if coeff == 1 else ("-" if coeff == -1 else str(coeff))
            tail = "z" if degree == 1 else f"z^{degree}"
            parts.append(head + tail)
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.format()

    @classmethod
    def parse(cls, text: str) -> "GenusPolynomial":
        """
        解析 "2 + 14z" / "4z^2 + 12z^4" 形式的文本

        Raises:
            MalformedPolynomial
        """
        body = text.strip()
        if not body:
            raise MalformedPolynomial("空多项式文本")
        pairs = []
        for raw in body.split('+'):
            token = raw.strip()
            match = _TERM.match(token)
            if not token or not match or (match.group(1) is None and match.group(2) is None):
                raise MalformedPolynomial(f"无法解析的项: '{token}'")
            sign_coeff = match.group(1)
            if sign_coeff is None:
                coeff = 1
            elif sign_coeff == '-':
                if match.group(2) is None:
                    raise MalformedPolynomial(f"无法解析的项: '{token}'")
                coeff = -1
            else:
                coeff = int(sign_coeff)
            if match.group(2) is None:
                degree = 0
            else:
                degree = int(match.group(3)) if match.group(3) is not None else 1
            pairs.append((degree, coeff))
        return cls(tuple(pairs))

    def to_dict(self) -> Dict[str, Any]:
        """结构化输出: {次数: 系数}"""
        return {str(d): c for d, c in self.terms}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GenusPolynomial":
        return cls(tuple((int(d), int(c)) for d, c in data.items()))


def parse_poly(text: str) -> GenusPolynomial:
    return GenusPolynomial.parse(text)
