# -*- coding: utf-8 -*-
"""
花束等价类数据模型

普查输出的一行：规范旋转及可由它重新计算的全部不变量。
"""

from dataclasses import dataclass, field
from typing import Dict, Any, Optional

from .base import BaseModel
from .rotation import SignedRotation
from .signed_sequence import SignedSequence
from .polynomial import GenusPolynomial


@dataclass(frozen=True)
class BouquetClass(BaseModel):
    """
    花束等价类
    """

    canonical: str = "()"
    rotation: SignedRotation = field(default_factory=SignedRotation)
    sequence: SignedSequence = field(default_factory=SignedSequence)
    prime: bool = False
    orientable: bool = True
    faces: int = 1
    pde: GenusPolynomial = field(default_factory=GenusPolynomial.one)
    pdg: Optional[GenusPolynomial] = None

    @property
    def edge_count(self) -> int:
        return self.rotation.edge_count

    def validate(self) -> tuple[bool, str]:
        if self.orientable != self.rotation.is_orientable():
            return False, f"{self.canonical}: 可定向标记与旋转不一致"
        if self.orientable and self.pdg is None:
            return False, f"{self.canonical}: 可定向类缺少 ∂Γ"
        if not self.orientable and self.pdg is not None:
            return False, f"{self.canonical}: 不可定向类不应有 ∂Γ"
        if self.pde.evaluate(1) != 2 ** self.edge_count:
            return False, f"{self.canonical}: ∂ε(1) != 2^{self.edge_count}"
        return True, ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            'canonical': self.canonical,
            'edges': self.edge_count,
            'sequence': self.sequence.format(),
            'prime': self.prime,
            'orientable': self.orientable,
            'faces': self.faces,
            'pde': self.pde.format(),
            'pde_coeffs': self.pde.to_dict(),
            'pdg': self.pdg.format() if self.pdg is not None else None,
            'pdg_coeffs': self.pdg.to_dict() if self.pdg is not None else None,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BouquetClass":
        pdg = data.get('pdg')
        return cls(
            canonical=data['canonical'],
            rotation=SignedRotation.parse(data['canonical']),
            sequence=SignedSequence.parse(data['sequence']),
            prime=bool(data['prime']),
            orientable=bool(data['orientable']),
            faces=int(data.get('faces', 1)),
            pde=GenusPolynomial.parse(data['pde']),
            pdg=GenusPolynomial.parse(pdg) if pdg else None,
        )
