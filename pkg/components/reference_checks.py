# -*- coding: utf-8 -*-
"""
参考结果检查 (verify-paper)

每项检查重新计算一个已发表的数值并与期望值比对，
失败时报告期望值与实际值。
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from data_platform.models.polynomial import GenusPolynomial
from data_platform.models.rotation import SignedRotation
from capability_platform.calculators import BouquetCalculator, SurfaceCalculator

# ========== 参考带状图 ==========

NONINTERPOLATING_4 = "(a, b, c, d, -b, -a, c, d)"
EXAMPLE_SEQUENCE_10 = "(a, b, -a, c, b, i, i, d, e, c, f, g, h, d, j, -j, h, -e, g, f)"
NINE_EDGE = "(h, a, b, c, d, c, a, d, b, h, i, e, f, -e, g, -f, g, -i)"
SIXTEEN_SLOT = "(a, c, h, c, b, h, b, a, d, g, e, f, e, d, g, f)"

PDE_PAIR_4 = ("(a, c, -a, d, b, d, c, -b)", "(a, c, b, -a, -b, d, c, d)")
PDG_PAIR_5 = ("(a, b, a, c, b, d, e, c, d, e)", "(a, b, a, c, d, b, e, d, c, e)")
FACE_PAIR_5 = ("(a, b, c, a, d, c, e, b, d, e)", "(a, b, c, a, d, e, c, b, e, d)")
FACE_PAIR_4 = ("(a, b, -a, c, -b, d, c, d)", "(a, b, c, -b, d, -a, d, c)")

# 素类表：(共享同一多项式的序列, ∂ε, ∂Γ)
PRIME_TABLE: List[Tuple[Tuple[str, ...], str, Optional[str]]] = [
    (("(0)",), "2", "2"),
    (("(-0)",), "2z", None),
    (("(1, 1)",), "2 + 2z^2", "2 + 2z"),
    (("(-1, 1)", "(-1, -1)"), "2z + 2z^2", None),
    (("(1, 1, 2)",), "2 + 6z^2", "2 + 6z"),
    (("(2, 2, 2)",), "8z^2", "8z"),
    (("(-1, 1, 2)", "(-2, -1, 1)", "(-2, -2, 2)"), "2z + 2z^2 + 4z^3", None),
    (("(-2, 1, 1)", "(-2, -2, -2)"), "2z + 6z^2", None),
    (("(-1, -1, 2)", "(-2, -1, -1)", "(-2, 2, 2)"), "4z^2 + 4z^3", None),
    (("(1, 1, 1, 3)",), "2 + 14z^2", "2 + 14z"),
    (("(1, 1, 2, 2)", "(2, 2, 2, 2)"), "2 + 10z^2 + 4z^4", "2 + 10z + 4z^2"),
    (("(1, 2, 2, 3)", "(2, 2, 3, 3)"), "12z^2 + 4z^4", "12z + 4z^2"),
    (("(3, 3, 3, 3)",), "8z^2 + 8z^4", "8z + 8z^2"),
]


@dataclass(frozen=True)
class CheckResult:
    """单项检查结果"""
    name: str
    passed: bool
    expected: str
    actual: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'passed': self.passed,
            'expected': self.expected,
            'actual': self.actual,
        }

    def render(self) -> str:
        if self.passed:
            return f"PASS  {self.name}"
        return f"FAIL  {self.name}: 期望 {self.expected}, 实际 {self.actual}"


def _check(name: str, expected: Any, actual: Any) -> CheckResult:
    return CheckResult(name, expected == actual, str(expected), str(actual))


def _poly(text: str) -> GenusPolynomial:
    return GenusPolynomial.parse(text)


def _rot(text: str) -> SignedRotation:
    return SignedRotation.parse(text)


# ========== 检查项 ==========

def _anchor_checks(ctx) -> List[CheckResult]:
    return [
        _check("f(1,1)=2", 2, BouquetCalculator.faces(_rot("(a, a)"))),
        _check("f(1,-1)=1", 1, BouquetCalculator.faces(_rot("(a, -a)"))),
        _check("f(1,2,1,2)=1", 1, BouquetCalculator.faces(_rot("(a, b, a, b)"))),
    ]


def _example_checks(ctx) -> List[CheckResult]:
    r = _rot(NONINTERPOLATING_4)
    pde = ctx.engine.pde_direct(r)
    nine = _rot(NINE_EDGE)
    expected_nine = _poly("16z^2 + 16z^3 + 112z^4 + 80z^5 + 192z^6 + 32z^7 + 64z^8")
    pipeline = (GenusPolynomial.monomial(1, 4)
                * _poly("2 + 10z^2 + 4z^4")
                * _poly("2z + 2z^2 + 4z^3"))
    return [
        _check("∂ε(a,b,c,d,-b,-a,c,d)", _poly("4z^2 + 12z^4"), pde),
        _check("∂ε(a,b,c,d,-b,-a,c,d) 非插值", False, pde.is_interpolating()),
        _check("∂Γ 十六槽位花束", _poly("48z + 160z^2 + 48z^3"), ctx.engine.pdg(_rot(SIXTEEN_SLOT))),
        _check("∂ε 九边花束 (直接枚举)", expected_nine, ctx.engine.pde_direct(nine)),
        _check("∂ε 九边花束 (剥离/分解)", expected_nine, ctx.engine.pde_bouquet(nine)),
        _check("∂ε 九边花束 (因子乘积)", expected_nine, pipeline),
        _check("十边花束带符号序列", "(-4, -1, -0, 0, 1, 2, 2, 2, 3, 5)",
               BouquetCalculator.signed_sequence(_rot(EXAMPLE_SEQUENCE_10)).format()),
    ]


def _prime_table_checks(ctx) -> List[CheckResult]:
    by_sequence: Dict[str, List] = {}
    for c in ctx.census.classes_up_to(3, prime_only=True):
        by_sequence.setdefault(c.sequence.format(), []).append(c)
    for c in ctx.census.enumerate_bouquets(4, orientable_only=True, prime_only=True):
        by_sequence.setdefault(c.sequence.format(), []).append(c)

    results = []
    for sequences, pde_text, pdg_text in PRIME_TABLE:
        for sequence in sequences:
            members = by_sequence.get(sequence, [])
            results.append(_check(f"素类 {sequence} 唯一", 1, len(members)))
            if len(members) != 1:
                continue
            c = members[0]
            results.append(_check(f"∂ε {sequence}", _poly(pde_text), c.pde))
            if pdg_text is not None:
                results.append(_check(f"∂Γ {sequence}", _poly(pdg_text), c.pdg))
    return results


def _theta_checks(ctx) -> List[CheckResult]:
    t_max = int(ctx.config.get('verify', {}).get('theta_max_tests', 12))
    census = ctx.census
    results = []
    for t in range(1, t_max + 1):
        m = SurfaceCalculator.to_map(census.theta(t))
        results.append(_check(f"γ(Θ_{t})", census.theta_genus(t), SurfaceCalculator.genus(m)))
        results.append(_check(f"∂Γ(Θ_{t})", census.theta_closed_form(t), census.theta_pdg(t)))
    return results


def _classification_checks(ctx) -> List[CheckResult]:
    report = ctx.census.verify_classification(3, 4)
    return [
        _check("素类个数 e=1,2,3", {1: 2, 2: 3, 3: 10}, report.prime_counts_all),
        _check("可定向素类个数 e=4", 6, report.prime_counts_orientable.get(4)),
        _check("序列决定类与多项式 (定理范围内)", True, report.claims_hold),
    ]


def _pair_values(ctx, pair, fn) -> Tuple[Any, Any]:
    return fn(_rot(pair[0])), fn(_rot(pair[1]))


def _pair_checks(ctx) -> List[CheckResult]:
    seq = lambda r: BouquetCalculator.signed_sequence(r).format()
    faces = BouquetCalculator.faces
    return [
        _check("e=4 反例对序列相同", ("(-2, -1, 1, 2)",) * 2, _pair_values(ctx, PDE_PAIR_4, seq)),
        _check("e=4 反例对 ∂ε",
               (_poly("4z^2 + 8z^3 + 4z^4"), _poly("2z + 2z^2 + 8z^3 + 4z^4")),
               _pair_values(ctx, PDE_PAIR_4, ctx.engine.pde_direct)),
        _check("e=5 反例对序列相同", ("(1, 2, 2, 2, 3)",) * 2, _pair_values(ctx, PDG_PAIR_5, seq)),
        _check("e=5 反例对 ∂Γ",
               (_poly("12z + 20z^2"), _poly("2 + 14z + 16z^2")),
               _pair_values(ctx, PDG_PAIR_5, ctx.engine.pdg)),
        _check("(2,2,2,3,3) 对面数", (2, 4), _pair_values(ctx, FACE_PAIR_5, faces)),
        _check("(-2,-1,1,2) 对面数", (2, 1), _pair_values(ctx, FACE_PAIR_4, faces)),
    ]


def _search_checks(ctx) -> List[CheckResult]:
    census = ctx.census
    hits_31 = census.search_conjecture_31(3)
    hits_53 = census.search_conjecture_53(4)
    hits_31_5 = census.search_conjecture_31(5)
    theta5 = BouquetCalculator.canonical(census.theta(5))
    target_53 = BouquetCalculator.canonical(_rot(NONINTERPOLATING_4))
    return [
        _check("单系数搜索 e ≤ 3", [("(1, 2, 3, 1, 2, 3)", "8z")],
               [(c.canonical, c.pdg.format()) for c in hits_31]),
        _check("插值搜索 e ≤ 4 含 (a,b,c,d,-b,-a,c,d)", True,
               any(c.canonical == target_53 for c in hits_53)),
        _check("单系数搜索 e ≤ 5 含 Θ_5 (32z^2)", [_poly("32z^2")],
               [c.pdg for c in hits_31_5 if c.canonical == theta5]),
    ]


CHECK_GROUPS: List[Callable] = [
    _anchor_checks,
    _example_checks,
    _prime_table_checks,
    _theta_checks,
    _classification_checks,
    _pair_checks,
    _search_checks,
]


def run_reference_checks(ctx) -> List[CheckResult]:
    results: List[CheckResult] = []
    for group in CHECK_GROUPS:
        results.extend(group(ctx))
    return results


def render_checks(checks: List[CheckResult]) -> str:
    passed = sum(1 for c in checks if c.passed)
    lines = [c.render() for c in checks]
    lines.append("=" * 50)
    lines.append(f"{'✅' if passed == len(checks) else '❌'} {passed}/{len(checks)} 项通过")
    return "\n".join(lines)
