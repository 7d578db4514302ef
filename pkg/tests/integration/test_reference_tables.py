#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
参考结果集成测试

在较大边数上运行完整普查，复现素类表、反例对与 Θ_t 闭式
"""

import pytest
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from data_platform.models import SignedRotation, GenusPolynomial
from capability_platform.calculators import BouquetCalculator
from components.reference_checks import (
    PRIME_TABLE,
    NONINTERPOLATING_4,
    PDE_PAIR_4,
    PDG_PAIR_5,
    FACE_PAIR_5,
    FACE_PAIR_4,
)


def _canonical(text: str) -> str:
    return BouquetCalculator.canonical(SignedRotation.parse(text))


@pytest.fixture(scope="module")
def prime_rows(census):
    """e ≤ 3 的全部素类 + e = 4 的可定向素类，按序列分组"""
    rows = {}
    for c in census.classes_up_to(3, prime_only=True):
        rows.setdefault(c.sequence.format(), []).append(c)
    for c in census.enumerate_bouquets(4, orientable_only=True, prime_only=True):
        rows.setdefault(c.sequence.format(), []).append(c)
    return rows


@pytest.fixture(scope="module")
def extended_report(census):
    return census.verify_classification(4, 5)


class TestPrimeTable:
    """素类多项式表"""

    def test_every_row(self, prime_rows):
        for sequences, pde, pdg in PRIME_TABLE:
            for sequence in sequences:
                members = prime_rows.get(sequence, [])
                assert len(members) == 1, f"序列 {sequence} 对应 {len(members)} 个素类"
                c = members[0]
                assert c.pde == GenusPolynomial.parse(pde), f"{sequence}: {c.pde}"
                if pdg is not None:
                    assert c.pdg == GenusPolynomial.parse(pdg), f"{sequence}: {c.pdg}"

    def test_table_covers_all_primes(self, prime_rows):
        listed = {s for sequences, _, _ in PRIME_TABLE for s in sequences}
        assert set(prime_rows) == listed

    def test_orientable_four_edge_count(self, census):
        assert len(census.enumerate_bouquets(4, orientable_only=True, prime_only=True)) == 6

    def test_shared_polynomial_rows(self, census):
        table = census.classification_table(3, 4)
        sequences = set(table['sequences'])
        assert "(-1, -1), (-1, 1)" in sequences
        assert "(1, 2, 2, 3), (2, 2, 3, 3)" in sequences
        assert "(1, 1, 2, 2), (2, 2, 2, 2)" in sequences


class TestClassificationBoundary:
    """定理范围内成立，范围外出现反例"""

    def test_claims_hold_in_range(self, census):
        report = census.verify_classification(3, 4)
        assert report.claims_hold
        assert report.violations == []
        assert report.prime_counts_orientable[4] == 6

    def test_first_violations(self, extended_report):
        assert extended_report.first_violation('pde') == 4
        assert extended_report.first_violation('pdg') == 5
        assert extended_report.claims_hold

    def test_euler_pair(self, extended_report):
        pair = extended_report.find_pair('pde', *map(_canonical, PDE_PAIR_4))
        assert pair is not None
        assert pair.sequence == "(-2, -1, 1, 2)"
        assert {pair.first_value, pair.second_value} == {
            "4z^2 + 8z^3 + 4z^4", "2z + 2z^2 + 8z^3 + 4z^4",
        }

    def test_orientable_pair(self, extended_report):
        pair = extended_report.find_pair('pdg', *map(_canonical, PDG_PAIR_5))
        assert pair is not None
        assert pair.sequence == "(1, 2, 2, 2, 3)"
        assert {pair.first_value, pair.second_value} == {"12z + 20z^2", "2 + 14z + 16z^2"}

    def test_face_count_pairs(self):
        for pair, faces in ((FACE_PAIR_5, (2, 4)), (FACE_PAIR_4, (2, 1))):
            p, q = (SignedRotation.parse(text) for text in pair)
            assert BouquetCalculator.signed_sequence(p) == BouquetCalculator.signed_sequence(q)
            assert (BouquetCalculator.faces(p), BouquetCalculator.faces(q)) == faces
            assert not BouquetCalculator.iso(p, q)


class TestSearchesAndTheta:
    """猜想搜索与 Θ_t 闭式"""

    def test_interpolating_search(self, census):
        target = _canonical(NONINTERPOLATING_4)
        hits = census.search_conjecture_53(4)
        assert target in {c.canonical for c in hits}
        assert all(not c.orientable for c in hits)

    def test_single_coefficient_search(self, census):
        theta5 = BouquetCalculator.canonical(census.theta(5))
        hits = {c.canonical: c for c in census.search_conjecture_31(5)}
        assert hits[theta5].pdg == GenusPolynomial.parse("32z^2")

    @pytest.mark.parametrize("t", range(1, 13))
    def test_theta_closed_form(self, census, t):
        assert census.check_theta_formula(t)


class TestExhaustiveProperties:
    """全部类上的穷举交叉校验（快速路径 e ≤ 4，可加性 e ≤ 5）"""

    def test_bouquet_path_matches_direct(self, census):
        for c in census.classes_up_to(4):
            assert census.engine.pde_direct(c.rotation) == c.pde, c.canonical

    @pytest.mark.parametrize("edges", range(1, 6))
    def test_additivity_all_subsets(self, census, edges):
        for form in census.canonical_forms(edges):
            r = SignedRotation.parse(form)
            for mask in range(1 << edges):
                assert census.engine.check_additivity(r, mask), (form, mask)


class TestVerifyCommand:
    """verify-paper 全部通过"""

    def test_verify_paper_passes(self, capsys, monkeypatch, tmp_path):
        from main import run

        monkeypatch.delenv("PD_THREADS", raising=False)
        monkeypatch.chdir(tmp_path)
        code = run(["verify-paper"])
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert code == 0
        assert "Θ_t" in out
