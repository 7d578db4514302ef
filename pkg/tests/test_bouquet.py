# -*- coding: utf-8 -*-
"""
花束计算器测试：交错数、分解、规范形
"""

from itertools import permutations

import pytest

from data_platform.models import (
    RotationSystem,
    SignedRotation,
    SignedSequence,
    NoSuchEdge,
    NotABouquet,
    MalformedRotation,
    parse_poly,
)
from capability_platform.calculators import BouquetCalculator

TEN_EDGE = "(a, b, -a, c, b, i, i, d, e, c, f, g, h, d, j, -j, h, -e, g, f)"


def _r(text: str) -> SignedRotation:
    return SignedRotation.parse(text)


def _orbit(r: SignedRotation) -> frozenset:
    """旋转 × 反射 × 重命名下的全部编码（逐一枚举）"""
    orbit = set()
    for seq in (r.seq, r.seq[::-1]):
        for shift in range(len(seq)):
            rotated = seq[shift:] + seq[:shift]
            for perm in permutations(range(r.edge_count)):
                orbit.add(tuple((perm[e], r.twisted[e]) for e in rotated))
    return frozenset(orbit)


class TestSignedSequence:
    """交错数与带符号序列"""

    def test_ten_edge_interlace_numbers(self):
        r = _r(TEN_EDGE)
        alphas = dict(zip(r.labels, BouquetCalculator.interlace_numbers(r)))
        assert alphas == {
            'a': 1, 'b': 2, 'c': 3, 'd': 5, 'e': 4,
            'f': 2, 'g': 2, 'h': 1, 'i': 0, 'j': 0,
        }
        assert set(r.twisted_labels()) == {'a', 'e', 'j'}

    def test_ten_edge_sequence_renders_negative_zero(self):
        sequence = BouquetCalculator.signed_sequence(_r(TEN_EDGE))
        assert sequence.format() == "(-4, -1, -0, 0, 1, 2, 2, 2, 3, 5)"
        assert sequence.trivial_counts() == (1, 1)

    def test_interlace_table(self):
        table = BouquetCalculator.interlace_table(_r(TEN_EDGE))
        row = table[table['edge'] == 'j'].iloc[0]
        assert row['alpha'] == 0
        assert row['beta'] == "-0"
        assert list(table.columns) == ['edge', 'twisted', 'alpha', 'beta']

    def test_example_sequences(self):
        assert BouquetCalculator.signed_sequence(_r("(a, b, -a, c, b, -c, d, d)")).format() == "(-1, -1, 0, 2)"
        assert BouquetCalculator.signed_sequence(_r("(a, b, c, d, -b, -a, c, d)")).format() == "(-2, -2, 3, 3)"

    def test_theta_sequence(self):
        assert BouquetCalculator.signed_sequence(_r("(1, 2, 3, 1, 2, 3)")).format() == "(2, 2, 2)"

    def test_sequence_parse(self):
        sequence = SignedSequence.parse("(-4, -1, -0, 0, 1, 2, 2, 2, 3, 5)")
        assert sequence.beta_sum() == 10
        assert sequence.validate() == (True, "")
        with pytest.raises(MalformedRotation):
            SignedSequence.parse("(1, x)")


class TestStripAndDelete:
    """平凡环剥离与删边"""

    def test_strip_trivial(self):
        result = BouquetCalculator.strip_trivial(_r(TEN_EDGE))
        assert (result.twisted, result.untwisted) == (1, 1)
        assert result.reduced.edge_count == 8
        assert 'i' not in result.reduced.labels

    def test_strip_nine_edge(self, nine_edge_bouquet):
        result = BouquetCalculator.strip_trivial(nine_edge_bouquet)
        assert (result.twisted, result.untwisted) == (1, 1)
        assert set(result.reduced.labels) == set("abcdefg")

    def test_delete_trivial_leaves_prime(self):
        for text in ("(a, b, -a, b, c, c)", "(a, c, c, b, -a, b)"):
            r = _r(text)
            assert BouquetCalculator.signed_sequence(r).format() == "(-1, 0, 1)"
            reduced = BouquetCalculator.delete(r, 'c')
            assert reduced.format() == "(a, b, -a, b)"
            assert BouquetCalculator.signed_sequence(reduced).format() == "(-1, 1)"
            assert BouquetCalculator.is_prime(reduced)

    def test_delete(self):
        r = BouquetCalculator.delete(_r("(a, b, -a, b)"), 'a')
        assert r.format() == "(b, b)"

    def test_delete_missing(self):
        with pytest.raises(NoSuchEdge):
            BouquetCalculator.delete(_r("(a, a)"), 'z')


class TestJoinAndFactor:
    """连接与素分解"""

    def test_join_renames_clashes(self):
        joined = BouquetCalculator.join(_r("(a, a)"), _r("(a, a)"))
        assert joined.format() == "(a, a, a', a')"

    def test_join_at_corner(self):
        joined = BouquetCalculator.join(_r("(a, -a)"), _r("(b, b)"), corner=1)
        assert joined.format() == "(a, b, b, -a)"

    def test_join_multiplies_orientable_genus(self, engine):
        p, q = _r("(c, h, c, b, h, b)"), _r("(d, g, e, f, e, d, g, f)")
        joined = BouquetCalculator.join(p, q)
        assert joined.edge_count == 7
        assert engine.pdg(p) == parse_poly("2 + 6z")
        assert engine.pdg(joined) == parse_poly("24z + 80z^2 + 24z^3")
        assert engine.pdg(joined) == engine.pdg(p) * engine.pdg(q)

    def test_join_corner_out_of_range(self):
        with pytest.raises(ValueError):
            BouquetCalculator.join(_r("(a, a)"), _r("(b, b)"), corner=3)

    def test_factor_three_loops(self):
        factors = BouquetCalculator.factor(_r("(a, a, b, b, c, c)"))
        assert [f.format() for f in factors] == ["(a, a)", "(b, b)", "(c, c)"]

    def test_factor_nested(self):
        factors = BouquetCalculator.factor(_r("(a, b, c, c, b, a)"))
        assert [f.format() for f in factors] == ["(a, a)", "(b, b)", "(c, c)"]

    def test_nested_factors_rejoin_at_corner(self):
        r = _r("(a, b, -b, a)")
        outer, inner = BouquetCalculator.factor(r)
        assert (outer.format(), inner.format()) == ("(a, a)", "(b, -b)")
        assert BouquetCalculator.iso(BouquetCalculator.join(outer, inner, corner=1), r)

    def test_factor_keeps_twist(self):
        factors = BouquetCalculator.factor(_r("(e, a, b, a, b, -e)"))
        assert sorted(f.format() for f in factors) == ["(a, b, a, b)", "(e, -e)"]

    def test_factor_empty(self):
        assert BouquetCalculator.factor(_r("()")) == []

    def test_is_prime(self):
        assert BouquetCalculator.is_prime(_r("(a, b, a, b)"))
        assert BouquetCalculator.is_prime(_r("(a, a)"))
        assert not BouquetCalculator.is_prime(_r("(a, a, b, b)"))
        assert not BouquetCalculator.is_prime(_r("()"))

    def test_factors_rejoin_to_same_polynomial_class(self):
        r = _r("(a, b, a, b, c, -c, d, e, d, e)")
        factors = BouquetCalculator.factor(r)
        assert len(factors) == 3
        assert all(BouquetCalculator.is_prime(f) for f in factors)
        assert sum(f.edge_count for f in factors) == r.edge_count


class TestCanonical:
    """规范形与同构"""

    def test_simple_forms(self):
        assert BouquetCalculator.canonical(_r("(a, b, a, b)")) == "(1, 2, 1, 2)"
        assert BouquetCalculator.canonical(_r("(x, -x)")) == "(1, -1)"
        assert BouquetCalculator.canonical(_r("(b, a, a, b)")) == "(1, 1, 2, 2)"
        assert BouquetCalculator.canonical(_r("()")) == "()"

    def test_rotation_and_reflection_invariance(self, make_bouquet):
        for _ in range(50):
            r = make_bouquet(4)
            labels = r.label_sequence()
            twisted = r.twisted_labels()
            shifted = SignedRotation.from_labels(labels[3:] + labels[:3], twisted)
            mirrored = SignedRotation.from_labels(labels[::-1], twisted)
            assert BouquetCalculator.iso(r, shifted)
            assert BouquetCalculator.iso(r, mirrored)

    def test_relabel_invariance(self):
        assert BouquetCalculator.iso(_r("(a, b, -a, b)"), _r("(y, x, y, -x)"))

    def test_same_sequence_not_equivalent(self):
        p, q = _r("(a, a, b, b, c, c)"), _r("(a, a, b, c, c, b)")
        assert BouquetCalculator.signed_sequence(p) == BouquetCalculator.signed_sequence(q)
        assert not BouquetCalculator.iso(p, q)

    def test_canonical_rotation_is_fixed_point(self, make_bouquet):
        for _ in range(30):
            r = make_bouquet(3)
            c = BouquetCalculator.canonical_rotation(r)
            assert BouquetCalculator.canonical(c) == BouquetCalculator.canonical(r)


class TestConversion:
    """单顶点旋转系统与带符号旋转互转"""

    def test_from_rotation_system(self):
        r = RotationSystem.parse("v0: a b -a b").to_signed_rotation()
        assert r.format() == "(a, b, -a, b)"
        assert r.to_rotation_system().format() == "v0: a b -a b"

    def test_not_a_bouquet(self, two_vertex_graph):
        with pytest.raises(NotABouquet):
            two_vertex_graph.to_signed_rotation()


class TestCanonicalAgainstOrbits:
    """n ≤ 4 时规范形与逐一枚举的同构轨道一致"""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_iso_matches_orbit_search(self, census, n):
        orbits = {}
        for r in census.raw_rotations(n):
            orbits.setdefault(_orbit(r), []).append(r)

        keys = set()
        for members in orbits.values():
            assert all(BouquetCalculator.iso(members[0], m) for m in members)
            keys.add(BouquetCalculator.canonical_key(members[0]))
        assert len(keys) == len(orbits)
        assert len(orbits) == len(census.canonical_forms(n))

        reps = [members[0] for members in orbits.values()]
        limit = len(reps) if n <= 3 else 40
        for i, a in enumerate(reps[:limit]):
            for b in reps[i + 1:]:
                assert not BouquetCalculator.iso(a, b)
