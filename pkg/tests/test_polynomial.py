# -*- coding: utf-8 -*-
"""
亏格多项式测试
"""

import pytest

from data_platform.models import GenusPolynomial, OddExponent, MalformedPolynomial, parse_poly


class TestParseAndFormat:
    """文本解析与格式化"""

    def test_parse(self):
        assert parse_poly("4z^2 + 12z^4").coeffs == {2: 4, 4: 12}
        assert parse_poly("2 + 14z").coeffs == {0: 2, 1: 14}
        assert parse_poly("z").coeffs == {1: 1}
        assert parse_poly("-z^2 + 3").coeffs == {0: 3, 2: -1}

    def test_format_ascending(self):
        poly = GenusPolynomial.from_coeffs({3: 48, 1: 48, 2: 160})
        assert poly.format() == "48z + 160z^2 + 48z^3"
        assert GenusPolynomial.zero().format() == "0"
        assert GenusPolynomial.monomial(2, -1).format() == "-z^2"

    @pytest.mark.parametrize("text", ["", "z^-1", "abc", "2 +", "-"])
    def test_malformed(self, text):
        with pytest.raises(MalformedPolynomial):
            parse_poly(text)

    def test_structured_form(self):
        assert parse_poly("4z^2 + 12z^4").to_dict() == {"2": 4, "4": 12}
        assert GenusPolynomial.from_dict({"2": 4, "4": 12}) == parse_poly("4z^2 + 12z^4")


class TestArithmetic:
    """运算与谓词"""

    def test_zero_coefficients_dropped(self):
        poly = GenusPolynomial(((1, 2), (1, -2), (0, 1)))
        assert poly == GenusPolynomial.one()

    def test_mul_and_scalar(self):
        product = parse_poly("2 + 2z") * parse_poly("2z")
        assert product == parse_poly("4z + 4z^2")
        assert 2 * parse_poly("z") == parse_poly("2z")
        assert parse_poly("z") * 3 == parse_poly("3z")

    def test_evaluate(self):
        assert parse_poly("16z^2 + 16z^3 + 112z^4 + 80z^5 + 192z^6 + 32z^7 + 64z^8").evaluate(1) == 512

    def test_big_coefficients_are_exact(self):
        big = GenusPolynomial.monomial(0, 2 ** 62) * GenusPolynomial.monomial(1, 2 ** 62)
        assert big.coeffs == {1: 2 ** 124}

    def test_halve_exponents(self):
        assert parse_poly("4z^2 + 12z^4").halve_exponents() == parse_poly("4z + 12z^2")
        with pytest.raises(OddExponent):
            parse_poly("2z + 2z^2").halve_exponents()

    def test_interpolating(self):
        assert not parse_poly("4z^2 + 12z^4").is_interpolating()
        assert parse_poly("2z + 2z^2").is_interpolating()
        assert GenusPolynomial.zero().is_interpolating()

    def test_singleton_nonconstant(self):
        assert parse_poly("8z").is_singleton_nonconstant()
        assert not parse_poly("2").is_singleton_nonconstant()
        assert not parse_poly("8z + 8z^2").is_singleton_nonconstant()

    def test_even_coefficients(self):
        assert parse_poly("2 + 14z + 16z^2").all_coefficients_even()
        assert not parse_poly("1 + 2z").all_coefficients_even()


def _random_poly(rng, step: int = 1) -> GenusPolynomial:
    return GenusPolynomial(tuple(
        (step * rng.randint(0, 5), rng.randint(-9, 9)) for _ in range(rng.randint(0, 5))
    ))


def _interval_poly(rng) -> GenusPolynomial:
    start = rng.randint(0, 4)
    return GenusPolynomial(tuple(
        (d, rng.randint(1, 9)) for d in range(start, start + rng.randint(1, 4))
    ))


class TestRingProperties:
    """随机多项式上的环性质"""

    def test_mul_commutative_and_associative(self, rng):
        for _ in range(200):
            p, q, s = _random_poly(rng), _random_poly(rng), _random_poly(rng)
            assert p * q == q * p
            assert (p * q) * s == p * (q * s)

    def test_evaluate_is_homomorphism(self, rng):
        for _ in range(200):
            p, q = _random_poly(rng), _random_poly(rng)
            x = rng.randint(-3, 3)
            assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)
            assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
        assert GenusPolynomial.one().evaluate(0) == 1

    def test_halve_commutes_with_mul(self, rng):
        for _ in range(200):
            p, q = _random_poly(rng, step=2), _random_poly(rng, step=2)
            assert (p * q).halve_exponents() == p.halve_exponents() * q.halve_exponents()

    def test_interpolating_closed_under_products(self, rng):
        for _ in range(200):
            p, q = _interval_poly(rng), _interval_poly(rng)
            assert p.is_interpolating() and q.is_interpolating()
            assert (p * q).is_interpolating()
