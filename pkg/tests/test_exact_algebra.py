"""Half-integer bookkeeping and signed square roots of rationals."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from monopole_algebra import DomainError, HalfInt, IncommensurableRadicandsError, SignedSqrtRational
from monopole_algebra.exact_algebra import (
    as_half_int,
    factorial,
    generalized_binomial,
)


class TestHalfInt:
    def test_parse_integer(self):
        assert HalfInt.parse("3").twice_value == 6

    def test_parse_half(self):
        assert HalfInt.parse("3/2").twice_value == 3

    def test_parse_negative_half(self):
        assert HalfInt.parse("-1/2").twice_value == -1

    def test_parse_whitespace(self):
        assert HalfInt.parse(" 5/2 ").twice_value == 5

    @pytest.mark.parametrize("bad", ["0.5", "1/3", "1/4", "", "a", "3/", "/2", "1.5", "+ 1"])
    def test_parse_rejects(self, bad):
        with pytest.raises(DomainError):
            HalfInt.parse(bad)

    def test_str_roundtrip(self):
        for text in ["0", "2", "-3", "1/2", "-5/2"]:
            assert str(HalfInt.parse(text)) == text

    def test_arithmetic(self):
        a, b = HalfInt.parse("3/2"), HalfInt.parse("1/2")
        assert (a + b).twice_value == 4
        assert (a - b).twice_value == 2
        assert (-a).twice_value == -3
        assert abs(HalfInt.parse("-5/2")) == HalfInt.parse("5/2")

    def test_ordering(self):
        assert HalfInt.parse("1/2") < HalfInt.parse("3/2")
        assert HalfInt.from_int(2) >= HalfInt.parse("3/2")

    def test_is_integer(self):
        assert HalfInt.from_int(3).is_integer
        assert not HalfInt.parse("3/2").is_integer

    def test_float(self):
        assert float(HalfInt.parse("-3/2")) == -1.5

    @given(st.integers(-50, 50), st.integers(-50, 50))
    def test_addition_matches_fractions(self, ta, tb):
        a, b = HalfInt(ta), HalfInt(tb)
        assert Fraction((a + b).twice_value, 2) == Fraction(ta, 2) + Fraction(tb, 2)

    def test_as_half_int_coercions(self):
        assert as_half_int(2).twice_value == 4
        assert as_half_int("5/2").twice_value == 5
        assert as_half_int(HalfInt(1)).twice_value == 1
        with pytest.raises(DomainError):
            as_half_int(1.5)
        with pytest.raises(DomainError):
            as_half_int(True)


class TestFactorial:
    def test_small_values(self):
        assert [factorial(n) for n in range(6)] == [1, 1, 2, 6, 24, 120]

    def test_large_value_exact(self):
        assert factorial(30) == math.factorial(30)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            factorial(-1)

    def test_generalized_binomial_negative_upper(self):
        # (-1 choose 2) = 1, (-2 choose 3) = -4
        assert generalized_binomial(Fraction(-1), 2) == 1
        assert generalized_binomial(Fraction(-2), 3) == -4

    def test_generalized_binomial_integer_consistency(self):
        assert generalized_binomial(Fraction(7), 3) == math.comb(7, 3)


class TestSignedSqrtRational:
    def test_render(self):
        v = SignedSqrtRational.sqrt_of(Fraction(1, 6))
        assert v.render() == "√(1/6)"
        assert (-v).render() == "-√(1/6)"
        assert SignedSqrtRational.zero().render() == "0"

    def test_to_float(self):
        v = SignedSqrtRational.sqrt_of(Fraction(4, 9))
        assert v.to_float() == pytest.approx(2 / 3, abs=0)

    def test_from_rational_squares(self):
        v = SignedSqrtRational.from_rational(Fraction(-2, 3))
        assert v.sign == -1
        assert v.radicand == Fraction(4, 9)

    def test_mul(self):
        a = SignedSqrtRational.sqrt_of(Fraction(1, 2))
        b = -SignedSqrtRational.sqrt_of(Fraction(2, 9))
        c = a * b
        assert c.sign == -1
        assert c.radicand == Fraction(1, 9)

    def test_div(self):
        a = SignedSqrtRational.sqrt_of(Fraction(1, 6))
        b = SignedSqrtRational.sqrt_of(Fraction(2, 3))
        assert (a / b).radicand == Fraction(1, 4)
        with pytest.raises(ZeroDivisionError):
            a / SignedSqrtRational.zero()

    def test_add_commensurate(self):
        a = SignedSqrtRational.sqrt_of(Fraction(1, 9))
        b = SignedSqrtRational.sqrt_of(Fraction(4, 9))
        s = a.add_commensurate(b)
        assert s.radicand == Fraction(1, 1)
        d = a.add_commensurate(-b)
        assert d.sign == -1 and d.radicand == Fraction(1, 9)

    def test_add_commensurate_zero(self):
        a = SignedSqrtRational.sqrt_of(Fraction(1, 9))
        assert a.add_commensurate(-a).sign == 0
        assert a.add_commensurate(SignedSqrtRational.zero()) == a

    def test_add_incommensurate_rejected(self):
        a = SignedSqrtRational.sqrt_of(Fraction(1, 2))
        b = SignedSqrtRational.sqrt_of(Fraction(1, 3))
        with pytest.raises(IncommensurableRadicandsError):
            a.add_commensurate(b)

    def test_scaled_by(self):
        a = SignedSqrtRational.sqrt_of(Fraction(1, 2))
        s = a.scaled_by(Fraction(-3))
        assert s.sign == -1
        assert s.radicand == Fraction(9, 2)

    @given(st.fractions(min_value=-10, max_value=10, max_denominator=40),
           st.fractions(min_value=-10, max_value=10, max_denominator=40))
    def test_product_matches_float(self, qa, qb):
        a = SignedSqrtRational.from_rational(qa)
        b = SignedSqrtRational.from_rational(qb)
        assert (a * b).to_float() == pytest.approx(float(qa) * float(qb), abs=1e-12)

    @given(st.fractions(min_value=0, max_value=100, max_denominator=50))
    def test_sqrt_squares_back(self, q):
        v = SignedSqrtRational.sqrt_of(q)
        assert (v * v).radicand == q * q or (q == 0 and v.sign == 0)

    def test_negative_radicand_rejected(self):
        with pytest.raises(DomainError):
            SignedSqrtRational.sqrt_of(Fraction(-1, 2))
