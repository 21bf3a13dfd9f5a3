"""Tests for exact rational, surd and enclosure arithmetic."""

import random
from fractions import Fraction
from math import comb

import pytest

from lct_certify.arith import (
    QuadraticSurd,
    RationalInterval,
    binomial,
    compare_pow2_fractional,
    compare_surd,
    decide_at_least,
    e_enclosure,
    format_rational,
    parse_rational,
    power_of_two,
    power_over_factorial,
)
from lct_certify.models import Ordering, Verdict

try:
    import mpmath

    HAS_MPMATH = True
except ImportError:
    HAS_MPMATH = False


class TestRationalWireForm:
    def test_parse_forms(self):
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational(" -7 ") == -7
        assert parse_rational("0.25") == Fraction(1, 4)
        assert parse_rational(5) == 5

    def test_parse_rejects_garbage(self):
        for bad in ("", "1/0", "abc", "1//2"):
            with pytest.raises(ValueError):
                parse_rational(bad)

    def test_format_always_has_denominator(self):
        assert format_rational(Fraction(6, 4)) == "3/2"
        assert format_rational(3) == "3/1"
        assert format_rational(Fraction(-1, 3)) == "-1/3"

    def test_format_parse_inverse(self):
        for q in (Fraction(0), Fraction(-22, 7), Fraction(10**30, 3)):
            assert parse_rational(format_rational(q)) == q


class TestIntegerHelpers:
    def test_binomial_matches_math_comb(self):
        for n in range(0, 60):
            for k in range(0, n + 1):
                assert binomial(n, k) == comb(n, k)

    def test_binomial_out_of_range(self):
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0

    @pytest.mark.parametrize("n", [0, 1, 7, 30, 113, 400])
    def test_binomial_symmetry_and_pascal(self, n):
        for k in range(0, n + 2):
            assert binomial(n, k) == binomial(n, n - k)
            if n:
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)

    def test_power_over_factorial(self):
        assert power_over_factorial(1) == 1
        assert power_over_factorial(3) == Fraction(27, 6)
        assert power_over_factorial(10) == Fraction(10**10, 3628800)

    def test_power_of_two_negative(self):
        assert power_of_two(-3) == Fraction(1, 8)
        assert power_of_two(0) == 1

    def test_pow2_comparisons_for_index_two(self):
        # 66045^2 > 2^32 and 73815^2 < 2^33
        assert compare_pow2_fractional(66045, 32, 2) == Ordering.GREATER
        assert compare_pow2_fractional(73815, 33, 2) == Ordering.LESS
        assert 66045**2 == 4361942025
        assert 73815**2 == 5448654225

    def test_pow2_equality(self):
        assert compare_pow2_fractional(4, 4, 2) == Ordering.EQUAL
        assert compare_pow2_fractional(Fraction(1, 2), -2, 2) == Ordering.EQUAL

    @pytest.mark.parametrize("t", [2, 3, 5])
    def test_pow2_scaling_invariance(self, t):
        rng = random.Random(t)
        for _ in range(200):
            q = Fraction(rng.randint(1, 300), rng.randint(1, 40))
            p, m = rng.randint(-20, 40), rng.randint(1, 5)
            expected = compare_pow2_fractional(q, p, m)
            # q vs 2^(p/m) is unchanged by raising both sides to t, or by rescaling p/m
            assert compare_pow2_fractional(q**t, p * t, m) == expected
            assert compare_pow2_fractional(q, p * t, m * t) == expected


class TestQuadraticSurd:
    def test_normalises_square_factors(self):
        s = QuadraticSurd(Fraction(0), Fraction(1), 12)
        assert (s.b, s.c) == (2, 3)

    def test_perfect_square_folds_into_rational(self):
        s = QuadraticSurd(Fraction(1), Fraction(2), 9)
        assert s.is_rational
        assert s.a == 7

    def test_gamma_value_below_four(self):
        s = QuadraticSurd(Fraction(2), Fraction(2, 3), 6)
        assert compare_surd(s, 4) == Ordering.LESS
        assert compare_surd(s, 3) == Ordering.GREATER

    def test_negative_coefficient(self):
        s = QuadraticSurd(Fraction(3), Fraction(-1), 2)
        assert compare_surd(s, 2) == Ordering.LESS
        assert compare_surd(s, 1) == Ordering.GREATER

    def test_rational_surd_equal(self):
        assert compare_surd(QuadraticSurd(Fraction(5), Fraction(1), 0), 5) == Ordering.EQUAL

    @pytest.mark.parametrize("seed", range(4))
    def test_negation_reverses_order(self, seed):
        rng = random.Random(seed)
        flipped = {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS, Ordering.EQUAL: Ordering.EQUAL}
        for _ in range(300):
            a = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
            b = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
            c = rng.randint(0, 50)
            r = Fraction(rng.randint(-300, 300), rng.randint(1, 9))
            got = compare_surd(QuadraticSurd(a, b, c), r)
            assert compare_surd(QuadraticSurd(-a, -b, c), -r) == flipped[got]
            if got == Ordering.EQUAL:
                assert QuadraticSurd(a, b, c).is_rational

    @pytest.mark.skipif(not HAS_MPMATH, reason="mpmath not installed")
    def test_random_against_mpmath(self):
        rng = random.Random(7)
        mpmath.mp.dps = 60
        for _ in range(1000):
            a = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
            b = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
            c = rng.randint(0, 200)
            r = Fraction(rng.randint(-400, 400), rng.randint(1, 12))
            s = QuadraticSurd(a, b, c)
            approx = mpmath.mpf(a.numerator) / a.denominator + (
                mpmath.mpf(b.numerator) / b.denominator
            ) * mpmath.sqrt(c)
            target = mpmath.mpf(r.numerator) / r.denominator
            got = compare_surd(s, r)
            if abs(approx - target) < mpmath.mpf(10) ** -40:
                # only exact ties are this close for inputs of this size
                assert got == Ordering.EQUAL
            elif approx < target:
                assert got == Ordering.LESS
            else:
                assert got == Ordering.GREATER


class TestEnclosures:
    def test_contains_e(self):
        interval = e_enclosure(1, 20)
        assert interval.lo <= Fraction(271828182845904523536029, 10**23)
        assert interval.hi >= Fraction(271828182845904523536028, 10**23)
        assert interval.width < Fraction(1, 10**20)

    def test_square_contains_e_squared(self):
        interval = e_enclosure(2, 15)
        assert interval.lo <= Fraction(738905609893065022724, 10**20)
        assert interval.hi >= Fraction(738905609893065022723, 10**20)

    def test_nested_as_digits_grow(self):
        previous = e_enclosure(1, 0)
        for digits in range(1, 30):
            current = e_enclosure(1, digits)
            assert previous.lo <= current.lo <= current.hi <= previous.hi
            previous = current

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            e_enclosure(3, 10)
        with pytest.raises(ValueError):
            e_enclosure(1, 51)

    def test_decide_three_valued(self):
        interval = RationalInterval(Fraction(1), Fraction(2))
        assert decide_at_least(2, interval) == Verdict.TRUE
        assert decide_at_least(Fraction(1, 2), interval) == Verdict.FALSE
        assert decide_at_least(Fraction(3, 2), interval) == Verdict.INCONCLUSIVE

    def test_interval_compare(self):
        interval = RationalInterval(Fraction(1), Fraction(2))
        assert interval.compare(3) == Ordering.LESS
        assert interval.compare(0) == Ordering.GREATER
        assert interval.compare(Fraction(3, 2)) is None
        assert RationalInterval(Fraction(1), Fraction(1)).compare(1) == Ordering.EQUAL

    def test_scale_rejects_negative(self):
        with pytest.raises(ValueError):
            RationalInterval(Fraction(0), Fraction(1)).scale(-1)

    @pytest.mark.skipif(not HAS_MPMATH, reason="mpmath not installed")
    def test_agrees_with_mpmath(self):
        mpmath.mp.dps = 80
        for digits in (5, 20, 40):
            interval = e_enclosure(2, digits)
            e2 = mpmath.e**2
            assert mpmath.mpf(interval.lo.numerator) / interval.lo.denominator <= e2
            assert e2 <= mpmath.mpf(interval.hi.numerator) / interval.hi.denominator
