"""Exact core: polynomials, rational functions, series, lcm table."""

import math
import random
from fractions import Fraction

import pytest

from aperylike.errors import PoleAtCenterError
from aperylike.exact import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    decimal_string,
    format_rational,
    lcm_upto,
    parse_rational,
    poly_gcd,
    ratfun_equal,
    series_expand,
    to_mpf,
)


def random_fraction(rng, span=30):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_poly(rng, max_degree=8):
    return Polynomial([random_fraction(rng) for _ in range(rng.randint(0, max_degree + 1))])


class TestRationalInvariants:
    def test_always_reduced_with_positive_denominator(self):
        rng = random.Random(7)
        for _ in range(300):
            q = random_fraction(rng)
            assert q.denominator >= 1
            assert math.gcd(abs(q.numerator), q.denominator) == 1

    def test_field_axioms_on_random_triples(self):
        rng = random.Random(11)
        for _ in range(200):
            a, b, c = (random_fraction(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert a + (-a) == 0
            if a != 0:
                assert a * (1 / a) == 1

    def test_serialization_round_trip(self):
        for q in (Fraction(7, 4), Fraction(-13, 8), Fraction(12), Fraction(0)):
            assert parse_rational(format_rational(q)) == q


class TestPolynomial:
    def test_canonical_no_trailing_zeros(self):
        assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
        assert Polynomial([0, 0]).is_zero
        assert Polynomial().degree == -1

    def test_degree_additivity(self):
        rng = random.Random(23)
        for _ in range(100):
            f, g = random_poly(rng), random_poly(rng)
            if f.is_zero or g.is_zero:
                assert (f * g).is_zero
            else:
                assert (f * g).degree == f.degree + g.degree

    def test_ring_identities(self):
        rng = random.Random(31)
        for _ in range(60):
            f, g, h = (random_poly(rng, 6) for _ in range(3))
            assert f * (g + h) == f * g + f * h
            assert (f + g) * h == f * h + g * h

    def test_divmod_reconstructs(self):
        rng = random.Random(43)
        for _ in range(60):
            f = random_poly(rng, 8)
            g = random_poly(rng, 4)
            if g.is_zero:
                continue
            q, r = divmod(f, g)
            assert q * g + r == f
            assert r.is_zero or r.degree < g.degree

    def test_evaluation_and_shift(self):
        f = Polynomial([1, -2, 3])  # 3t^2 - 2t + 1
        assert f(2) == 9
        shifted = f.shift(5)  # f(t+5)
        for x in (-3, 0, 2, Fraction(1, 2)):
            assert shifted(x) == f(x + 5)

    def test_derivative(self):
        f = Polynomial([5, 0, 1, 2])  # 2t^3 + t^2 + 5
        assert f.derivative() == Polynomial([0, 2, 6])
        assert f.derivative(2) == Polynomial([2, 12])

    def test_gcd_of_products(self):
        rng = random.Random(59)
        for _ in range(40):
            f, g, h = (random_poly(rng, 4) for _ in range(3))
            if f.is_zero or g.is_zero or h.is_zero:
                continue
            left = f * h
            right = g * h
            d = poly_gcd(left, right)
            assert (left % d).is_zero and (right % d).is_zero
            assert d.degree >= h.degree  # at least the planted common factor


class TestRationalFunction:
    def test_canonical_form(self):
        f = RationalFunction(
            Polynomial([-1, 0, 1]), Polynomial([-1, 1])
        )  # (t^2-1)/(t-1)
        assert f.num == Polynomial([1, 1]) and f.den == Polynomial([1])

    def test_cancellation_equality(self):
        t2_minus_1 = Polynomial([-1, 0, 1])
        t_minus_1 = Polynomial([-1, 1])
        assert ratfun_equal(
            RationalFunction(t2_minus_1, t_minus_1),
            RationalFunction(Polynomial([1, 1])),
        )

    def test_distinct_poles_not_equal(self):
        one_over_t = RationalFunction(Polynomial([1]), Polynomial([0, 1]))
        one_over_t1 = RationalFunction(Polynomial([1]), Polynomial([1, 1]))
        assert not ratfun_equal(one_over_t, one_over_t1)

    def test_mul_then_divide_returns_original(self):
        rng = random.Random(61)
        for _ in range(50):
            f, g = random_poly(rng, 8), random_poly(rng, 8)
            if g.is_zero:
                continue
            rf = RationalFunction(f)
            rg = RationalFunction(g)
            assert ratfun_equal(rf * rg / rg, rf)

    def test_field_arithmetic_matches_evaluation(self):
        rng = random.Random(67)
        for _ in range(30):
            f = RationalFunction(random_poly(rng, 4), Polynomial([1, 0, 1]))
            g = RationalFunction(random_poly(rng, 4), Polynomial([2, 1]))
            for x in (0, 1, Fraction(3, 2)):
                assert (f + g)(x) == f(x) + g(x)
                assert (f * g)(x) == f(x) * g(x)

    def test_shift_preserves_canonical_form(self):
        f = RationalFunction(Polynomial([0, 2]), Polynomial([Fraction(1, 2), 1]))
        g = f.shift(1)
        assert g.den.leading_coefficient == 1
        for x in (0, 5):
            assert g(x) == f(x + 1)

    def test_evaluation_at_pole_raises(self):
        f = RationalFunction(Polynomial([1]), Polynomial([0, 1]))
        with pytest.raises(ZeroDivisionError):
            f(0)


class TestTruncatedSeries:
    def test_geometric_series(self):
        f = RationalFunction(Polynomial([1]), Polynomial([1, 1]))  # 1/(t+1)
        s = series_expand(f, 0, 3)
        assert list(s.coeffs) == [1, -1, 1]

    def test_binomial_shift(self):
        f = RationalFunction(Polynomial([0, 0, 1]))  # t^2
        s = series_expand(f, 1, 3)
        assert list(s.coeffs) == [1, 2, 1]

    def test_pole_cleared_kernel_value(self):
        # R_0(t) (t+1/2)^2 is the constant 2; its order-1 jet at -1/2 is [2]
        r0 = RationalFunction(
            Polynomial([2]), Polynomial([Fraction(1, 4), 1, 1])
        )
        cleared = r0 * RationalFunction(Polynomial([Fraction(1, 2), 1]) ** 2)
        s = series_expand(cleared, Fraction(-1, 2), 1)
        assert list(s.coeffs) == [2]

    def test_pole_at_center_raises(self):
        f = RationalFunction(Polynomial([1]), Polynomial([0, 1]))
        with pytest.raises(PoleAtCenterError):
            series_expand(f, 0, 3)

    def test_truncation_coherence(self):
        rng = random.Random(71)
        for _ in range(30):
            num = random_poly(rng, 5)
            den = Polynomial([1, *(random_fraction(rng) for _ in range(3))][::-1])
            if den(Fraction(1, 3)) == 0:
                continue
            f = RationalFunction(num, den)
            long = series_expand(f, Fraction(1, 3), 7)
            short = series_expand(f, Fraction(1, 3), 4)
            assert long.truncate(4) == short

    def test_reciprocal_inverts(self):
        s = TruncatedSeries(0, [Fraction(2), Fraction(1), Fraction(-3), Fraction(5)])
        product = s * s.reciprocal()
        assert list(product.coeffs) == [1, 0, 0, 0]

    def test_series_matches_derivatives(self):
        f = RationalFunction(Polynomial([1, 2, 1]), Polynomial([3, 1]))
        c = Fraction(1, 2)
        s = series_expand(f, c, 3)
        num, den = f.num, f.den
        value = f(c)
        # quotient-rule first derivative
        d1 = (num.derivative()(c) * den(c) - num(c) * den.derivative()(c)) / den(c) ** 2
        assert s.coefficient(0) == value
        assert s.coefficient(1) == d1


class TestLcmTable:
    def test_documented_values(self):
        assert lcm_upto(0) == 1
        assert lcm_upto(1) == 1
        assert lcm_upto(6) == 60

    def test_divisibility_up_to_200(self):
        for n in range(201):
            d = lcm_upto(n)
            for m in range(1, n + 1):
                assert d % m == 0

    def test_each_entry_divides_the_next(self):
        for n in range(1, 120):
            assert lcm_upto(n) % lcm_upto(n - 1) == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            lcm_upto(-1)


class TestEdgeCases:
    def test_series_order_must_be_positive(self):
        f = RationalFunction(Polynomial([1]), Polynomial([1, 1]))
        with pytest.raises(ValueError):
            series_expand(f, 0, 0)

    def test_negative_polynomial_power_rejected(self):
        with pytest.raises(ValueError):
            Polynomial([1, 1]) ** -1

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunction(Polynomial([1]), Polynomial())

    def test_division_by_zero_function_rejected(self):
        f = RationalFunction(Polynomial([1]))
        with pytest.raises(ZeroDivisionError):
            f / RationalFunction(Polynomial())

    def test_decimal_string_rejects_negative_places(self):
        with pytest.raises(ValueError):
            decimal_string(Fraction(1, 3), -1)

    def test_polynomial_divmod_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(Polynomial([1, 1]), Polynomial())


class TestDecimalHelpers:
    def test_decimal_string_rounds_to_nearest(self):
        assert decimal_string(Fraction(1, 3), 4) == "0.3333"
        assert decimal_string(Fraction(2, 3), 4) == "0.6667"
        assert decimal_string(Fraction(-1, 8), 2) == "-0.12"  # ties to even
        assert decimal_string(Fraction(5, 2), 0) == "2"

    def test_to_mpf_round_trip_scale(self):
        x = to_mpf(Fraction(7, 4), 30)
        assert abs(x - 1.75) < 1e-25
