"""Recurrence families: exact generation, integrality, measured rates."""

from fractions import Fraction

import pytest
from mpmath import mp

from aperylike import sequences
from aperylike.sequences import (
    asymptotic_report,
    catalan_p,
    catalan_pair,
    catalan_q,
    check_inclusions,
    recurrence_residual,
    zeta4_pair,
    zeta4_r,
)
from tests.conftest import mpf_frac


class TestCoefficientPolynomials:
    @pytest.mark.parametrize("n,expected", [(0, 1), (1, 13), (2, 65)])
    def test_catalan_p(self, n, expected):
        assert catalan_p(n) == expected

    @pytest.mark.parametrize("n,expected", [(0, 7), (1, 10699), (-1, 171)])
    def test_catalan_q(self, n, expected):
        assert catalan_q(n) == expected

    @pytest.mark.parametrize("n,expected", [(0, 12), (1, 2142)])
    def test_zeta4_r(self, n, expected):
        assert zeta4_r(n) == expected

    def test_zeta4_r_factored_form(self):
        for n in range(51):
            factored = 3 * (2 * n + 1) * (3 * n**2 + 3 * n + 1) * (15 * n**2 + 15 * n + 4)
            assert zeta4_r(n) == factored

    def test_catalan_p_has_no_integer_roots(self):
        # negative discriminant: 64 - 80 < 0
        for n in range(-50, 51):
            assert catalan_p(n) != 0


class TestPairs:
    def test_catalan_initial_data(self):
        assert (catalan_pair(0).u, catalan_pair(0).v) == (1, 0)
        assert (catalan_pair(1).u, catalan_pair(1).v) == (
            Fraction(7, 4),
            Fraction(13, 8),
        )

    def test_catalan_first_step(self):
        item = catalan_pair(2)
        assert item.u == Fraction(649, 64)
        assert item.v == Fraction(10699, 1152)

    def test_zeta4_initial_data(self):
        assert (zeta4_pair(0).u, zeta4_pair(0).v) == (1, 0)
        assert (zeta4_pair(1).u, zeta4_pair(1).v) == (12, 13)

    def test_zeta4_first_step(self):
        item = zeta4_pair(2)
        assert item.u == 804
        assert item.v == Fraction(13923, 16)

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            catalan_pair(-1)

    @pytest.mark.parametrize("family", ["catalan", "zeta4"])
    def test_recurrence_residual_exactly_zero(self, family):
        for n in range(1, 301):
            res_u, res_v = recurrence_residual(family, n)
            assert res_u == 0 and res_v == 0

    @pytest.mark.parametrize("family", ["catalan", "zeta4"])
    def test_positivity(self, family):
        for n in range(0, 200):
            item = sequences.pair(family, n)
            assert item.u > 0
            assert item.v > 0 or (n == 0 and item.v == 0)

    def test_ratio_envelopes(self):
        for n in range(1, 120):
            c = catalan_pair(n)
            assert 0 < c.v / c.u < 1
            z = zeta4_pair(n)
            assert 1 < z.v / z.u < 2

    def test_bracketing_alternates_around_catalan(self, catalan_200):
        # the sign of v_n/u_n - G flips with n
        with mp.workdps(160):
            signs = []
            for n in range(1, 51):
                item = catalan_pair(n)
                signs.append(1 if mpf_frac(item.v / item.u) - catalan_200 > 0 else -1)
        assert all(a == -b for a, b in zip(signs, signs[1:]))


class TestInclusions:
    def test_catalan_proved_at_zero(self):
        report = check_inclusions("catalan", 0, "proved")
        assert report.ok and report.witness_u == 8 and report.witness_v == 0

    def test_catalan_strong_witnesses(self):
        report = check_inclusions("catalan", 2, "strong")
        assert report.ok
        assert report.witness_u == 2596
        assert report.witness_v == 85592

    def test_zeta4_strong_witnesses(self):
        report = check_inclusions("zeta4", 2, "strong")
        assert report.ok
        assert report.witness_u == 804
        assert report.witness_v == 13923

    @pytest.mark.parametrize("family", ["catalan", "zeta4"])
    @pytest.mark.parametrize("mode", ["proved", "strong"])
    def test_sweep_to_sixty(self, family, mode):
        for n in range(61):
            assert check_inclusions(family, n, mode).ok, (family, mode, n)

    def test_bad_mode_rejected(self):
        with pytest.raises(ValueError):
            check_inclusions("catalan", 1, "hoped")

    def test_bad_family_rejected(self):
        with pytest.raises(ValueError):
            check_inclusions("zeta5", 1, "proved")


class TestAsymptotics:
    def test_smoke_small_n(self):
        rates = asymptotic_report("catalan", 2, 50)
        assert mp.isfinite(rates.rate_u) and mp.isfinite(rates.rate_form)

    def test_catalan_rates_at_500(self):
        rates = asymptotic_report("catalan", 500, 700)
        assert abs(rates.rate_u - 2.40605912) < 0.05
        assert abs(rates.rate_form - (-2.40605912)) < 0.05

    def test_zeta4_rates_converge(self):
        # the (log n)/n corrections shrink by half from n=300 to n=600
        r300 = asymptotic_report("zeta4", 300, 700)
        assert abs(r300.rate_u - 5.59879212) < 0.06
        assert abs(r300.rate_form - (-2.30295525)) < 0.06
        r600 = asymptotic_report("zeta4", 600, 700)
        assert abs(r600.rate_u - 5.59879212) < 0.035
        assert abs(r600.rate_form - (-2.30295525)) < 0.035

    def test_rates_need_n_at_least_two(self):
        with pytest.raises(ValueError):
            asymptotic_report("catalan", 1, 50)
