"""Alternating-series acceleration against classically known sums."""

from fractions import Fraction

import pytest
from mpmath import mp

from aperylike.acceleration import (
    alternating_sum,
    alternating_sum_adaptive,
    chebyshev_scale,
    terms_for_digits,
)
from aperylike.errors import PrecisionError
from tests.conftest import mpf_frac


def test_chebyshev_scale_recurrence():
    # d_k = 6 d_{k-1} - d_{k-2}; first values 1, 3, 17, 99, 577
    assert [chebyshev_scale(k) for k in range(5)] == [1, 3, 17, 99, 577]


def test_log_two_to_forty_digits():
    terms = [Fraction(1, k + 1) for k in range(60)]
    estimate = alternating_sum(terms)
    with mp.workdps(60):
        error = abs(mpf_frac(estimate) - mp.log(2))
        assert error < mp.mpf(10) ** -40


def test_pi_over_four_leibniz():
    terms = [Fraction(1, 2 * k + 1) for k in range(80)]
    estimate = alternating_sum(terms)
    with mp.workdps(80):
        error = abs(mpf_frac(estimate) - mp.pi / 4)
        assert error < mp.mpf(10) ** -55


def test_terms_for_digits_scale():
    # about 1.31 terms per digit
    assert 60 <= terms_for_digits(40) <= 75


def test_adaptive_agreement(catalan_200):
    value = alternating_sum_adaptive(
        lambda k: Fraction(1, (2 * k + 1) ** 2), digits=45
    )
    with mp.workdps(80):
        assert abs(mpf_frac(value) - catalan_200) < mp.mpf(10) ** -45


def test_adaptive_term_cap():
    with pytest.raises(PrecisionError):
        alternating_sum_adaptive(
            lambda k: Fraction(1, k + 1), digits=30, initial_terms=4, max_terms=8
        )


def test_empty_prefix_is_zero():
    assert alternating_sum([]) == 0
