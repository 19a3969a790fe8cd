"""Arbitrary-precision evaluation: reference constants, digit extraction from
the recurrences, continued-fraction convergents, the double-integral
representation of the catalan linear forms, and the derivative series for the
zeta4 family.

Reference constants are computed by routes independent of the recurrences:
Catalan's constant by Chebyshev acceleration of its defining alternating
series, and zeta(4) from pi obtained with a Machin arctangent formula.  The
digit-extraction routines then certify the recurrence ratios against an
a posteriori bound built from consecutive convergents, never against the
reference values, so the two paths stay independent cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from mpmath import mp, mpf

from .acceleration import alternating_sum, terms_for_digits
from .errors import PrecisionError, QuadratureError
from .exact import Polynomial, decimal_string, horner_int, to_mpf
from .sequences import FAMILIES, _values, catalan_p, catalan_q, zeta4_r

#: Decimal digits gained per recurrence step by the convergents v_n/u_n.
DIGITS_PER_STEP = {"catalan": 2.089, "zeta4": 3.43}


@dataclass(frozen=True)
class DigitsResult:
    """A certified decimal expansion of one of the two constants.

    `value` carries `digits` digits after the decimal point; `error_bound`
    is ten times the distance between the last two convergents used, an
    a posteriori bound on the approximation error that does not assume
    knowledge of the constant.
    """

    constant: str
    digits: int
    value: str
    n_used: int
    error_bound: mpf


@dataclass(frozen=True)
class CFConvergent:
    """Depth-n value of the continued-fraction expansion, as an exact rational."""

    family: str
    n: int
    value: Fraction


# -- reference constants -------------------------------------------------------


@lru_cache(maxsize=32)
def reference_catalan(digits: int) -> mpf:
    """Catalan's constant G = sum (-1)^l / (2l+1)^2 to `digits` digits.

    Chebyshev acceleration of the defining series, run in exact rational
    arithmetic and rounded once at working precision digits+15.  Serves as
    the oracle that is independent of the recurrence route.
    """
    if digits < 1:
        raise ValueError("digits must be positive")
    count = terms_for_digits(digits, slack=10)
    estimate = alternating_sum(
        [Fraction(1, (2 * k + 1) ** 2) for k in range(count)]
    )
    return to_mpf(estimate, digits + 15)


def _arctan_reciprocal(x: int, working_digits: int) -> mpf:
    """arctan(1/x) for integer x >= 2 by the alternating Taylor series."""
    terms = int(working_digits * math.log(10) / (2 * math.log(x))) + 2
    with mp.workdps(working_digits):
        total = mpf(0)
        power = x  # x^(2k+1), exact integer
        square = x * x
        for k in range(terms + 1):
            term = mpf(1) / (mpf(2 * k + 1) * mpf(power))
            total += term if k % 2 == 0 else -term
            power *= square
        return +total


@lru_cache(maxsize=32)
def reference_zeta4(digits: int) -> mpf:
    """zeta(4) = pi^4 / 90 with pi from the Machin formula.

    pi = 16 arctan(1/5) - 4 arctan(1/239), evaluated at digits+15 working
    digits; independent of the recurrence route and of the derivative series.
    """
    if digits < 1:
        raise ValueError("digits must be positive")
    working = digits + 15
    with mp.workdps(working):
        pi = 16 * _arctan_reciprocal(5, working) - 4 * _arctan_reciprocal(239, working)
        return +(pi**4 / 90)


def reference_constant(family: str, digits: int) -> mpf:
    if family == "catalan":
        return reference_catalan(digits)
    if family == "zeta4":
        return reference_zeta4(digits)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


# -- digit extraction from the recurrences --------------------------------------


def _digits_via_recurrence(family: str, digits: int) -> DigitsResult:
    if digits < 1:
        raise ValueError("digits must be positive")
    n = math.ceil(digits / DIGITS_PER_STEP[family]) + 5
    threshold = Fraction(1, 10 ** (digits + 1))
    while True:
        u_n, v_n = _values(family, n)
        u_next, v_next = _values(family, n + 1)
        ratio = v_n / u_n
        bound = 10 * abs(ratio - v_next / u_next)
        if bound < threshold:
            break
        n += 1
    return DigitsResult(
        constant=family,
        digits=digits,
        value=decimal_string(ratio, digits),
        n_used=n,
        error_bound=to_mpf(bound, 10),
    )


def catalan_digits(digits: int) -> DigitsResult:
    """Catalan's constant to `digits` certified decimal places, via the recurrence."""
    return _digits_via_recurrence("catalan", digits)


def zeta4_digits(digits: int) -> DigitsResult:
    """zeta(4) to `digits` certified decimal places, via the recurrence."""
    return _digits_via_recurrence("zeta4", digits)


# -- continued fractions ---------------------------------------------------------


def _partial_numerator(family: str, m: int) -> Fraction:
    if family == "catalan":
        if m == 1:
            return Fraction(13, 2)
        k = m - 1  # depth index of the general term
        return Fraction(
            (2 * k - 1) ** 4 * (2 * k) ** 4
        ) * catalan_p(k - 1) * catalan_p(k + 1)
    if m == 1:
        return Fraction(13)
    k = m - 1
    return Fraction(k**7 * (3 * k - 1) * (3 * k) * (3 * k + 1))


def _partial_denominator(family: str, m: int) -> Fraction:
    if family == "catalan":
        return catalan_q(m - 1)
    return zeta4_r(m - 1)


def cf_convergent(family: str, n: int) -> CFConvergent:
    """Depth-n convergent by exact backward recurrence.

    The expansion is the equivalence transform of the recurrence, so the
    depth-n value equals the exact ratio v_n/u_n; tests assert that identity.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 1:
        raise ValueError("convergent depth must be at least 1")
    tail = Fraction(0)
    for m in range(n, 0, -1):
        tail = _partial_numerator(family, m) / (_partial_denominator(family, m) + tail)
    return CFConvergent(family=family, n=n, value=tail)


# -- the double-integral representation ------------------------------------------

# The substituted integrand lives on the unit square in coordinates
# (a, b) = (1 - sqrt(x), sqrt(1 - y)); the original endpoint singularities are
# gone, and the remaining integrable corner at (a, b) = (0, 0) (that is,
# (x, y) = (1, 1)) is handled by panels graded geometrically toward it.

_GRADING_RATIO = 4.0
_FLOAT_LEVELS = 48
_MP_LEVELS = 40
_FLOAT_NODE_COUNTS = (8, 16, 32, 64)
_MP_NODE_COUNTS = (8, 16, 32, 64)
_MAX_NODES_PER_AXIS = 4096


def _panel_breaks(levels: int) -> list[float]:
    breaks = [0.0] + [_GRADING_RATIO ** (-j) for j in range(levels - 1, 0, -1)]
    breaks.append(1.0)
    return breaks


@lru_cache(maxsize=16)
def _float_axis(m: int, levels: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes/weights on [0,1], graded toward 0."""
    x, w = np.polynomial.legendre.leggauss(m)
    breaks = _panel_breaks(levels)
    nodes, weights = [], []
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        nodes.append(0.5 * (hi - lo) * (x + 1.0) + lo)
        weights.append(0.5 * (hi - lo) * w)
    return np.concatenate(nodes), np.concatenate(weights)


def _integral_float(n: int, m: int, levels: int) -> float:
    a, wa = _float_axis(m, levels)
    b, wb = _float_axis(m, levels)
    one_minus_s2 = a * (2.0 - a)      # 1 - s^2 with s = 1 - a
    s_sq = (1.0 - a) ** 2
    row = 4.0 * (1.0 - a) ** (2 * n) * one_minus_s2**n * wa
    col = (1.0 - b * b) ** n * b ** (2 * n) * wb
    base = one_minus_s2[:, None] + s_sq[:, None] * (b * b)[None, :]
    return float(row @ (base ** (-(n + 1))) @ col)


@lru_cache(maxsize=8)
def _legendre_nodes_mp(m: int, dps: int) -> tuple[tuple, tuple]:
    """Gauss-Legendre nodes/weights on [-1,1] at dps digits, via Newton."""
    seeds, _ = np.polynomial.legendre.leggauss(m)
    with mp.workdps(dps):
        nodes, weights = [], []
        for seed in seeds:
            x = mpf(float(seed))
            for _ in range(60):
                p_prev, p_cur = mpf(1), x
                for k in range(2, m + 1):
                    p_prev, p_cur = p_cur, ((2 * k - 1) * x * p_cur - (k - 1) * p_prev) / k
                deriv = m * (x * p_cur - p_prev) / (x * x - 1)
                step = p_cur / deriv
                x -= step
                if abs(step) < mpf(10) ** (-(dps + 5)):
                    break
            p_prev, p_cur = mpf(1), x
            for k in range(2, m + 1):
                p_prev, p_cur = p_cur, ((2 * k - 1) * x * p_cur - (k - 1) * p_prev) / k
            deriv = m * (x * p_cur - p_prev) / (x * x - 1)
            nodes.append(x)
            weights.append(2 / ((1 - x * x) * deriv * deriv))
        return tuple(nodes), tuple(weights)


def _integral_mp(n: int, m: int, levels: int, dps: int) -> mpf:
    base_nodes, base_weights = _legendre_nodes_mp(m, dps)
    with mp.workdps(dps):
        ratio = mpf(1) / _GRADING_RATIO
        breaks = [mpf(0)] + [ratio ** j for j in range(levels - 1, -1, -1)]
        axis = []
        for lo, hi in zip(breaks[:-1], breaks[1:]):
            half = (hi - lo) / 2
            for x, w in zip(base_nodes, base_weights):
                axis.append((half * (x + 1) + lo, half * w))
        rows = []
        for a, wa in axis:
            one_minus_s2 = a * (2 - a)
            rows.append(
                (one_minus_s2, (1 - a) ** 2, 4 * (1 - a) ** (2 * n) * one_minus_s2**n * wa)
            )
        cols = [((1 - b * b) ** n * b ** (2 * n) * wb, b * b) for b, wb in axis]
        total = mpf(0)
        for one_minus_s2, s_sq, row_factor in rows:
            inner = mpf(0)
            for col_factor, b_sq in cols:
                inner += col_factor / (one_minus_s2 + s_sq * b_sq) ** (n + 1)
            total += row_factor * inner
        return +total


def beukers_integral(n: int, digits: int) -> mpf:
    """The double integral over the unit square representing the linear forms:

        I_n = int int x^(n-1/2) (1-x)^n y^n (1-y)^(n-1/2) / (1-xy)^(n+1) dx dy.

    Substituting x = s^2, y = 1 - w^2 (Jacobian 4sw) removes both endpoint
    singularities; the integrable corner left at (x, y) = (1, 1) is handled
    by tensor Gauss-Legendre over panels graded geometrically toward it.
    Node counts double until two successive values agree to 10^-(digits+2).

    Note the measured relation to the sequence pairs: I_n equals
    8 (-1)^n (u_n G - v_n), i.e. the linear form is (-1)^n/8 times I_n.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    if not 1 <= digits <= 15:
        raise ValueError("digits must lie in 1..15 (desk-scale quadrature)")
    if digits <= 12:
        tolerance = 10.0 ** (-(digits + 2))
        previous = None
        for m in _FLOAT_NODE_COUNTS:
            if m * _FLOAT_LEVELS > _MAX_NODES_PER_AXIS:
                break
            value = _integral_float(n, m, _FLOAT_LEVELS)
            if previous is not None and abs(value - previous) < tolerance:
                return to_mpf(Fraction(value), digits + 15)
            previous = value
        raise QuadratureError(
            f"quadrature did not reach {digits} digits within the node cap"
        )
    dps = digits + 10
    with mp.workdps(dps):
        tolerance_mp = mpf(10) ** (-(digits + 2))
        previous_mp = None
        for m in _MP_NODE_COUNTS:
            if m * _MP_LEVELS > _MAX_NODES_PER_AXIS:
                break
            value_mp = _integral_mp(n, m, _MP_LEVELS, dps)
            if previous_mp is not None and abs(value_mp - previous_mp) < tolerance_mp:
                return +value_mp
            previous_mp = value_mp
    raise QuadratureError(
        f"quadrature did not reach {digits} digits within the node cap"
    )


# -- the derivative series for the zeta4 family ----------------------------------


@lru_cache(maxsize=32)
def _zeta4_series_parts(n: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Integer coefficient lists (H_num, H_den, H'_num, H'_den) for the inner
    rational function H_n(t) = (2t+n) G1^2 G2^2 / (t(t+1)...(t+n))^4 with
    G1 = (t-1)...(t-n) and G2 = (t+n+1)...(t+2n)."""
    g1 = Polynomial.from_roots(range(1, n + 1))
    g2 = Polynomial.from_roots([-(n + i) for i in range(1, n + 1)])
    num = Polynomial([n, 2]) * g1**2 * g2**2
    den = Polynomial.from_roots([-i for i in range(n + 1)]) ** 4
    deriv_num = num.derivative() * den - num * den.derivative()
    deriv_den = den * den
    to_ints = lambda poly: tuple(int(c) for c in poly.coeffs)
    return to_ints(num), to_ints(den), to_ints(deriv_num), to_ints(deriv_den)


def zeta4_series(n: int, digits: int, max_terms: int = 1_000_000) -> mpf:
    """The derivative series whose value is u_n zeta(4) - v_n for the zeta4 family:

        (-1)^(n+1)/6 * sum_{t>=1} H_n'(t),

    with H_n the inner rational function (degree gap 3, so H_n' decays like
    t^-4).  Terms are exact integer ratios evaluated at the working
    precision; the tail is bounded by |H_n(T)| + |H_n'(T+1)| once |H_n'| has
    been decreasing long enough, which is the integral comparison bound for
    an eventually monotone single-signed tail.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    if not 1 <= digits <= 10:
        raise ValueError("digits must lie in 1..10 (terms decay only like t^-4)")
    h_num, h_den, hp_num, hp_den = _zeta4_series_parts(n)
    working = digits + 15
    with mp.workdps(working):
        tolerance = mpf(10) ** (-(digits + 5))
        total = mpf(0)
        previous = mp.inf
        streak = 0
        settled_after = max(16, 5 * n + 5)
        t = 1
        while t <= max_terms:
            term = mpf(horner_int(hp_num, t)) / mpf(horner_int(hp_den, t))
            total += term
            magnitude = abs(term)
            streak = streak + 1 if magnitude < previous else 0
            previous = magnitude
            if streak >= 8 and t >= settled_after and t % 64 == 0:
                h_here = abs(
                    mpf(horner_int(h_num, t)) / mpf(horner_int(h_den, t))
                )
                next_term = abs(
                    mpf(horner_int(hp_num, t + 1)) / mpf(horner_int(hp_den, t + 1))
                )
                if h_here + next_term < tolerance:
                    sign = 1 if n % 2 == 1 else -1
                    return +(sign * total / 6)
            t += 1
    raise PrecisionError(
        f"derivative series did not reach {digits} digits within {max_terms} terms"
    )


# -- characteristic-root helpers (used by tests and the CLI) ----------------------


def characteristic_residual(family: str, digits: int) -> mpf:
    """Value of the characteristic polynomial at its closed-form dominant root.

    catalan: lambda^2 - 11 lambda - 1 at ((1+sqrt5)/2)^5;
    zeta4:   lambda^2 - 270 lambda - 27 at (3+2 sqrt3)^3.
    Vanishes to working precision; a sanity anchor for the measured rates.
    """
    with mp.workdps(digits + 15):
        if family == "catalan":
            root = ((1 + mp.sqrt(5)) / 2) ** 5
            return +(root**2 - 11 * root - 1)
        if family == "zeta4":
            root = (3 + 2 * mp.sqrt(3)) ** 3
            return +(root**2 - 270 * root - 27)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
