"""The two second-order recurrence families and their arithmetic properties.

Family "catalan": the pair (u_n, v_n) with u_0 = 1, u_1 = 7/4, v_0 = 0,
v_1 = 13/8, both solving

    (2n+1)^2 (2n+2)^2 p(n) x_{n+1} = q(n) x_n + (2n-1)^2 (2n)^2 p(n+1) x_{n-1}

for n >= 1, where p and q are the sextic/quadratic coefficient polynomials
below.  The ratio v_n/u_n converges to Catalan's constant G at roughly 2.09
decimal digits per step.

Family "zeta4": the pair (u_n, v_n) with u_0 = 1, u_1 = 12, v_0 = 0, v_1 = 13
solving

    (n+1)^5 x_{n+1} = r(n) x_n + 3 n^3 (3n-1)(3n+1) x_{n-1},

whose ratio converges to zeta(4) = pi^4/90 at roughly 3.43 digits per step.

Everything is generated bottom-up in exact rational arithmetic and memoized;
the integrality checks multiply by the documented clearing factors and test
for an integer exactly.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf

from .errors import PrecisionError
from .exact import RationalLike, as_fraction, lcm_upto

FAMILIES = ("catalan", "zeta4")

#: Integrality modes: "proved" uses the guaranteed clearing factors,
#: "strong" the sharper experimentally observed ones.
MODES = ("proved", "strong")


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


@dataclass(frozen=True)
class SequencePair:
    """One exact element (n, u_n, v_n) of a recurrence family."""

    family: str
    n: int
    u: Fraction
    v: Fraction


@dataclass(frozen=True)
class InclusionReport:
    """Outcome of clearing denominators at one index.

    witness_u / witness_v hold the cleared integers when the check passes,
    None when it fails (so failures are diagnosable from CLI output).
    """

    family: str
    n: int
    mode: str
    pass_u: bool
    pass_v: bool
    witness_u: int | None
    witness_v: int | None

    @property
    def ok(self) -> bool:
        return self.pass_u and self.pass_v


@dataclass(frozen=True)
class AsymptoticRates:
    """Measured per-n logarithmic growth of u_n and of |u_n C - v_n|."""

    rate_u: mpf
    rate_form: mpf


# -- coefficient polynomials -------------------------------------------------


def catalan_p(n: RationalLike) -> Fraction:
    """20 n^2 - 8 n + 1 (no real roots, so the recurrence never degenerates)."""
    x = as_fraction(n)
    return 20 * x * x - 8 * x + 1


def catalan_q(n: RationalLike) -> Fraction:
    """The degree-6 middle coefficient of the catalan recurrence."""
    x = as_fraction(n)
    return (
        3520 * x**6 + 5632 * x**5 + 2064 * x**4 - 384 * x**3 - 156 * x**2 + 16 * x + 7
    )


def zeta4_r(n: RationalLike) -> Fraction:
    """270 n^5 + 675 n^4 + 702 n^3 + 378 n^2 + 105 n + 12.

    Equals the factored form 3 (2n+1)(3n^2+3n+1)(15n^2+15n+4); the identity is
    covered by tests.
    """
    x = as_fraction(n)
    return 270 * x**5 + 675 * x**4 + 702 * x**3 + 378 * x**2 + 105 * x + 12


# -- exact generation ---------------------------------------------------------

_cache_lock = threading.Lock()
_pairs: dict[str, list[tuple[Fraction, Fraction]]] = {
    "catalan": [
        (Fraction(1), Fraction(0)),
        (Fraction(7, 4), Fraction(13, 8)),
    ],
    "zeta4": [
        (Fraction(1), Fraction(0)),
        (Fraction(12), Fraction(13)),
    ],
}


def _step_catalan(
    k: int, prev: tuple[Fraction, Fraction], cur: tuple[Fraction, Fraction]
) -> tuple[Fraction, Fraction]:
    lead = (2 * k + 1) ** 2 * (2 * k + 2) ** 2 * catalan_p(k)
    assert lead != 0  # p has negative discriminant
    mid = catalan_q(k)
    back = (2 * k - 1) ** 2 * (2 * k) ** 2 * catalan_p(k + 1)
    return (
        (mid * cur[0] + back * prev[0]) / lead,
        (mid * cur[1] + back * prev[1]) / lead,
    )


def _step_zeta4(
    k: int, prev: tuple[Fraction, Fraction], cur: tuple[Fraction, Fraction]
) -> tuple[Fraction, Fraction]:
    lead = Fraction((k + 1) ** 5)
    mid = zeta4_r(k)
    back = 3 * k**3 * (3 * k - 1) * (3 * k + 1)
    return (
        (mid * cur[0] + back * prev[0]) / lead,
        (mid * cur[1] + back * prev[1]) / lead,
    )


_STEPS = {"catalan": _step_catalan, "zeta4": _step_zeta4}


def _values(family: str, n: int) -> tuple[Fraction, Fraction]:
    _check_family(family)
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    table = _pairs[family]
    if n < len(table):
        return table[n]
    step = _STEPS[family]
    with _cache_lock:
        while len(table) <= n:
            k = len(table) - 1
            table.append(step(k, table[k - 1], table[k]))
        return table[n]


def catalan_pair(n: int) -> SequencePair:
    """Exact (u_n, v_n) of the catalan family."""
    u, v = _values("catalan", n)
    return SequencePair("catalan", n, u, v)


def zeta4_pair(n: int) -> SequencePair:
    """Exact (u_n, v_n) of the zeta4 family."""
    u, v = _values("zeta4", n)
    return SequencePair("zeta4", n, u, v)


def pair(family: str, n: int) -> SequencePair:
    u, v = _values(family, n)
    return SequencePair(family, n, u, v)


def recurrence_residual(family: str, n: int) -> tuple[Fraction, Fraction]:
    """Substitute the stored triples back into the recurrence (index n >= 1).

    Returns the two residuals (for the u- and v-solutions); both must be the
    exact rational zero.
    """
    if n < 1:
        raise ValueError("the recurrence holds for n >= 1")
    prev, cur, nxt = (_values(family, n - 1), _values(family, n), _values(family, n + 1))
    if family == "catalan":
        lead = (2 * n + 1) ** 2 * (2 * n + 2) ** 2 * catalan_p(n)
        mid = catalan_q(n)
        back = (2 * n - 1) ** 2 * (2 * n) ** 2 * catalan_p(n + 1)
    else:
        _check_family(family)
        lead = Fraction((n + 1) ** 5)
        mid = zeta4_r(n)
        back = 3 * n**3 * (3 * n - 1) * (3 * n + 1)
    return (
        lead * nxt[0] - mid * cur[0] - back * prev[0],
        lead * nxt[1] - mid * cur[1] - back * prev[1],
    )


# -- integrality reports -------------------------------------------------------


def _clearing_factors(family: str, n: int, mode: str) -> tuple[int, int]:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    d_n = lcm_upto(n)
    if family == "catalan":
        d_odd = lcm_upto(max(2 * n - 1, 0))  # read D_{2n-1} as D_0 at n = 0
        if mode == "proved":
            return 2 ** (4 * n + 3) * d_n, 2 ** (4 * n + 3) * d_odd**3
        return 2 ** (4 * n), 2 ** (4 * n) * d_odd**2
    if mode == "proved":
        return 6 * d_n, 6 * d_n**5
    return 1, d_n**4


def check_inclusions(family: str, n: int, mode: str = "proved") -> InclusionReport:
    """Multiply (u_n, v_n) by the mode's clearing factors and test integrality."""
    u, v = _values(family, n)
    factor_u, factor_v = _clearing_factors(family, n, mode)
    cleared_u = u * factor_u
    cleared_v = v * factor_v
    pass_u = cleared_u.denominator == 1
    pass_v = cleared_v.denominator == 1
    return InclusionReport(
        family=family,
        n=n,
        mode=mode,
        pass_u=pass_u,
        pass_v=pass_v,
        witness_u=cleared_u.numerator if pass_u else None,
        witness_v=cleared_v.numerator if pass_v else None,
    )


# -- measured growth rates -----------------------------------------------------


def _decimal_magnitude(q: Fraction) -> float:
    """Rough log10 |q| from bit lengths (sign ignored; q must be nonzero)."""
    return (q.numerator.bit_length() - q.denominator.bit_length()) * math.log10(2)


def asymptotic_report(family: str, n: int, digits: int) -> AsymptoticRates:
    """Per-n log growth of u_n and of the linear form u_n C - v_n.

    `digits` is the reporting precision and the minimum working precision.
    Because the linear form loses about 2 log10(u_n) digits to cancellation,
    the working precision is raised automatically when the stated one cannot
    resolve it; a PrecisionError is raised only if even the raised precision
    leaves no significant digits.
    """
    if n < 2:
        raise ValueError("growth rates need n >= 2")
    if digits < 1:
        raise ValueError("digits must be positive")
    from . import analytic  # local import: analytic depends on this module

    u, v = _values(family, n)
    magnitude = max(_decimal_magnitude(u), 1.0)
    working = max(digits, int(2.2 * magnitude) + 40)
    reference = (
        analytic.reference_catalan if family == "catalan" else analytic.reference_zeta4
    )
    for _ in range(3):
        with mp.workdps(working):
            constant = reference(working - 10)
            uf = mpf(u.numerator) / mpf(u.denominator)
            vf = mpf(v.numerator) / mpf(v.denominator)
            form = uf * constant - vf
            noise_floor = abs(uf) * mpf(10) ** (-(working - 10))
            if form != 0 and abs(form) > noise_floor:
                rate_u = mp.log(uf) / n
                rate_form = mp.log(abs(form)) / n
                break
        working *= 2
    else:
        raise PrecisionError(
            f"linear form for {family} at n={n} lost all significant digits"
        )
    with mp.workdps(digits):
        return AsymptoticRates(rate_u=+rate_u, rate_form=+rate_form)
