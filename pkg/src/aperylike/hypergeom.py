"""The rational kernel R_n, its partial-fraction table, and the linear-form
coefficients it produces.

For each n the kernel is

    R_n(t) = n! (2t+n+1) * t(t-1)...(t-n+1) * (t+n+1)...(t+2n)
             / ((t+1/2)(t+3/2)...(t+n+1/2))^3,

a proper rational function whose poles are the half-integers -k-1/2 for
k = 0..n, each of order at most 3.  Writing

    R_n(t) = sum_{j=0}^{2} sum_{k=0}^{n} A_jk / (t+k+1/2)^(3-j),

the numbers A_jk are computed exactly as order-3 jets of the pole-cleared
function R_n(t) (t+k+1/2)^3 at t = -k-1/2.  Alternating sums of the table
columns produce the coefficients (U, U', U'', V) for which the alternating
series F_n = sum_t (-1)^t R_n(t) equals U' G - V with U = U'' = 0, G being
Catalan's constant.  That identity is the cross-check between this module and
the recurrence-generated sequences: U'_n = 8 u_n and V_n = 8 v_n.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf

from .acceleration import alternating_sum_adaptive, terms_for_digits
from .errors import PrecisionError
from .exact import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    horner_int,
    lcm_upto,
    to_mpf,
)


@dataclass(frozen=True)
class KernelParts:
    """The kernel R_n together with its building blocks.

    P1 and P2 are the integer-valued falling/rising factorial polynomials
    scaled by 1/n!; Q is the reciprocal of the half-integer Pochhammer
    product scaled by n!, so that R = (2t+n+1) P1 P2 Q^3.
    """

    n: int
    P1: Polynomial
    P2: Polynomial
    Q: RationalFunction
    R: RationalFunction


@dataclass(frozen=True)
class PartialFractionTable:
    """Exact coefficients A[j][k] of the pole expansion of R_n.

    Row j (0, 1, 2) holds the coefficients of 1/(t+k+1/2)^(3-j) for
    k = 0..n.
    """

    n: int
    A: tuple[tuple[Fraction, ...], ...]

    def entry(self, j: int, k: int) -> Fraction:
        return self.A[j][k]


@dataclass(frozen=True)
class CoefficientQuadruple:
    """Linear-form coefficients assembled from the partial-fraction table."""

    n: int
    U: Fraction
    Uprime: Fraction
    Udoubleprime: Fraction
    V: Fraction


def _half(k: int) -> Fraction:
    """The pole location -k-1/2."""
    return Fraction(-(2 * k + 1), 2)


def _pole_factor(k: int) -> Polynomial:
    """The monic linear factor (t + k + 1/2)."""
    return Polynomial([Fraction(2 * k + 1, 2), Fraction(1)])


def _pole_exponent(n: int, k: int) -> int:
    """Order of the pole of R_n at -k-1/2 in lowest terms."""
    if k < 0 or k > n:
        return 0
    if n % 2 == 0 and k == n // 2:
        return 2  # the (2t+n+1) numerator factor cancels one power
    return 3


_kernel_lock = threading.Lock()
_kernel_cache: dict[int, KernelParts] = {}


def build_kernel(n: int) -> KernelParts:
    """Exact construction of R_n and its factors, memoized per n."""
    if n < 0:
        raise ValueError("kernel index must be nonnegative")
    with _kernel_lock:
        cached = _kernel_cache.get(n)
    if cached is not None:
        return cached

    fact = math.factorial(n)
    falling = Polynomial.from_roots(range(n))                # t(t-1)...(t-n+1)
    rising = Polynomial.from_roots([-(n + i) for i in range(1, n + 1)])
    p1 = falling * Fraction(1, fact)
    p2 = rising * Fraction(1, fact)
    poch = Polynomial.from_roots([_half(k) for k in range(n + 1)])
    q = RationalFunction._from_normalized(Polynomial.constant(fact), poch)

    # R in lowest terms: for even n the linear factor 2t+n+1 equals twice a
    # pole factor and cancels one power of it in the denominator.
    num = falling * rising * fact
    if n % 2 == 0:
        num = num * 2
        den = Polynomial.constant(1)
        for k in range(n + 1):
            den = den * _pole_factor(k) ** _pole_exponent(n, k)
    else:
        num = num * Polynomial([Fraction(n + 1), Fraction(2)])  # 2t + n + 1
        den = poch**3
    r = RationalFunction._from_normalized(num, den)

    parts = KernelParts(n=n, P1=p1, P2=p2, Q=q, R=r)
    with _kernel_lock:
        _kernel_cache[n] = parts
    return parts


def q_residues(n: int) -> list[Fraction]:
    """Residues of Q_n at its poles: value of Q_n(t)(t+k+1/2) at t = -k-1/2.

    Evaluates the cleared product directly; the result is the alternating
    binomial (-1)^k C(n, k), which tests assert independently.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    fact = math.factorial(n)
    out = []
    for k in range(n + 1):
        prod = 1
        for l in range(n + 1):
            if l != k:
                prod *= l - k
        out.append(Fraction(fact, prod))
    return out


def pole_jet(n: int, k: int, order: int = 3) -> TruncatedSeries:
    """Exact jet of R_n(t) (t+k+1/2)^3 at t = -k-1/2.

    Coefficient j of the jet is A_jk.  For k outside 0..n the function has a
    triple zero at the center and the jet vanishes identically.
    """
    kern = build_kernel(n)
    center = _half(k)
    exponent = _pole_exponent(n, k)
    num_jet = TruncatedSeries.from_polynomial(kern.R.num, center, order)
    if exponent < 3:
        clearing = TruncatedSeries.from_polynomial(_pole_factor(k), center, order)
        num_jet = num_jet * clearing ** (3 - exponent)
    den_jet = TruncatedSeries.constant(1, center, order)
    for l in range(n + 1):
        if l == k:
            continue
        factor = TruncatedSeries.from_polynomial(_pole_factor(l), center, order)
        den_jet = den_jet * factor ** _pole_exponent(n, l)
    return num_jet * den_jet.reciprocal()


_table_lock = threading.Lock()
_table_cache: dict[int, PartialFractionTable] = {}


def partial_fractions(n: int) -> PartialFractionTable:
    """The exact 3 x (n+1) coefficient table of the pole expansion of R_n."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    with _table_lock:
        cached = _table_cache.get(n)
    if cached is not None:
        return cached
    jets = [pole_jet(n, k) for k in range(n + 1)]
    table = PartialFractionTable(
        n=n,
        A=tuple(tuple(jet.coefficient(j) for jet in jets) for j in range(3)),
    )
    with _table_lock:
        _table_cache[n] = table
    return table


def reconstruction(table: PartialFractionTable) -> RationalFunction:
    """Reassemble sum_{j,k} A_jk / (t+k+1/2)^(3-j) as one rational function."""
    n = table.n
    factors = [_pole_factor(k) for k in range(n + 1)]
    cubes = [f**3 for f in factors]
    # prefix[i] = product of cubes[:i], suffix[i] = product of cubes[i+1:]
    prefix = [Polynomial.constant(1)]
    for c in cubes:
        prefix.append(prefix[-1] * c)
    suffix = [Polynomial.constant(1)] * (n + 2)
    for i in range(n, -1, -1):
        suffix[i] = suffix[i + 1] * cubes[i]
    num = Polynomial()
    for k in range(n + 1):
        local = Polynomial()
        for j in range(3):
            local = local + factors[k] ** j * table.A[j][k]
        num = num + local * (prefix[k] * suffix[k + 1])
    return RationalFunction(num, prefix[n + 1])


def beta_partial_sum(k: int, power: int) -> Fraction:
    """Exact partial sum sum_{l=0}^{k-1} (-1)^l / (2l+1)^power."""
    total = Fraction(0)
    for l in range(k):
        term = Fraction(1, (2 * l + 1) ** power)
        total += term if l % 2 == 0 else -term
    return total


def coefficient_quadruple(n: int) -> CoefficientQuadruple:
    """Alternating column sums of the table, with exact inner beta partial sums.

    U  = 8 sum (-1)^k A_0k        (coefficient that multiplies beta(3))
    U' = 4 sum (-1)^k A_1k        (coefficient of beta(2) = G)
    U''= 2 sum (-1)^k A_2k        (coefficient of beta(1))
    V  = sum_j 2^(3-j) sum_k (-1)^k A_jk sum_{l<k} (-1)^l/(2l+1)^(3-j)
    """
    table = partial_fractions(n)
    signs = [1 if k % 2 == 0 else -1 for k in range(n + 1)]
    sums = [
        sum((s * a for s, a in zip(signs, row)), Fraction(0)) for row in table.A
    ]
    v = Fraction(0)
    for j in range(3):
        inner = Fraction(0)
        for k in range(n + 1):
            inner += signs[k] * table.A[j][k] * beta_partial_sum(k, 3 - j)
        v += 2 ** (3 - j) * inner
    return CoefficientQuadruple(
        n=n,
        U=8 * sums[0],
        Uprime=4 * sums[1],
        Udoubleprime=2 * sums[2],
        V=v,
    )


# -- auxiliary integrality checks ---------------------------------------------


def _is_integer(q: Fraction) -> bool:
    return q.denominator == 1


def _poly_jet_at(poly: Polynomial, center: Fraction, order: int) -> list[Fraction]:
    """Taylor coefficients [p(c), p'(c), p''(c)/2, ...] up to the given order."""
    return list(
        TruncatedSeries.from_polynomial(poly, center, order).coeffs
    )


def check_arith_lemmas(n: int) -> bool:
    """Exact verification of the auxiliary integrality statements for one n.

    Over the window k = -2n..2n:
      * 2^(2n) P(-k-1/2) is an integer for P in {P1, P2};
      * 2^(2n) D_n^j (1/j!) P^(j)(-k-1/2) is an integer for j = 1, 2.
    Over k = 0..n:
      * the j-th jet coefficient of Q_n(t)(t+k+1/2) at the pole equals
        (-1)^(j-1) sum_{l != k} a_l / (l-k)^j, and D_n^j times it is an
        integer, for j = 1, 2;
      * 2^(4n) D_n^j A_jk is an integer for j = 0, 1, 2.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    kern = build_kernel(n)
    table = partial_fractions(n)
    residues = q_residues(n)
    d_n = lcm_upto(n)
    two_2n = 2 ** (2 * n)
    two_4n = 2 ** (4 * n)

    for poly in (kern.P1, kern.P2):
        for k in range(-2 * n, 2 * n + 1):
            jet = _poly_jet_at(poly, _half(k), 3)
            if not _is_integer(two_2n * jet[0]):
                return False
            for j in (1, 2):
                if not _is_integer(two_2n * d_n**j * jet[j]):
                    return False

    fact = math.factorial(n)
    for k in range(n + 1):
        center = _half(k)
        den_jet = TruncatedSeries.constant(1, center, 3)
        for l in range(n + 1):
            if l != k:
                den_jet = den_jet * TruncatedSeries.from_polynomial(
                    _pole_factor(l), center, 3
                )
        cleared = TruncatedSeries.constant(fact, center, 3) * den_jet.reciprocal()
        for j in (1, 2):
            expected = Fraction(0)
            for l in range(n + 1):
                if l != k:
                    expected += residues[l] / Fraction(l - k) ** j
            expected *= (-1) ** (j - 1)
            if cleared.coefficient(j) != expected:
                return False
            if not _is_integer(d_n**j * cleared.coefficient(j)):
                return False
        for j in range(3):
            if not _is_integer(two_4n * d_n**j * table.A[j][k]):
                return False
    return True


# -- numerical evaluation of the alternating kernel sum -------------------------


def f_numeric(n: int, digits: int) -> mpf:
    """The alternating sum F_n = sum_{t>=0} (-1)^t R_n(t) to `digits` digits.

    The raw series converges only polynomially (the degree gap of R_n is
    n+2), so the partial sums are accelerated: the terms are exact rationals
    and form a signed combination of Hausdorff moment sequences, for which
    the Chebyshev acceleration scheme converges geometrically.  Term counts
    are doubled until two estimates agree within the target.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    if digits < 1:
        raise ValueError("digits must be positive")
    kern = build_kernel(n)
    r = kern.R
    estimate = alternating_sum_adaptive(
        lambda t: r(t),
        digits + 5,
        initial_terms=terms_for_digits(digits + 5) + 4 * n + 12,
    )
    return to_mpf(estimate, digits + 15)


def _integer_pair(r: RationalFunction) -> tuple[list[int], list[int]]:
    """Integer coefficient lists (num, den) with the same ratio as r."""
    scale = 1
    for c in list(r.num.coeffs) + list(r.den.coeffs):
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    num = [int(c * scale) for c in r.num.coeffs]
    den = [int(c * scale) for c in r.den.coeffs]
    return num, den


def f_numeric_partial_sums(
    n: int, digits: int, max_terms: int = 500_000
) -> mpf:
    """F_n by raw partial sums with the first-omitted-term remainder bound.

    The bound is only trusted once |R_n(t)| has decreased for three
    consecutive terms and t > 4n (the early terms are irregular: R_n
    vanishes at t = 0..n-1 and the sign factor 2t+n+1 distorts the head).
    Feasible only when the polynomial tail decay reaches the target within
    the term cap; raises PrecisionError otherwise.  Kept as the slow
    independent cross-check of the accelerated evaluator.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    num, den = _integer_pair(build_kernel(n).R)
    with mp.workdps(digits + 15):
        eps = mpf(10) ** (-(digits + 5))
        total = mpf(0)
        previous = mp.inf
        streak = 0
        for t in range(max_terms):
            term = mpf(horner_int(num, t)) / mpf(horner_int(den, t))
            magnitude = abs(term)
            if magnitude < previous:
                streak += 1
            else:
                streak = 0
            if streak >= 3 and t > 4 * n and magnitude < eps:
                return +total
            total += term if t % 2 == 0 else -term
            previous = magnitude
        raise PrecisionError(
            f"partial sums did not reach {digits} digits within {max_terms} terms"
        )
