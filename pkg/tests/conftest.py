"""Shared fixtures: high-precision reference values used as oracles."""

from fractions import Fraction

import pytest
from mpmath import mp, mpf


def mpf_frac(q: Fraction | int, dps: int | None = None) -> mpf:
    """Convert an exact rational to mpf at the current (or given) precision."""
    q = Fraction(q)
    if dps is None:
        return mpf(q.numerator) / mpf(q.denominator)
    with mp.workdps(dps):
        return mpf(q.numerator) / mpf(q.denominator)


@pytest.fixture(scope="session")
def catalan_200():
    """Catalan's constant at 200 digits from mpmath's own implementation.

    Independent of every code path in this package; anchors the oracle tests.
    """
    with mp.workdps(210):
        return +mp.catalan


@pytest.fixture(scope="session")
def zeta4_200():
    """zeta(4) = pi^4/90 at 200 digits from mpmath's pi."""
    with mp.workdps(210):
        return +(mp.pi**4 / 90)
