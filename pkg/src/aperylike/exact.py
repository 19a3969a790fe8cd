"""Exact arithmetic core: rationals, dense polynomials, rational functions,
truncated power series, the lcm table, and decimal-precision float helpers.

Representations:

* rationals are ``fractions.Fraction`` (always reduced, denominator > 0);
* a polynomial is a tuple of Fraction coefficients, index = degree, with no
  trailing zeros; the zero polynomial stores an empty tuple;
* a rational function is a reduced pair num/den with monic denominator;
* a truncated series at center c keeps ``order`` coefficients of (t - c)^j.

Everything in this module is exact; nothing rounds.  The only floating-point
code is the small group of helpers at the bottom that convert exact rationals
to mpmath values or decimal strings at a caller-stated number of digits.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Iterable, Sequence, Union

from mpmath import mp, mpf

from .errors import PoleAtCenterError

#: The exact scalar type used throughout the package.
ExactRational = Fraction

RationalLike = Union[int, Fraction]


def as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def format_rational(value: RationalLike) -> str:
    """Serialize a rational as ``"p"`` or ``"p/q"`` (never a float)."""
    return str(as_fraction(value))


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`."""
    return Fraction(text)


# ---------------------------------------------------------------------------
# Polynomials over the rationals
# ---------------------------------------------------------------------------


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients.

    Immutable.  ``coeffs[i]`` is the coefficient of t^i and the last entry is
    nonzero; the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        values = [as_fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value: RationalLike) -> "Polynomial":
        return cls([value])

    @classmethod
    def variable(cls) -> "Polynomial":
        """The monomial t."""
        return cls([0, 1])

    @classmethod
    def linear(cls, root: RationalLike) -> "Polynomial":
        """The monic linear factor (t - root)."""
        return cls([-as_fraction(root), 1])

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike]) -> "Polynomial":
        result = cls.constant(1)
        for r in roots:
            result = result * cls.linear(r)
        return result

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations ---------------------------------------------------

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial()
            f = as_fraction(other)
            return Polynomial([c * f for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quotient = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading_coefficient
        while len(rem) - 1 >= d and rem:
            q = rem[-1] / lead
            k = len(rem) - 1 - d
            quotient[k] = q
            for i in range(d + 1):
                rem[i + k] -= q * other.coeffs[i]
            while rem and rem[-1] == 0:
                rem.pop()
        return Polynomial(quotient), Polynomial(rem)

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, self._coerce(other))[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, self._coerce(other))[1]

    @staticmethod
    def _coerce(value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return Polynomial.constant(value)
        return NotImplemented

    # -- evaluation and calculus -------------------------------------------

    def __call__(self, point: RationalLike) -> Fraction:
        """Exact Horner evaluation."""
        x = as_fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, order: int = 1) -> "Polynomial":
        coeffs = list(self.coeffs)
        for _ in range(order):
            coeffs = [i * c for i, c in enumerate(coeffs)][1:]
        return Polynomial(coeffs)

    def shift(self, offset: RationalLike) -> "Polynomial":
        """Compose with a translation: returns f(t + offset)."""
        a = as_fraction(offset)
        if a == 0:
            return self
        step = Polynomial([a, 1])
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * step + Polynomial.constant(c)
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.leading_coefficient
        if lead == 1:
            return self
        return Polynomial([c / lead for c in self.coeffs])


# -- gcd over the rationals (primitive PRS over the integers) ----------------


def _integer_coefficients(poly: Polynomial) -> list[int]:
    """Scale a rational polynomial to integer coefficients (content ignored)."""
    den = 1
    for c in poly.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in poly.coeffs]


def _primitive(coeffs: list[int]) -> list[int]:
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
        if g == 1:
            return coeffs
    return [c // g for c in coeffs]


def _pseudo_remainder(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b over the integers (lists low -> high)."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        q = r[-1]
        r = [lead * c for c in r]
        for i in range(db + 1):
            r[i + k] -= q * b[i]
        while r and r[-1] == 0:
            r.pop()
    return r


def horner_int(coeffs: Sequence[int], t: int) -> int:
    """Evaluate an integer-coefficient polynomial (ascending list) at integer t."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd over the rationals, via the primitive PRS over the integers."""
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    a = _primitive(_integer_coefficients(f))
    b = _primitive(_integer_coefficients(g))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_remainder(a, b)
        a, b = b, _primitive(r) if r else []
    return Polynomial(a).monic()


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """Quotient of polynomials in canonical form.

    Canonical means gcd(num, den) = 1 and den monic; the scalar freed by
    making the denominator monic is absorbed into the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=Polynomial.constant(1)):
        num = self._to_poly(num)
        den = self._to_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            object.__setattr__(self, "num", Polynomial())
            object.__setattr__(self, "den", Polynomial.constant(1))
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lead = den.leading_coefficient
        if lead != 1:
            num = num * (1 / lead)
            den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _from_normalized(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        """Trusted constructor: inputs must already be coprime with monic den."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @staticmethod
    def _to_poly(value) -> Polynomial:
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return Polynomial.constant(value)
        raise TypeError(f"cannot build a polynomial from {value!r}")

    @classmethod
    def from_fraction(cls, value: RationalLike) -> "RationalFunction":
        return cls(Polynomial.constant(value))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def degree_gap(self) -> int:
        """deg(num) - deg(den); negative for proper fractions."""
        return self.num.degree - self.den.degree

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Polynomial)):
            return self == RationalFunction(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == Polynomial.constant(1):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    # -- field operations ---------------------------------------------------

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._from_normalized(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        g = poly_gcd(self.den, other.den)
        da = self.den // g
        db = other.den // g
        num = self.num * db + other.num * da
        return RationalFunction(num, self.den * db)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return -(self - other)

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RationalFunction(Polynomial())
        # Cross-reduce first; the products of the reduced parts are then
        # coprime, so no further gcd is needed.
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num1 = self.num // g1 if g1.degree > 0 else self.num
        den2 = other.den // g1 if g1.degree > 0 else other.den
        num2 = other.num // g2 if g2.degree > 0 else other.num
        den1 = self.den // g2 if g2.degree > 0 else self.den
        num = num1 * num2
        den = den1 * den2
        lead = den.leading_coefficient
        if lead != 1:
            num = num * (1 / lead)
            den = den.monic()
        return RationalFunction._from_normalized(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return self * RationalFunction(other.den, other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return (RationalFunction.from_fraction(1) / self) ** (-exponent)
        result = RationalFunction.from_fraction(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @classmethod
    def _coerce(cls, value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (int, Fraction, Polynomial)):
            return cls(value)
        return NotImplemented

    # -- evaluation ----------------------------------------------------------

    def __call__(self, point: RationalLike) -> Fraction:
        """Exact evaluation; raises ZeroDivisionError at a pole."""
        x = as_fraction(point)
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"evaluation at pole t = {x}")
        return self.num(x) / d

    def shift(self, offset: RationalLike) -> "RationalFunction":
        """Return f(t + offset); translation preserves canonical form."""
        num = self.num.shift(offset)
        den = self.den.shift(offset)
        return RationalFunction._from_normalized(num, den)


def ratfun_equal(f: RationalFunction, g: RationalFunction) -> bool:
    """Exact equality of rational functions (canonical forms coincide)."""
    return f.num == g.num and f.den == g.den


# ---------------------------------------------------------------------------
# Truncated power series at a shifted center
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """Exact jet of a function at a center: sum of c_j (t - center)^j, j < order."""

    __slots__ = ("center", "coeffs")

    def __init__(self, center: RationalLike, coeffs: Sequence[RationalLike]):
        if not coeffs:
            raise ValueError("series order must be at least 1")
        object.__setattr__(self, "center", as_fraction(center))
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in coeffs))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    @classmethod
    def from_polynomial(
        cls, poly: Polynomial, center: RationalLike, order: int
    ) -> "TruncatedSeries":
        # Repeated synthetic division by (t - center): each pass peels off the
        # next Taylor coefficient in O(degree) work, so only `order` passes are
        # needed instead of a full O(degree^2) recentering.
        c = as_fraction(center)
        work = list(poly.coeffs)
        out: list[Fraction] = []
        for _ in range(order):
            if not work:
                out.append(Fraction(0))
                continue
            acc = work[-1]
            quotient = [Fraction(0)] * (len(work) - 1)
            for i in range(len(work) - 2, -1, -1):
                quotient[i] = acc
                acc = acc * c + work[i]
            out.append(acc)
            work = quotient
        return cls(center, out)

    @classmethod
    def constant(cls, value: RationalLike, center: RationalLike, order: int):
        return cls(center, [value] + [0] * (order - 1))

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.center != other.center or self.order != other.order:
            raise ValueError("series have different centers or orders")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.center == other.center and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.center, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries(center={self.center}, coeffs={[str(c) for c in self.coeffs]})"

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries(
            self.center, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries(
            self.center, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            f = as_fraction(other)
            return TruncatedSeries(self.center, [c * f for c in self.coeffs])
        self._check_compatible(other)
        m = self.order
        out = [Fraction(0)] * m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(m - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(self.center, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result = TruncatedSeries.constant(1, self.center, self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse modulo (t - center)^order; needs c_0 != 0."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series has zero constant term")
        inv0 = 1 / c0
        out = [inv0] + [Fraction(0)] * (self.order - 1)
        for k in range(1, self.order):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += self.coeffs[i] * out[k - i]
            out[k] = -acc * inv0
        return TruncatedSeries(self.center, out)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.center, self.coeffs[:order])


def series_expand(
    f: RationalFunction, center: RationalLike, order: int
) -> TruncatedSeries:
    """Exact Taylor jet of a rational function at a finite center.

    The denominator must not vanish at the center; callers expanding at a pole
    must clear it first (multiply by the appropriate power of the pole factor).
    """
    if order < 1:
        raise ValueError("series order must be at least 1")
    c = as_fraction(center)
    if f.den(c) == 0:
        raise PoleAtCenterError(f"denominator vanishes at center t = {c}")
    num = TruncatedSeries.from_polynomial(f.num, c, order)
    den = TruncatedSeries.from_polynomial(f.den, c, order)
    return num * den.reciprocal()


# ---------------------------------------------------------------------------
# Least-common-multiple table  D_n = lcm(1..n), D_0 = 1
# ---------------------------------------------------------------------------

_lcm_lock = threading.Lock()
_lcm_table: list[int] = [1]


def lcm_upto(n: int) -> int:
    """D_n = lcm(1, 2, ..., n), with D_0 = 1; cached incrementally."""
    if n < 0:
        raise ValueError("lcm_upto requires n >= 0")
    table = _lcm_table
    if n < len(table):
        return table[n]
    with _lcm_lock:
        while len(_lcm_table) <= n:
            m = len(_lcm_table)
            _lcm_table.append(math.lcm(_lcm_table[-1], m))
        return _lcm_table[n]


# ---------------------------------------------------------------------------
# Decimal-precision helpers (the one floating-point corner of this module)
# ---------------------------------------------------------------------------


def to_mpf(value: RationalLike, digits: int) -> mpf:
    """Round an exact rational to an mpmath float carrying `digits` decimal digits.

    No hidden guard digits: the caller states the working precision.
    """
    if digits < 1:
        raise ValueError("digits must be positive")
    q = as_fraction(value)
    with mp.workdps(digits):
        return mpf(q.numerator) / mpf(q.denominator)


def decimal_string(value: RationalLike, places: int) -> str:
    """Exact decimal rendering of a rational with `places` digits after the point.

    Rounds to nearest, ties to even, using integer arithmetic only.
    """
    if places < 0:
        raise ValueError("places must be nonnegative")
    q = as_fraction(value)
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = q * 10**places
    whole, rem = divmod(scaled.numerator, scaled.denominator)
    twice = 2 * rem
    if twice > scaled.denominator or (twice == scaled.denominator and whole % 2):
        whole += 1
    if places == 0:
        return f"{sign}{whole}"
    digits = str(whole).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
