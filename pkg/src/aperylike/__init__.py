"""Exact arithmetic and arbitrary-precision evaluation for the Apery-like
second-order difference equations behind Catalan's constant and zeta(4).

Subpackages by responsibility:

* :mod:`aperylike.exact` - rationals, polynomials, rational functions,
  truncated series, the lcm table, decimal helpers;
* :mod:`aperylike.acceleration` - exact Chebyshev acceleration of
  alternating series;
* :mod:`aperylike.sequences` - the two recurrence families, integrality
  reports, measured growth rates;
* :mod:`aperylike.hypergeom` - the rational kernel, its partial-fraction
  table, linear-form coefficients, numerical kernel sums;
* :mod:`aperylike.certificate` - the telescoping certificate and its exact
  verification;
* :mod:`aperylike.analytic` - reference constants, certified digits,
  continued fractions, the double integral, the zeta4 derivative series;
* :mod:`aperylike.cli` - the command-line front end.
"""

from .exact import (
    ExactRational,
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    lcm_upto,
    poly_gcd,
    ratfun_equal,
    series_expand,
)
from .sequences import (
    AsymptoticRates,
    InclusionReport,
    SequencePair,
    asymptotic_report,
    catalan_p,
    catalan_pair,
    catalan_q,
    check_inclusions,
    zeta4_pair,
    zeta4_r,
)
from .hypergeom import (
    CoefficientQuadruple,
    KernelParts,
    PartialFractionTable,
    build_kernel,
    coefficient_quadruple,
    check_arith_lemmas,
    f_numeric,
    partial_fractions,
    q_residues,
)
from .certificate import (
    Certificate,
    build_certificate,
    verify_recurrence_transfer,
    verify_telescoping,
)
from .analytic import (
    CFConvergent,
    DigitsResult,
    beukers_integral,
    catalan_digits,
    cf_convergent,
    reference_catalan,
    reference_zeta4,
    zeta4_digits,
    zeta4_series,
)
from .errors import PoleAtCenterError, PrecisionError, QuadratureError

__all__ = [
    "AsymptoticRates",
    "CFConvergent",
    "Certificate",
    "CoefficientQuadruple",
    "DigitsResult",
    "ExactRational",
    "InclusionReport",
    "KernelParts",
    "PartialFractionTable",
    "PoleAtCenterError",
    "Polynomial",
    "PrecisionError",
    "QuadratureError",
    "RationalFunction",
    "SequencePair",
    "TruncatedSeries",
    "asymptotic_report",
    "beukers_integral",
    "build_certificate",
    "build_kernel",
    "catalan_digits",
    "catalan_p",
    "catalan_pair",
    "catalan_q",
    "cf_convergent",
    "check_arith_lemmas",
    "check_inclusions",
    "coefficient_quadruple",
    "f_numeric",
    "lcm_upto",
    "partial_fractions",
    "poly_gcd",
    "q_residues",
    "ratfun_equal",
    "reference_catalan",
    "reference_zeta4",
    "series_expand",
    "verify_recurrence_transfer",
    "verify_telescoping",
    "zeta4_digits",
    "zeta4_pair",
    "zeta4_r",
    "zeta4_series",
]

__version__ = "0.1.0"
