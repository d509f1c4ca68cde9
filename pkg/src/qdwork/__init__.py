"""Exact-arithmetic verification of q-Dwork-type supercongruences.

Subpackages:
  polyring  - rationals, dense polynomials in q, cyclotomic polynomials
  ratfun    - canonical rational functions and congruence mod a polynomial
  qseries   - q-shifted factorials and the truncated sums
  padic     - Jacobi symbols, p-adic valuations, classical congruence checks
  verifier  - theorem drivers producing structured reports
  cli       - command-line front end (single runs and parameter scans)
"""

__version__ = "0.1.0"

from .errors import (
    BothZero,
    DivisionByZero,
    HypothesisViolation,
    InvalidModulus,
    InvalidParameter,
    NonExactDivision,
    NotPIntegral,
    QDworkError,
    SizeGuardExceeded,
    ZeroValuation,
)
from .polyring import Poly, Rational, cyclotomic, q
from .ratfun import Congruence, RatFun, rf_arith, rf_congruent, rf_new
from .qseries import SumSpec, qpochhammer, sum_side, sum_term

__all__ = [
    "__version__",
    "Poly",
    "Rational",
    "cyclotomic",
    "q",
    "Congruence",
    "RatFun",
    "rf_arith",
    "rf_congruent",
    "rf_new",
    "SumSpec",
    "qpochhammer",
    "sum_side",
    "sum_term",
    "QDworkError",
    "DivisionByZero",
    "NonExactDivision",
    "InvalidParameter",
    "BothZero",
    "InvalidModulus",
    "SizeGuardExceeded",
    "ZeroValuation",
    "NotPIntegral",
    "HypothesisViolation",
]
