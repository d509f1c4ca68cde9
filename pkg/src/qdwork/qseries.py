"""q-shifted factorials and the truncated sums under study.

The central object is the truncated sum

    S(m, s, t, N, u) = sum_{k=0}^{N-1}
        2 (q^(s t + u); q^(m t))_k (q^((m-s) t - u); q^(m t))_k q^(m t k)
        -----------------------------------------------------------------
              (q^(m t); q^(m t))_k^2 (1 + q^(m t k))

with 0 < s < m, scale t in {1, n, n^2}, and integer substitution exponent u
(u encodes specializing an auxiliary parameter a to q^u; u = 0 means a = 1).
All arithmetic is exact; negative exponents fold into rational functions as
1 - q^(-t) = (q^t - 1)/q^t, so no Laurent machinery is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._factored import Factored, FactoredSum
from .errors import InvalidParameter
from .ratfun import RatFun


@dataclass(frozen=True)
class SumSpec:
    """Parameters of one truncated sum.

    m, s: the exponent pattern (0 < s < m); scale: the t in q^(s t), q^(m t);
    terms: number of summands N (k runs over 0..N-1); subst_exponent: the u
    in a = q^u, with u = 0 encoding a = 1.
    """

    m: int
    s: int
    scale: int = 1
    terms: int = 0
    subst_exponent: int = 0

    def __post_init__(self):
        if self.m < 1 or self.s < 1 or self.s >= self.m:
            raise InvalidParameter("need positive s < m")
        if self.scale < 1:
            raise InvalidParameter("scale must be a positive integer")
        if self.terms < 0:
            raise InvalidParameter("terms must be nonnegative")


def _poch_factored(f: Factored, e: int, step: int, k: int, power: int = 1) -> Factored:
    """Multiply f by (q^e; q^step)_k ** power."""
    for i in range(k):
        f.times_one_minus_q(e + step * i, power)
        if f.is_zero:
            break
    return f


def qpochhammer(e: int, step: int, k: int) -> RatFun:
    """The q-shifted factorial (q^e; q^step)_k as an exact rational function.

    e may be negative or zero; the product is 0 exactly when some factor is
    1 - q^0, and 1 when k = 0.
    """
    if step < 1:
        raise InvalidParameter("step must be a positive integer")
    if k < 0:
        raise InvalidParameter("k must be nonnegative")
    return _poch_factored(Factored(), e, step, k).to_ratfun()


def _term_factored(spec: SumSpec, k: int) -> Factored:
    m, s, t, u = spec.m, spec.s, spec.scale, spec.subst_exponent
    f = Factored()
    f.times_scalar(2)
    _poch_factored(f, s * t + u, m * t, k)
    _poch_factored(f, (m - s) * t - u, m * t, k)
    if f.is_zero:
        return f
    f.times_qpow(m * t * k)
    _poch_factored(f, m * t, m * t, k, power=-2)
    f.times_one_plus_q(m * t * k, power=-1)
    return f


def sum_term(spec: SumSpec, k: int) -> RatFun:
    """The k-th summand; k = 0 always yields 1."""
    if k < 0:
        raise InvalidParameter("k must be nonnegative")
    return _term_factored(spec, k).to_ratfun()


def sum_factored(spec: SumSpec) -> FactoredSum:
    """The full truncated sum, denominator kept in factored form."""
    acc = FactoredSum()
    for k in range(spec.terms):
        term = _term_factored(spec, k)
        if not term.is_zero:
            acc.iadd(term.to_sum())
    return acc


def sum_side(spec: SumSpec) -> RatFun:
    """The truncated sum as a canonical rational function (0 for terms = 0)."""
    return sum_factored(spec).to_ratfun()[0]


def sum_side_params(m: int, s: int, scale: int, terms: int, u: int = 0) -> RatFun:
    """Convenience wrapper building the SumSpec inline."""
    return sum_side(SumSpec(m=m, s=s, scale=scale, terms=terms, subst_exponent=u))


def constant_value(r: RatFun) -> Fraction:
    """Value of a sum that collapsed to a constant; raises otherwise."""
    if not r.is_constant():
        raise ValueError("sum did not collapse to a constant")
    return r.as_fraction()
