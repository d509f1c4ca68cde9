"""Theorem drivers: assemble moduli, compare both sides, produce reports.

Each driver validates its hypotheses, builds the two truncated sums with
denominators kept in factored form, reduces their difference to canonical
form once, and tests divisibility of the reduced numerator by every listed
cyclotomic factor separately (reporting the first failure), plus the full
product as a cross-check.  A non-coprime denominator is surfaced as a
failure with diagnosis, never silently.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional

from . import _intpoly
from ._factored import FactoredSum
from .errors import InvalidParameter, NonExactDivision, SizeGuardExceeded
from .padic import jacobi
from .polyring import Poly, cyclotomic, cyclotomic_coeffs
from .qseries import SumSpec, sum_factored
from .ratfun import RatFun

DEFAULT_SIZE_GUARD = 200


class Theorem(enum.Enum):
    THM1 = "thm1"
    THM2 = "thm2"
    LEMMA21 = "lemma21"
    PARAM1_ROOTS = "param1"
    PARAM2_ROOTS = "param2"
    GZ_D2 = "gz-d2"


@dataclass(frozen=True)
class TheoremParams:
    """Driver parameters; r is None for the single-sum lemma check."""

    m: int
    s: int
    n: int
    r: Optional[int] = None


@dataclass(frozen=True)
class VerificationReport:
    theorem: Theorem
    params: TheoremParams
    modulus_factors: list[tuple[int, int]]
    passed: bool
    failure_witness: Optional[str]
    elapsed_ms: int


# -- parameter validation -----------------------------------------------------


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameter(msg)


def _basic_params(m: int, s: int, n: int) -> None:
    _require(m >= 1 and s >= 1 and s < m, "need positive s < m")
    _require(n > 1, "n must exceed 1")
    _require(n % 2 == 1, "n must be odd")


def _guard(n: int, r: int, size_guard: int) -> None:
    if n ** r > size_guard:
        raise SizeGuardExceeded(
            f"n^r = {n ** r} exceeds the size guard {size_guard}; raise it explicitly to proceed"
        )


def class1_sign_exponent(m: int, s: int, n: int) -> int:
    """<(-s/m)>_n for n = 1 (mod m), by the closed form s(n-1)/m."""
    _require((n - 1) % m == 0, "n must be 1 mod m")
    return s * (n - 1) // m


def _mod_residue(a: int, m: int, n: int) -> int:
    """Least nonnegative residue of a/m modulo n, gcd(m, n) = 1."""
    return a * pow(m, -1, n) % n


# -- congruence checking machinery ----------------------------------------------


def _int_numerator(p: Poly) -> list[int]:
    """Integer coefficient list proportional to p (scalars are irrelevant to
    divisibility by a monic polynomial over Q)."""
    coeffs = list(p.coeffs)
    if all(isinstance(c, int) for c in coeffs):
        return coeffs
    from math import lcm

    m = lcm(*(c.denominator for c in coeffs if isinstance(c, Fraction)))
    return [int(c * m) for c in coeffs]


def _rem_monic(a: list[int], b: list[int]) -> list[int]:
    """Remainder of a modulo monic b over Z (witness extraction only)."""
    db = len(b) - 1
    r = a[:]
    for k in range(len(r) - db - 1, -1, -1):
        c = r[k + db]
        if c:
            for j in range(db):
                if b[j]:
                    r[k + j] -= c * b[j]
            r[k + db] = 0
    return _intpoly.trim(r[:db])


def _witness_residue(num: list[int], modulus: list[int]) -> str:
    rem = _rem_monic(num, modulus)
    lead = rem[-6:][::-1]
    return f"residue degree {len(rem) - 1}, leading coefficients {lead}"


def _check_factor_divisibility(
    diff: FactoredSum, factors: list[tuple[int, int]]
) -> tuple[bool, Optional[str]]:
    """Divisibility of the reduced difference numerator by each Phi_idx^mult.

    Also cross-checks the full product (congruence modulo the product holds
    exactly when it holds modulo every factor).
    """
    rf, residual = diff.to_ratfun()
    if rf.is_zero:
        return True, None
    num = _int_numerator(rf.num)
    witness = None
    for idx, mult in factors:
        if idx in residual:
            witness = f"Phi_{idx}: modulus shares a factor with the reduced denominator"
            break
        modulus = _intpoly.mul_many([cyclotomic_coeffs(idx)] * mult)
        try:
            _intpoly.divexact(num, modulus)
        except NonExactDivision:
            witness = f"Phi_{idx}^{mult} fails: {_witness_residue(num, modulus)}"
            break
    if witness is None:
        product = _intpoly.mul_many(
            [cyclotomic_coeffs(idx) for idx, mult in factors for _ in range(mult)]
        )
        try:
            _intpoly.divexact(num, product)
        except NonExactDivision:  # pragma: no cover - per-factor and product agree
            witness = "internal inconsistency: factors divide but their product does not"
    return witness is None, witness


def _finish(
    theorem: Theorem,
    params: TheoremParams,
    factors: list[tuple[int, int]],
    passed: bool,
    witness: Optional[str],
    t0: float,
) -> VerificationReport:
    return VerificationReport(
        theorem=theorem,
        params=params,
        modulus_factors=factors,
        passed=passed,
        failure_witness=witness,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
    )


# -- moduli ---------------------------------------------------------------------


def modulus_thm1_factors(n: int, r: int) -> list[tuple[int, int]]:
    _require(n > 1, "n must exceed 1")
    _require(r >= 1, "r must be at least 1")
    return [(n ** j, 2) for j in range(1, r + 1)]


def modulus_thm1(n: int, r: int) -> Poly:
    """The full product of squared cyclotomics at indices n, n^2, ..., n^r."""
    prod = Poly.const(1)
    for idx, mult in modulus_thm1_factors(n, r):
        prod = prod * cyclotomic(idx) ** mult
    return prod


def modulus_thm2_factors(n: int, r: int) -> list[tuple[int, int]]:
    _require(n > 1, "n must exceed 1")
    _require(r >= 2, "r must be at least 2")
    return [(n ** (2 * j), 2) for j in range(1, r // 2 + 1)]


# -- theorem drivers ---------------------------------------------------------------


def verify_thm1(params: TheoremParams, size_guard: int = DEFAULT_SIZE_GUARD) -> VerificationReport:
    """Scale-1 sum over n^r terms against the sign-weighted scale-n sum over
    n^(r-1) terms, modulo every Phi_(n^j)^2, for n = 1 (mod m)."""
    m, s, n, r = params.m, params.s, params.n, params.r
    _basic_params(m, s, n)
    _require(r is not None and r >= 2, "r must be at least 2")
    _require(n % m == 1, "n must be 1 mod m")
    _guard(n, r, size_guard)
    t0 = time.perf_counter()
    factors = modulus_thm1_factors(n, r)
    big = sum_factored(SumSpec(m, s, 1, n ** r, 0))
    small = sum_factored(SumSpec(m, s, n, n ** (r - 1), 0))
    sign = (-1) ** class1_sign_exponent(m, s, n)
    diff = big.copy().iadd(small, Fraction(-sign))
    passed, witness = _check_factor_divisibility(diff, factors)
    return _finish(Theorem.THM1, params, factors, passed, witness, t0)


def verify_thm2(params: TheoremParams, size_guard: int = DEFAULT_SIZE_GUARD) -> VerificationReport:
    """Scale-1 sum over n^r terms against the scale-n^2 sum over n^(r-2)
    terms, modulo every Phi_(n^(2j))^2, for n = -1 (mod m)."""
    m, s, n, r = params.m, params.s, params.n, params.r
    _basic_params(m, s, n)
    _require(r is not None and r >= 2, "r must be at least 2")
    _require(n % m == m - 1, "n must be -1 mod m")
    _guard(n, r, size_guard)
    t0 = time.perf_counter()
    factors = modulus_thm2_factors(n, r)
    big = sum_factored(SumSpec(m, s, 1, n ** r, 0))
    small = sum_factored(SumSpec(m, s, n * n, n ** (r - 2), 0))
    diff = big.copy().iadd(small, Fraction(-1))
    passed, witness = _check_factor_divisibility(diff, factors)
    return _finish(Theorem.THM2, params, factors, passed, witness, t0)


def verify_lemma21(m: int, n: int, s: int) -> VerificationReport:
    """Root-substitution collapse of the n-term sum to (-1)^<(-s/m)>_n.

    At a = q^(u1) and a = q^(u2), where u1 = -(s + m <(-s/m)>_n) and
    u2 = m - s + m <((s-m)/m)>_n, the sum must equal the sign exactly.
    """
    _basic_params(m, s, n)
    _require(gcd(m, n) == 1, "m and n must be coprime")
    t0 = time.perf_counter()
    alpha = _mod_residue(-s, m, n)
    beta = _mod_residue(s - m, m, n)
    u1 = -(s + m * alpha)
    u2 = m - s + m * beta
    _require((s + m * alpha) + (m - s + m * beta) > 0, "modulus factors must be distinct")
    sign = (-1) ** alpha
    params = TheoremParams(m=m, s=s, n=n, r=None)
    witness = None
    for u in (u1, u2):
        value = sum_factored(SumSpec(m, s, 1, n, u)).to_ratfun()[0]
        if value != RatFun(sign):
            witness = f"substitution a = q^{u}: sum is {value}, expected {sign}"
            break
    return _finish(Theorem.LEMMA21, params, [], witness is None, witness, t0)


def _root_families(variant: int, m: int, s: int, n: int, r: int) -> list[tuple[int, int, int]]:
    """(family, j, substitution exponent u) for every admissible j."""
    scale = n if variant == 1 else n * n
    top = n ** (r - 1) - 1 if variant == 1 else n ** (r - 2) - 1
    subs = []
    for j in range(top // s + 1):
        subs.append((1, j, -s * scale * (m * j + 1)))
    for j in range(top // (m - s) + 1):
        subs.append((2, j, (m - s) * scale * (m * j + 1)))
    return subs


def verify_param_roots(
    variant: int, params: TheoremParams, size_guard: int = DEFAULT_SIZE_GUARD
) -> VerificationReport:
    """Root substitutions of the auxiliary-parameter congruences.

    variant 1 (n = 1 mod m): at a = q^(-sn(mj+1)) and a = q^((m-s)n(mj+1))
    both sides collapse to (-1)^(sj + s(n-1)/m); variant 2 (n = -1 mod m):
    at a = q^(-s n^2 (mj+1)) and a = q^((m-s) n^2 (mj+1)) both sides equal
    (-1)^(s n^2 j).  These are exact equalities of rational functions, and
    the substituted exponents are checked pairwise distinct (the moduli are
    products of pairwise coprime factors).
    """
    if variant not in (1, 2):
        raise InvalidParameter("variant must be 1 or 2")
    m, s, n, r = params.m, params.s, params.n, params.r
    _basic_params(m, s, n)
    _require(r is not None and r >= 2, "r must be at least 2")
    if variant == 1:
        _require(n % m == 1, "variant 1 needs n = 1 mod m")
        theorem = Theorem.PARAM1_ROOTS
        rhs_scale, rhs_terms = n, n ** (r - 1)
        prefactor = (-1) ** class1_sign_exponent(m, s, n)
    else:
        _require(n % m == m - 1, "variant 2 needs n = -1 mod m")
        theorem = Theorem.PARAM2_ROOTS
        rhs_scale, rhs_terms = n * n, n ** (r - 2)
        prefactor = 1
    _guard(n, r, size_guard)
    t0 = time.perf_counter()
    subs = _root_families(variant, m, s, n, r)
    exponents = [u for _, _, u in subs]
    witness = None
    if len(set(exponents)) != len(exponents):
        witness = "substituted exponents are not pairwise distinct"
    for family, j, u in subs:
        if witness:
            break
        if variant == 1:
            predicted = (-1) ** (s * j + class1_sign_exponent(m, s, n))
        else:
            predicted = (-1) ** (s * n * n * j)
        lhs = sum_factored(SumSpec(m, s, 1, n ** r, u)).to_ratfun()[0]
        if lhs != RatFun(predicted):
            witness = f"family {family}, j={j}, a=q^{u}: full sum is {lhs}, expected {predicted}"
            break
        rhs = sum_factored(SumSpec(m, s, rhs_scale, rhs_terms, u)).to_ratfun()[0]
        if prefactor * rhs != RatFun(predicted):
            witness = (
                f"family {family}, j={j}, a=q^{u}: reduced-side sum is "
                f"{prefactor * rhs}, expected {predicted}"
            )
            break
    return _finish(theorem, params, [], witness is None, witness, t0)


def verify_gz_d2(n: int, r: int, size_guard: int = DEFAULT_SIZE_GUARD) -> VerificationReport:
    """The halved-range specialization with m = 2, s = 1: the sum over
    k = 0..(n^r - 1)/2 equals the Jacobi symbol (-1/n) times the scale-n sum
    over k = 0..(n^(r-1) - 1)/2, modulo every Phi_(n^j)^2."""
    _require(n > 1 and n % 2 == 1, "n must be an odd integer exceeding 1")
    _require(r >= 1, "r must be at least 1")
    _guard(n, r, size_guard)
    t0 = time.perf_counter()
    params = TheoremParams(m=2, s=1, n=n, r=r)
    factors = modulus_thm1_factors(n, r)
    big = sum_factored(SumSpec(2, 1, 1, (n ** r - 1) // 2 + 1, 0))
    small = sum_factored(SumSpec(2, 1, n, (n ** (r - 1) - 1) // 2 + 1, 0))
    sign = jacobi(-1, n)
    diff = big.copy().iadd(small, Fraction(-sign))
    passed, witness = _check_factor_divisibility(diff, factors)
    return _finish(Theorem.GZ_D2, params, factors, passed, witness, t0)


# -- combinatorial facts used in the proofs -------------------------------------------


class MultipleCount(NamedTuple):
    counted: int
    expected: int


def count_multiples(m: int, s: int, n: int, r: int, j: int) -> MultipleCount:
    """Count elements divisible by n^j, with multiplicity, in the two
    exponent lists {s n (m i + 1)} and {(m - s) n (m i + 1)}, against the
    closed form floor((n^(r-j)-1)/s) + floor((n^(r-j)-1)/(m-s)) + 2."""
    _basic_params(m, s, n)
    _require(n % m == 1, "n must be 1 mod m")
    _require(r >= 1, "r must be at least 1")
    _require(1 <= j <= r, "need 1 <= j <= r")
    top = n ** (r - 1) - 1
    njp = n ** j
    counted = 0
    for c in (s, m - s):
        for i in range(top // c + 1):
            if (c * n * (m * i + 1)) % njp == 0:
                counted += 1
    expected = (n ** (r - j) - 1) // s + (n ** (r - j) - 1) // (m - s) + 2
    return MultipleCount(counted=counted, expected=expected)


def exponent_bound_holds(m: int, s: int, n: int, r: int, j: int) -> bool:
    """n^(j-1) (floor((n^(r-j)-1)/s) m + 1) <= floor((n^(r-1)-1)/s) m + 1."""
    _basic_params(m, s, n)
    _require(n % m == 1, "n must be 1 mod m")
    _require(r >= 1, "r must be at least 1")
    _require(1 <= j <= r, "need 1 <= j <= r")
    lhs = n ** (j - 1) * (((n ** (r - j) - 1) // s) * m + 1)
    rhs = ((n ** (r - 1) - 1) // s) * m + 1
    return lhs <= rhs
