"""Exact rational and p-adic utilities with the classical congruence checks.

Everything works on `fractions.Fraction`; a "p-adic integer" argument is
realized as a rational whose denominator is coprime to p, which is the only
computable slice needed here.  Residues of such rationals modulo p^e invert
the denominator with the extended Euclidean algorithm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidParameter, NotPIntegral, HypothesisViolation, ZeroValuation

RationalLike = Union[int, Fraction]


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for desk-scale n."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(bound: int) -> list[int]:
    return [n for n in range(2, bound + 1) if is_prime(n)]


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1; the Legendre symbol for prime n."""
    if n < 1 or n % 2 == 0:
        raise InvalidParameter("Jacobi symbol needs odd n >= 1")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def vp(x: RationalLike, p: int) -> int:
    """p-adic valuation of a nonzero rational; may be negative."""
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    x = Fraction(x)
    if x == 0:
        raise ZeroValuation("the valuation of 0 is +infinity")

    def _vint(n: int) -> int:
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return v

    return _vint(x.numerator) - _vint(x.denominator)


def residue_mod(x: RationalLike, p: int, e: int) -> int:
    """The unique integer in [0, p^e) congruent to x modulo p^e.

    Requires x to be p-integral (denominator coprime to p).
    """
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    if e < 1:
        raise InvalidParameter("exponent must be positive")
    x = Fraction(x)
    if x != 0 and vp(x, p) < 0:
        raise NotPIntegral(f"{x} has {p} in its denominator")
    m = p ** e
    return x.numerator * pow(x.denominator, -1, m) % m


def least_residue(x: RationalLike, p: int) -> int:
    """The least nonnegative residue of the p-integral rational x modulo p."""
    return residue_mod(x, p, 1)


def binom_rational(x: RationalLike, k: int) -> Fraction:
    """Binomial coefficient x(x-1)...(x-k+1)/k! for rational x."""
    if k < 0:
        raise InvalidParameter("k must be nonnegative")
    x = Fraction(x)
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    return num / math.factorial(k)


@dataclass(frozen=True)
class CongruenceInstance:
    """One checked congruence modulo prime^exponent."""

    prime: int
    exponent: int
    lhs_residue: int
    rhs_residue: int
    passed: bool


def _instance(p: int, e: int, lhs: Fraction, rhs: Fraction) -> CongruenceInstance:
    lr = residue_mod(lhs, p, e)
    rr = residue_mod(rhs, p, e)
    return CongruenceInstance(prime=p, exponent=e, lhs_residue=lr, rhs_residue=rr, passed=lr == rr)


#: summand patterns: (binomial pair, power base, character argument)
_MORTENSON_VARIANTS = {
    1: (lambda k: math.comb(2 * k, k) ** 2, 16, "(-1/p)"),
    2: (lambda k: math.comb(3 * k, k) * math.comb(2 * k, k), 27, "(p/3)"),
    3: (lambda k: math.comb(4 * k, 2 * k) * math.comb(2 * k, k), 64, "(-2/p)"),
    4: (lambda k: math.comb(6 * k, 3 * k) * math.comb(3 * k, k), 432, "(-1/p)"),
}


def check_mortenson(p: int, variant: int) -> CongruenceInstance:
    """Truncated central-binomial sums against quadratic characters mod p^2.

    variant 1: sum C(2k,k)^2/16^k       = (-1/p)
    variant 2: sum C(3k,k)C(2k,k)/27^k  = (p/3)
    variant 3: sum C(4k,2k)C(2k,k)/64^k = (-2/p)
    variant 4: sum C(6k,3k)C(3k,k)/432^k = (-1/p)
    with k running over 0..p-1, for primes p > 3.
    """
    if variant not in _MORTENSON_VARIANTS:
        raise InvalidParameter("variant must be 1, 2, 3 or 4")
    if not is_prime(p) or p <= 3:
        raise InvalidParameter("p must be a prime greater than 3")
    numer, base, _ = _MORTENSON_VARIANTS[variant]
    lhs = sum(Fraction(numer(k), base ** k) for k in range(p))
    if variant == 1:
        rhs = jacobi(-1, p)
    elif variant == 2:
        rhs = jacobi(p, 3)
    elif variant == 3:
        rhs = jacobi(-2, p)
    else:
        rhs = jacobi(-1, p)
    return _instance(p, 2, lhs, Fraction(rhs))


_LIU_SET = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 6))


def check_sun_liu(p: int, n: int, x: RationalLike) -> CongruenceInstance:
    """Dwork-style binomial congruence mod p^2.

    sum_{k<pn} C(-x,k) C(x-1,k)  =  (-1)^<(-x)>_p  sum_{k<n} C(-x,k) C(x-1,k)

    for p-integral x; the n = 1 case holds for every p-adic integer x, the
    n > 1 cases are stated for x in {1/2, 1/3, 1/4, 1/6}.
    """
    if not is_prime(p) or p == 2:
        raise InvalidParameter("p must be an odd prime")
    if n < 1:
        raise InvalidParameter("n must be a positive integer")
    x = Fraction(x)
    if x != 0 and vp(x, p) < 0:
        raise NotPIntegral(f"{x} has {p} in its denominator")
    if n > 1 and x not in _LIU_SET:
        raise HypothesisViolation("for n > 1, x must be one of 1/2, 1/3, 1/4, 1/6")
    lhs = sum(binom_rational(-x, k) * binom_rational(x - 1, k) for k in range(p * n))
    short = sum(binom_rational(-x, k) * binom_rational(x - 1, k) for k in range(n))
    sign = (-1) ** least_residue(-x, p)
    return _instance(p, 2, lhs, sign * short)


@dataclass(frozen=True)
class DworkPadicReport:
    """Valuation certificate for the prime-power binomial-sum congruence."""

    prime: int
    r: int
    m: int
    s: int
    diff_valuation: int | None  # None encodes +infinity (zero difference)
    w_valuation: int | None
    binom_inverse_valuation: int
    passed: bool


def check_dwork_padic(p: int, r: int, m: int, s: int) -> DworkPadicReport:
    """Check the q -> 1 specialization at prime p:

    the two truncations of sum_k C(-s/m,k) C(-(m-s)/m,k) at p^r and p^(r-1)
    terms differ, after the sign (-1)^<(-s/m)>_p, by a multiple of p^(2r);
    dividing further by p^(2r) C(-s/m, p^(r-1)) C(-(m-s)/m, p^(r-1)) still
    leaves a p-adic integer.  Requires s < m, gcd(m, p) = 1, p = 1 (mod m).
    """
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    if r < 2:
        raise InvalidParameter("r must be at least 2")
    if not 0 < s < m:
        raise InvalidParameter("need positive s < m")
    if math.gcd(m, p) != 1:
        raise InvalidParameter("p must not divide m")
    if p % m != 1:
        raise InvalidParameter("p must be congruent to 1 mod m")
    a = Fraction(-s, m)
    b = Fraction(-(m - s), m)

    def partial(terms: int) -> Fraction:
        acc = Fraction(0)
        ta = Fraction(1)
        tb = Fraction(1)
        for k in range(terms):
            acc += ta * tb
            ta *= (a - k) / (k + 1)
            tb *= (b - k) / (k + 1)
        return acc

    sign = (-1) ** least_residue(a, p)
    diff = partial(p ** r) - sign * partial(p ** (r - 1))
    bb = binom_rational(a, p ** (r - 1)) * binom_rational(b, p ** (r - 1))
    inv_val = vp(1 / bb, p)
    w = diff / (p ** (2 * r) * bb)
    diff_val = None if diff == 0 else vp(diff, p)
    w_val = None if w == 0 else vp(w, p)
    passed = (diff_val is None or diff_val >= 2 * r) and (w_val is None or w_val >= 0)
    return DworkPadicReport(
        prime=p, r=r, m=m, s=s,
        diff_valuation=diff_val, w_valuation=w_val,
        binom_inverse_valuation=inv_val, passed=passed,
    )
