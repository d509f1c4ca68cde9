"""Internal accumulator for sums whose denominators stay in factored form.

Every binomial-in-q factor arising here is, up to sign and a power of q, a
product of cyclotomic polynomials:

    1 - q^t    = -(q^t - 1) = -prod_{d | t} Phi_d(q)        (t > 0)
    1 - q^(-t) = (q^t - 1) / q^t                            (t > 0)
    1 + q^t    = prod_{d | 2t, d not | t} Phi_d(q)          (t > 0)

A sum is therefore carried as  content * num(q) / (prod Phi_d^e * q^j) with
num an integer-coefficient polynomial and the denominator a multiset of
cyclotomic indices.  Common denominators are computed by multiset merge, and
the final reduction cancels candidate cyclotomic factors by exact division,
screened by an integer divisibility test at q = 2^B: a polynomial divisor
always divides the evaluated value, so a nonzero integer remainder is an
exact and cheap "not divisible".
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from . import _intpoly
from .errors import NonExactDivision
from .polyring import Poly, cyclotomic_coeffs, divisors
from .ratfun import RatFun


class Factored:
    """A fully factored value: scalar * prod Phi_d(q)^e * q^j (scalar 0 = zero)."""

    __slots__ = ("scalar", "factors", "qpow")

    def __init__(self):
        self.scalar = Fraction(1)
        self.factors: dict[int, int] = {}
        self.qpow = 0

    @property
    def is_zero(self) -> bool:
        return self.scalar == 0

    def set_zero(self) -> "Factored":
        self.scalar = Fraction(0)
        self.factors.clear()
        self.qpow = 0
        return self

    def _bump(self, d: int, e: int) -> None:
        new = self.factors.get(d, 0) + e
        if new:
            self.factors[d] = new
        else:
            self.factors.pop(d, None)

    def times_scalar(self, c) -> "Factored":
        if self.is_zero:
            return self
        self.scalar *= c
        if self.scalar == 0:
            self.set_zero()
        return self

    def times_qpow(self, j: int) -> "Factored":
        if not self.is_zero:
            self.qpow += j
        return self

    def times_one_minus_q(self, t: int, power: int = 1) -> "Factored":
        """Multiply by (1 - q^t)^power, t any integer; t = 0 makes the value 0."""
        if self.is_zero:
            return self
        if t == 0:
            if power < 0:
                raise ZeroDivisionError("division by 1 - q^0")
            return self.set_zero()
        if t > 0:
            if power % 2:
                self.scalar = -self.scalar
            for d in divisors(t):
                self._bump(d, power)
        else:
            for d in divisors(-t):
                self._bump(d, power)
            self.qpow -= (-t) * power
        return self

    def times_one_plus_q(self, t: int, power: int = 1) -> "Factored":
        """Multiply by (1 + q^t)^power; t = 0 contributes the scalar 2."""
        if self.is_zero:
            return self
        if t == 0:
            return self.times_scalar(Fraction(2) ** power)
        if t < 0:
            # 1 + q^(-t') = (q^t' + 1) / q^t'
            self.qpow -= (-t) * power
            t = -t
        keep = set(divisors(t))
        for d in divisors(2 * t):
            if d not in keep:
                self._bump(d, power)
        return self

    def to_sum(self) -> "FactoredSum":
        s = FactoredSum()
        if self.is_zero:
            return s
        num_factors = {d: e for d, e in self.factors.items() if e > 0}
        s.content = self.scalar
        s.num = _intpoly.shift(_expand(num_factors), max(self.qpow, 0))
        s.den = {d: -e for d, e in self.factors.items() if e < 0}
        s.qden = max(-self.qpow, 0)
        return s

    def to_ratfun(self) -> RatFun:
        return self.to_sum().to_ratfun()[0]


def _expand(factors: dict[int, int]) -> list[int]:
    polys: list[list[int]] = []
    for d, e in factors.items():
        polys.extend([cyclotomic_coeffs(d)] * e)
    return _intpoly.mul_many(polys)


def _eval_at_2(c: list[int]) -> int:
    """Exact integer value of the polynomial at q = 2 (Horner)."""
    acc = 0
    for x in reversed(c):
        acc = (acc << 1) + x
    return acc


class FactoredSum:
    """Accumulated sum: content * num / (prod Phi_d^den[d] * q^qden)."""

    __slots__ = ("content", "num", "den", "qden")

    def __init__(self):
        self.content = Fraction(0)
        self.num: list[int] = []
        self.den: dict[int, int] = {}
        self.qden = 0

    @property
    def is_zero(self) -> bool:
        return not self.num

    def copy(self) -> "FactoredSum":
        s = FactoredSum()
        s.content = self.content
        s.num = self.num[:]
        s.den = dict(self.den)
        s.qden = self.qden
        return s

    def iadd(self, other: "FactoredSum", scale: Fraction = Fraction(1)) -> "FactoredSum":
        """self += scale * other, denominators merged by multiset max."""
        if other.is_zero or scale == 0:
            return self
        oc = other.content * scale
        if self.is_zero:
            self.content = oc
            self.num = other.num[:]
            self.den = dict(other.den)
            self.qden = other.qden
            return self
        den = dict(self.den)
        for d, e in other.den.items():
            if den.get(d, 0) < e:
                den[d] = e
        qden = max(self.qden, other.qden)
        cof_self = {d: e - self.den.get(d, 0) for d, e in den.items() if e > self.den.get(d, 0)}
        cof_other = {d: e - other.den.get(d, 0) for d, e in den.items() if e > other.den.get(d, 0)}
        a = _intpoly.shift(_intpoly.mul(self.num, _expand(cof_self)), qden - self.qden)
        b = _intpoly.shift(_intpoly.mul(other.num, _expand(cof_other)), qden - other.qden)
        c = Fraction(gcd(self.content.numerator, oc.numerator),
                     lcm(self.content.denominator, oc.denominator))
        ma = int(self.content / c)
        mb = int(oc / c)
        self.num = _intpoly.add(_intpoly.scale(a, ma), _intpoly.scale(b, mb))
        self.content = c
        self.den = den
        self.qden = qden
        if not self.num:
            self.content = Fraction(0)
            self.den = {}
            self.qden = 0
        return self

    def to_ratfun(self) -> tuple[RatFun, dict[int, int]]:
        """Canonical reduced RatFun plus the residual denominator factor multiset.

        The residual multiset {d: e} is the exact factorization of the returned
        denominator (up to the power of q), useful for coprimality questions.
        """
        if self.is_zero:
            return RatFun._reduced(Poly(), Poly.const(1)), {}
        num = self.num[:]
        qden = self.qden
        tz = 0
        while num[tz] == 0:
            tz += 1
        k = min(tz, qden)
        if k:
            num = num[k:]
            qden -= k
        g, num = _intpoly.primitive(num)
        content = self.content * g
        # Cancel cyclotomic candidates.  phi | num over Z implies phi(2) | num(2)
        # over the integers, so the cheap value test screens out non-divisors;
        # exact division confirms, and a successful division updates the value
        # by plain integer division since num(2) = phi(2) * quotient(2).
        val = _eval_at_2(num)
        den: dict[int, int] = {}
        for d in sorted(self.den):
            e = self.den[d]
            phi = cyclotomic_coeffs(d)
            phival = _eval_at_2(phi)
            while e > 0 and len(num) >= len(phi):
                if val % phival:
                    break
                try:
                    num = _intpoly.divexact(num, phi)
                except NonExactDivision:
                    break
                val //= phival
                e -= 1
            if e:
                den[d] = e
        den_poly = _intpoly.shift(_expand(den), qden)
        num_poly = Poly._from_ints(num) * content if content != 1 else Poly._from_ints(num)
        residual = dict(den)
        if qden:
            residual[0] = qden  # power of q recorded under index 0
        return RatFun._reduced(num_poly, Poly._from_ints(den_poly)), residual
