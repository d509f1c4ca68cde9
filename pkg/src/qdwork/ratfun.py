"""Canonical rational functions in q and congruence modulo a polynomial.

A RatFun is always kept in reduced form: gcd(num, den) = 1, den monic and
nonzero, zero represented as 0/1.  Congruence B = C (mod P) means P divides
the numerator of the reduced form of B - C, provided P is coprime to that
form's denominator; when it is not, the congruence notion does not apply
and `Congruence.NON_COPRIME_DENOMINATOR` is reported rather than False.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, InvalidModulus
from .polyring import Poly

_PolyLike = Union[Poly, int, Fraction]


class Congruence(enum.Enum):
    """Three-valued outcome of a rational-function congruence test."""

    TRUE = "true"
    FALSE = "false"
    NON_COPRIME_DENOMINATOR = "non-coprime-denominator"

    def __bool__(self) -> bool:
        return self is Congruence.TRUE


def _as_poly(x: _PolyLike) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly.const(x)


class RatFun:
    """Reduced rational function num/den with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: _PolyLike, den: _PolyLike = 1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero:
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero:
            num, den = Poly(), Poly.const(1)
        else:
            if den.degree > 0:
                g = num.gcd(den)
                if g.degree > 0:
                    num = num.div_exact(g)
                    den = den.div_exact(g)
            lc = den.leading
            if lc != 1:
                den = den.monic()
                num = num * (Fraction(1) / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("RatFun is immutable")

    @staticmethod
    def _reduced(num: Poly, den: Poly) -> "RatFun":
        """Trusted constructor: inputs already coprime with monic denominator."""
        r = RatFun.__new__(RatFun)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        return r

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def as_fraction(self) -> Fraction:
        """Value of a constant RatFun; InvalidModulus-free convenience."""
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        return Fraction(self.num.coeff(0))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        g = self.den.gcd(other.den) if not (self.den.degree == 0 and other.den.degree == 0) else Poly.const(1)
        if g.degree > 0:
            da = self.den.div_exact(g)
            db = other.den.div_exact(g)
            num = self.num * db + other.num * da
            den = da * other.den
        else:
            num = self.num * other.den + other.num * self.den
            den = self.den * other.den
        return RatFun(num, den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun._reduced(-self.num, self.den)

    def __sub__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFun":
        return (-self) + other

    def __mul__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFun._reduced(Poly(), Poly.const(1))
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1 = self.num.div_exact(g1) if g1.degree > 0 else self.num
        d2 = other.den.div_exact(g1) if g1.degree > 0 else other.den
        n2 = other.num.div_exact(g2) if g2.degree > 0 else other.num
        d1 = self.den.div_exact(g2) if g2.degree > 0 else self.den
        return RatFun(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise DivisionByZero("division by the zero rational function")
        return self * RatFun(other.den, other.num)

    def __rtruediv__(self, other) -> "RatFun":
        return _coerce(other) / self

    # -- comparisons and formatting -------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFun('{self}')"


def _coerce(x) -> "RatFun":
    if isinstance(x, RatFun):
        return x
    if isinstance(x, (Poly, int, Fraction)):
        return RatFun(_as_poly(x), Poly.const(1))
    return NotImplemented


def rf_new(num: Poly, den: Poly) -> RatFun:
    """Canonical reduced rational function num/den."""
    return RatFun(num, den)


def rf_arith(op: str, a: RatFun, b: RatFun) -> RatFun:
    """Field arithmetic dispatch: op in {'add', 'sub', 'mul', 'div'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_congruent(b: RatFun, c: RatFun, p: Poly) -> Congruence:
    """Does p divide the numerator of the reduced form of b - c?

    Returns NON_COPRIME_DENOMINATOR when gcd of that form's denominator with
    p is nonconstant, in which case the congruence notion does not apply.
    """
    if not isinstance(p, Poly):
        p = _as_poly(p)
    if p.is_zero or p.degree < 1:
        raise InvalidModulus("modulus must be a nonconstant polynomial")
    diff = b - c
    return congruence_of_reduced(diff, p)


def congruence_of_reduced(diff: RatFun, p: Poly) -> Congruence:
    """Congruence test for an already-reduced difference."""
    if p.is_zero or p.degree < 1:
        raise InvalidModulus("modulus must be a nonconstant polynomial")
    g = diff.den.gcd(p)
    if g.degree > 0:
        return Congruence.NON_COPRIME_DENOMINATOR
    if diff.is_zero:
        return Congruence.TRUE
    _, rem = diff.num.divrem(p)
    return Congruence.TRUE if rem.is_zero else Congruence.FALSE
