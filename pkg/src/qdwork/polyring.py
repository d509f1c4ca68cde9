"""Dense univariate polynomials in q over exact rationals, plus cyclotomics.

The coefficient domain is `fractions.Fraction` (arbitrary precision, always
reduced, positive denominator); integer coefficients are stored as plain
ints.  There is no floating point anywhere in this package.

>>> from qdwork.polyring import Poly, q, cyclotomic
>>> (q - 1) * (q + 1)
Poly('q^2 - 1')
>>> cyclotomic(9)
Poly('q^6 + q^3 + 1')
>>> cyclotomic(9)(1)
Fraction(3, 1)
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Union

from . import _intpoly
from .errors import BothZero, DivisionByZero, InvalidParameter, NonExactDivision

Rational = Fraction
Coefficient = Union[int, Fraction]


def _norm_coeff(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class Poly:
    """Immutable dense polynomial; index i holds the coefficient of q^i."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        c = [_norm_coeff(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "_c", tuple(c))

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def const(c: Coefficient) -> "Poly":
        return Poly((c,))

    @staticmethod
    def monomial(k: int, c: Coefficient = 1) -> "Poly":
        if k < 0:
            raise InvalidParameter("monomial exponent must be nonnegative")
        return Poly([0] * k + [c])

    @staticmethod
    def _from_ints(c: list[int]) -> "Poly":
        p = Poly.__new__(Poly)
        object.__setattr__(p, "_c", tuple(c))
        return p

    # -- basic queries ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Coefficient, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading(self) -> Coefficient:
        if not self._c:
            raise InvalidParameter("zero polynomial has no leading coefficient")
        return self._c[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def coeff(self, i: int) -> Coefficient:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def _all_int(self) -> bool:
        return all(isinstance(x, int) for x in self._c)

    def _ints(self) -> list[int]:
        return list(self._c)  # only valid when _all_int()

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __neg__(self) -> "Poly":
        return Poly([-x for x in self._c])

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = _norm_coeff(other)
            if other == 0:
                return Poly()
            return Poly([x * other for x in self._c])
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        if self._all_int() and other._all_int():
            return Poly._from_ints(_intpoly.mul(self._ints(), other._ints()))
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, x in enumerate(self._c):
            if x:
                for j, y in enumerate(other._c):
                    if y:
                        out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise InvalidParameter("negative polynomial power")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def divrem(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Quotient and remainder over the rationals."""
        other = _coerce(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        if self.degree < other.degree:
            return Poly(), self
        r = [Fraction(x) for x in self._c]
        b = other._c
        lb = Fraction(b[-1])
        db = len(b) - 1
        quot = [Fraction(0)] * (len(r) - db)
        for k in range(len(quot) - 1, -1, -1):
            c = r[k + db]
            if c:
                t = c / lb
                quot[k] = t
                for j in range(db):
                    if b[j]:
                        r[k + j] -= t * b[j]
        return Poly(quot), Poly(r[:db])

    def div_exact(self, other: "Poly") -> "Poly":
        """Exact quotient; NonExactDivision when the remainder is nonzero."""
        other = _coerce(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        if self.is_zero:
            return Poly()
        if self._all_int() and other._all_int():
            return Poly._from_ints(_intpoly.divexact(self._ints(), other._ints()))
        q, r = self.divrem(other)
        if not r.is_zero:
            raise NonExactDivision("nonzero remainder")
        return q

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor over the rationals."""
        other = _coerce(other)
        if self.is_zero and other.is_zero:
            raise BothZero("gcd(0, 0) is undefined")
        if self.is_zero:
            return other.monic()
        if other.is_zero:
            return self.monic()
        if self.degree == 0 or other.degree == 0:
            return Poly.const(1)
        if min(self.degree, other.degree) <= 32:
            # short Euclidean chain over Q; cheaper than a pseudo-remainder
            # sequence when one side is small
            a, b = self, other
            while not b.is_zero:
                _, r = a.divrem(b)
                a, b = b, r
            return a.monic()
        g = _intpoly.gcd(_clear_denominators(self), _clear_denominators(other))
        return Poly._from_ints(g).monic()

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lc = self._c[-1]
        if lc == 1:
            return self
        return Poly([Fraction(x, 1) / lc for x in self._c])

    def shift(self, j: int) -> "Poly":
        """Multiply by q^j (j >= 0)."""
        if j < 0:
            raise InvalidParameter("shift exponent must be nonnegative")
        if self.is_zero:
            return self
        return Poly([0] * j + list(self._c))

    def __call__(self, x: Coefficient) -> Fraction:
        """Exact evaluation at a rational point (Horner)."""
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    # -- comparisons and formatting ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __str__(self) -> str:
        """Descending powers, explicit q^k monomials, spaces around signs.

        >>> str(Poly((1, 0, 0, 1, 0, 0, 1)))
        'q^6 + q^3 + 1'
        >>> str(Poly((-1, 1)))
        'q - 1'
        """
        if not self._c:
            return "0"
        parts: list[str] = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                body = _coeff_str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{_coeff_str(mag)}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly('{self}')"


def _coeff_str(c: Coefficient) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"({c})"
    return str(c)


def _coerce(x) -> "Poly":
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    return NotImplemented


def _clear_denominators(p: Poly) -> list[int]:
    if p._all_int():
        return p._ints()
    m = lcm(*(c.denominator for c in p._c if isinstance(c, Fraction)))
    return [int(c * m) for c in p._c]


#: the indeterminate
q = Poly((0, 1))
one = Poly((1,))
zero = Poly()


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_divrem_exact(a: Poly, b: Poly) -> Poly:
    return a.div_exact(b)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    return a.gcd(b)


def poly_eval(a: Poly, x: Coefficient) -> Fraction:
    return a(x)


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


_cyclo_cache: dict[int, list[int]] = {1: [-1, 1]}


def cyclotomic_coeffs(n: int) -> list[int]:
    """Integer coefficient list of the n-th cyclotomic polynomial."""
    if n < 1:
        raise InvalidParameter("cyclotomic index must be a positive integer")
    cached = _cyclo_cache.get(n)
    if cached is not None:
        return cached
    # q^n - 1 divided by the product of all lower cyclotomic factors; exact
    # division only, no numerics.
    rest = _intpoly.mul_many([cyclotomic_coeffs(d) for d in divisors(n)[:-1]])
    xn1 = [-1] + [0] * (n - 1) + [1]
    res = _intpoly.divexact(xn1, rest)
    _cyclo_cache[n] = res
    return res


def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial, monic of degree phi(n).

    >>> cyclotomic(1)
    Poly('q - 1')
    >>> cyclotomic(12)
    Poly('q^4 - q^2 + 1')
    """
    return Poly._from_ints(cyclotomic_coeffs(n))
