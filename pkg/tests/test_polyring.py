"""Polynomials over Q: arithmetic, exact division, gcd, cyclotomics."""

import random
from fractions import Fraction
from math import gcd as int_gcd

import pytest

from qdwork.errors import BothZero, DivisionByZero, InvalidParameter, NonExactDivision
from qdwork.polyring import (
    Poly,
    cyclotomic,
    divisors,
    poly_divrem_exact,
    poly_eval,
    poly_gcd,
    poly_mul,
    q,
)


def totient(n):
    return sum(1 for k in range(1, n + 1) if int_gcd(k, n) == 1)


def euclid_gcd_oracle(a, b):
    """Plain monic Euclid over Q, independent of the library's gcd."""
    while not b.is_zero:
        _, r = a.divrem(b)
        a, b = b, r
    return a.monic()


def rand_poly(rng, max_deg=8, max_c=9):
    return Poly([rng.randint(-max_c, max_c) for _ in range(rng.randrange(max_deg + 1))])


# -- multiplication ------------------------------------------------------------


def test_mul_difference_of_squares():
    assert (q - 1) * (q + 1) == q**2 - 1


def test_mul_geometric_telescope():
    assert (1 + q + q**2) * (1 - q) == 1 - q**3


def test_mul_product_over_divisors_of_nine():
    # multiply out and compare coefficient lists
    assert cyclotomic(1) * cyclotomic(3) * cyclotomic(9) == q**9 - 1


def test_mul_commutative_associative():
    rng = random.Random(5)
    for _ in range(30):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert poly_mul(a, b) == poly_mul(b, a)
        assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))


def test_mul_rational_coefficients():
    h = Poly([Fraction(1, 2), 1])
    assert h * Poly([2]) == Poly([1, 2])
    assert h * h == Poly([Fraction(1, 4), 1, 1])


# -- exact division -----------------------------------------------------------


def test_div_exact_geometric_sum():
    assert poly_divrem_exact(q**3 - 1, q - 1) == q**2 + q + 1


def test_div_exact_linear():
    assert poly_divrem_exact(q**2 - 1, q + 1) == q - 1


def test_div_exact_remainder_two():
    with pytest.raises(NonExactDivision):
        poly_divrem_exact(q**2 + 1, q - 1)


def test_div_by_zero():
    with pytest.raises(DivisionByZero):
        poly_divrem_exact(q, Poly())


def test_divrem_generic():
    quo, rem = (q**3 + 2 * q + 1).divrem(q**2 + 1)
    assert quo == q and rem == q + 1
    assert quo * (q**2 + 1) + rem == q**3 + 2 * q + 1


# -- gcd ----------------------------------------------------------------------


def test_gcd_common_root():
    assert poly_gcd(q**2 - 1, q**3 - 1) == q - 1


def test_gcd_distinct_cyclotomics_with_oracle():
    got = poly_gcd(cyclotomic(3), cyclotomic(9))
    assert got == Poly.const(1)
    assert euclid_gcd_oracle(cyclotomic(3), cyclotomic(9)) == Poly.const(1)


def test_gcd_monic_normalization():
    assert poly_gcd(Poly(), 2 * q + 2) == q + 1


def test_gcd_both_zero():
    with pytest.raises(BothZero):
        poly_gcd(Poly(), Poly())


def test_gcd_divides_both_and_is_monic():
    rng = random.Random(13)
    for _ in range(30):
        a, b = rand_poly(rng), rand_poly(rng)
        if a.is_zero and b.is_zero:
            continue
        g = poly_gcd(a, b)
        assert g.is_monic
        for p in (a, b):
            if not p.is_zero:
                poly_divrem_exact(p, g)


def test_gcd_matches_euclid_oracle():
    rng = random.Random(17)
    for _ in range(25):
        g0 = rand_poly(rng, 4)
        a = rand_poly(rng, 5) * g0
        b = rand_poly(rng, 5) * g0
        if a.is_zero or b.is_zero:
            continue
        assert poly_gcd(a, b) == euclid_gcd_oracle(a, b)


# -- evaluation -----------------------------------------------------------------


def test_eval_cyclotomic_at_one():
    assert poly_eval(cyclotomic(9), 1) == 3
    assert poly_eval(cyclotomic(6), 1) == 1


def test_eval_integer_point():
    assert poly_eval(q**2 - 1, 3) == 8


def test_eval_rational_point():
    assert poly_eval(2 * q + 1, Fraction(1, 2)) == 2


# -- cyclotomic construction ------------------------------------------------------


def test_cyclotomic_small_indices():
    assert cyclotomic(1) == q - 1
    assert cyclotomic(2) == q + 1
    assert cyclotomic(9) == q**6 + q**3 + 1


def test_cyclotomic_nine_by_division_oracle():
    # divide q^9 - 1 by Phi_1 * Phi_3 with a local schoolbook division
    num = list((q**9 - 1).coeffs)
    den = list(((q - 1) * (q**2 + q + 1)).coeffs)
    quo = [0] * (len(num) - len(den) + 1)
    for k in range(len(quo) - 1, -1, -1):
        c = num[k + len(den) - 1]
        quo[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    assert not any(num)
    assert cyclotomic(9) == Poly(quo)


def test_cyclotomic_invalid_index():
    with pytest.raises(InvalidParameter):
        cyclotomic(0)


def test_cyclotomic_degree_is_totient():
    for n in range(1, 60):
        assert cyclotomic(n).degree == totient(n)


def test_cyclotomic_matches_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    for n in list(range(1, 31)) + [105]:  # 105 is the first index with a +-2 coefficient
        ours = cyclotomic(n)
        theirs = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        assert list(ours.coeffs) == [int(c) for c in theirs]


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]


# -- printing -------------------------------------------------------------------


def test_str_golden_forms():
    assert str(cyclotomic(9)) == "q^6 + q^3 + 1"
    assert str(q - 1) == "q - 1"
    assert str(q + 1) == "q + 1"
    assert str(cyclotomic(6)) == "q^2 - q + 1"
    assert str(Poly()) == "0"
    assert str(2 * q**2 - 1) == "2q^2 - 1"
    assert str(Poly([Fraction(1, 2), 0, Fraction(3, 2)])) == "(3/2)q^2 + 1/2"
    assert str(-q) == "-q"


def test_repr():
    assert repr(q + 1) == "Poly('q + 1')"


# -- structural invariants ---------------------------------------------------------


def test_trailing_zeros_trimmed_and_degree():
    p = Poly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Poly().degree == -1


def test_fraction_coefficients_normalized_to_int():
    p = Poly([Fraction(4, 2), Fraction(3, 2)])
    assert p.coeffs == (2, Fraction(3, 2))
    assert isinstance(p.coeffs[0], int)


def test_immutability():
    with pytest.raises(AttributeError):
        q._c = ()
