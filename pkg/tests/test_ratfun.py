"""Canonical rational functions and the congruence-mod-polynomial test."""

import random
from fractions import Fraction

import pytest

from qdwork.errors import DivisionByZero, InvalidModulus
from qdwork.polyring import Poly, cyclotomic, q
from qdwork.ratfun import Congruence, RatFun, rf_arith, rf_congruent, rf_new


def rand_ratfun(rng, dens):
    num = Poly([rng.randint(-5, 5) for _ in range(rng.randrange(5))])
    den = Poly.const(1)
    for _ in range(rng.randrange(3)):
        den = den * rng.choice(dens)
    return RatFun(num, den)


# -- canonical form -----------------------------------------------------------


def test_new_cancels_common_factor():
    r = rf_new(q**2 - 1, q - 1)
    assert r.num == q + 1 and r.den == Poly.const(1)


def test_new_content_normalization():
    r = rf_new(2 * q**2, Poly.const(2))
    assert r.num == q**2 and r.den == Poly.const(1)


def test_new_cancels_gcd_factor():
    r = rf_new(q**3 - 1, q**2 - 1)
    assert r.num == q**2 + q + 1 and r.den == q + 1


def test_new_zero_normal_form():
    r = rf_new(Poly(), 3 * q + 1)
    assert r.num == Poly() and r.den == Poly.const(1) and r.is_zero


def test_new_monic_denominator_scales_numerator():
    r = rf_new(q + 1, 2 * q)
    assert r.den == q and r.num == Poly([Fraction(1, 2), Fraction(1, 2)])


def test_new_zero_denominator():
    with pytest.raises(DivisionByZero):
        rf_new(q, Poly())


def test_new_idempotent():
    rng = random.Random(41)
    dens = [q + 1, q**2 + 1, q - 1, 2 * q + 2]
    for _ in range(30):
        x = rand_ratfun(rng, dens)
        assert rf_new(x.num, x.den) == x


# -- arithmetic -----------------------------------------------------------------


def test_add_same_denominator():
    a = RatFun(Poly.const(1), q + 1)
    b = RatFun(q, q + 1)
    assert a + b == RatFun(Poly.const(1))


def test_mul_cancels():
    a = RatFun(Poly.const(1), 1 - q)
    assert a * RatFun(1 - q**2) == RatFun(q + 1)


def test_sub_self_is_zero():
    rng = random.Random(43)
    dens = [q + 1, q**2 + q + 1, q - 1]
    for _ in range(20):
        x = rand_ratfun(rng, dens)
        assert (x - x).is_zero


def test_rf_arith_dispatch():
    a, b = RatFun(q), RatFun(q + 1)
    assert rf_arith("add", a, b) == a + b
    assert rf_arith("sub", a, b) == a - b
    assert rf_arith("mul", a, b) == a * b
    assert rf_arith("div", a, b) == a / b
    with pytest.raises(ValueError):
        rf_arith("pow", a, b)


def test_div_by_zero_ratfun():
    with pytest.raises(DivisionByZero):
        RatFun(q) / RatFun(0)


def test_field_identities():
    rng = random.Random(47)
    dens = [q + 1, q**2 + 1]
    for _ in range(20):
        a = rand_ratfun(rng, dens)
        b = rand_ratfun(rng, dens)
        assert a + b == b + a
        assert a * b == b * a
        if not b.is_zero:
            assert (a / b) * b == a


def test_constant_helpers():
    r = RatFun(Poly.const(Fraction(-3, 2)))
    assert r.is_constant()
    assert r.as_fraction() == Fraction(-3, 2)
    assert not RatFun(q).is_constant()


# -- congruence ----------------------------------------------------------------


def test_congruent_cyclotomic_numerator():
    b = RatFun(q**3 - 1, q - 1)
    assert rf_congruent(b, RatFun(0), cyclotomic(3)) is Congruence.TRUE


def test_congruent_non_coprime_denominator():
    b = RatFun(Poly.const(1), q + 1)
    assert rf_congruent(b, RatFun(0), q + 1) is Congruence.NON_COPRIME_DENOMINATOR


def test_congruent_quartic():
    assert rf_congruent(RatFun(q**4), RatFun(1), cyclotomic(4)) is Congruence.TRUE


def test_congruent_false():
    assert rf_congruent(RatFun(q), RatFun(1), cyclotomic(3)) is Congruence.FALSE


def test_congruence_truthiness():
    assert bool(Congruence.TRUE)
    assert not bool(Congruence.FALSE)
    assert not bool(Congruence.NON_COPRIME_DENOMINATOR)


def test_invalid_modulus():
    with pytest.raises(InvalidModulus):
        rf_congruent(RatFun(q), RatFun(0), Poly.const(5))
    with pytest.raises(InvalidModulus):
        rf_congruent(RatFun(q), RatFun(0), Poly())


def test_congruent_divisibility_monotonicity():
    # b = c (mod p*p') implies b = c (mod p)
    rng = random.Random(53)
    for _ in range(20):
        p = rng.choice([cyclotomic(3), cyclotomic(4), q - 1])
        pp = p * rng.choice([cyclotomic(5), q + 1])
        mult = Poly([rng.randint(-4, 4) for _ in range(rng.randrange(1, 4))])
        den = rng.choice([q**2 + q + 1, Poly.const(1), q**2 + 2])
        if den.gcd(pp).degree > 0:
            continue
        c = rand_ratfun(rng, [q**2 + 2])
        b = c + RatFun(pp * mult, den)
        assert rf_congruent(b, c, pp) is Congruence.TRUE
        assert rf_congruent(b, c, p) is Congruence.TRUE


def test_congruent_equivalence_relation():
    rng = random.Random(59)
    p = cyclotomic(5)
    coprime_dens = [q + 1, q**2 + 2, Poly.const(1)]
    for _ in range(15):
        b = rand_ratfun(rng, coprime_dens)
        x = Poly([rng.randint(-3, 3) for _ in range(rng.randrange(1, 3))])
        y = Poly([rng.randint(-3, 3) for _ in range(rng.randrange(1, 3))])
        c = b + RatFun(p * x, rng.choice(coprime_dens))
        d = c + RatFun(p * y, rng.choice(coprime_dens))
        assert rf_congruent(b, b, p) is Congruence.TRUE
        assert rf_congruent(b, c, p) is rf_congruent(c, b, p)
        assert rf_congruent(b, c, p) is Congruence.TRUE
        assert rf_congruent(c, d, p) is Congruence.TRUE
        assert rf_congruent(b, d, p) is Congruence.TRUE


def test_true_congruence_implies_coprime_denominator():
    # when the reduced difference U/V has p | U, gcd(V, p) = 1 automatically
    rng = random.Random(61)
    p = cyclotomic(3)
    for _ in range(15):
        c = rand_ratfun(rng, [q + 1, q**2 + 2])
        b = c + RatFun(p * Poly([1, rng.randint(-3, 3)]), q**2 + 2)
        if rf_congruent(b, c, p) is Congruence.TRUE:
            diff = b - c
            assert diff.den.gcd(p).degree == 0


def test_str():
    assert str(RatFun(q + 1)) == "q + 1"
    assert str(RatFun(q**2 + q + 1, q + 1)) == "(q^2 + q + 1)/(q + 1)"
