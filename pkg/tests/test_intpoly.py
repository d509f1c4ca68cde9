"""Cross-checks of the integer polynomial kernels against naive references."""

import random

import pytest

from qdwork import _intpoly as ip
from qdwork.errors import DivisionByZero, NonExactDivision


def ref_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return ip.trim(out)


def rand_poly(rng, max_len, max_bits):
    n = rng.randrange(max_len + 1)
    return ip.trim([rng.randrange(-(1 << max_bits), 1 << max_bits) for _ in range(n)])


def test_pack_unpack_roundtrip():
    rng = random.Random(7)
    for _ in range(50):
        coeffs = [rng.randrange(-(1 << 60), 1 << 60) for _ in range(rng.randrange(1, 40))]
        bits = 72
        assert ip._unpack(ip._pack(coeffs, bits), bits, len(coeffs)) == coeffs


def test_kronecker_mul_matches_schoolbook():
    rng = random.Random(11)
    for _ in range(40):
        a = rand_poly(rng, 120, 90)
        b = rand_poly(rng, 120, 90)
        assert ip.mul(a, b) == ref_mul(a, b)


def test_mul_edge_cases():
    assert ip.mul([], [1, 2]) == []
    assert ip.mul([3], [4]) == [12]
    assert ip.mul([0, 1], [0, 1]) == [0, 0, 1]


def test_mul_many_balanced_product():
    rng = random.Random(3)
    polys = [rand_poly(rng, 6, 8) or [1] for _ in range(9)]
    expected = [1]
    for p in polys:
        expected = ref_mul(expected, p)
    assert ip.mul_many(polys) == expected
    assert ip.mul_many([]) == [1]


def test_divexact_recovers_factor():
    rng = random.Random(23)
    for _ in range(30):
        b = rand_poly(rng, 30, 40)
        if not b:
            continue
        quot = rand_poly(rng, 40, 40)
        if not quot:
            continue
        a = ref_mul(b, quot)
        assert ip.divexact(a, b) == quot


def test_divexact_kronecker_path():
    # dividend long enough to hit the packed-integer route
    rng = random.Random(29)
    b = ip.trim([rng.randrange(-50, 50) for _ in range(37)] + [1])
    quot = ip.trim([rng.randrange(-50, 50) for _ in range(300)] + [1])
    a = ref_mul(b, quot)
    assert len(a) >= 4 * ip._SCHOOLBOOK_CUTOFF
    assert ip.divexact(a, b) == quot
    with pytest.raises(NonExactDivision):
        ip.divexact(ip.add(a, [1]), b)


def test_divexact_errors():
    with pytest.raises(DivisionByZero):
        ip.divexact([1, 1], [])
    with pytest.raises(NonExactDivision):
        ip.divexact([1, 0, 1], [-1, 1])  # q^2 + 1 by q - 1 leaves remainder 2
    with pytest.raises(NonExactDivision):
        ip.divexact([1], [1, 1])


def ref_gcd_monic_euclid(a, b):
    """Rational monic Euclid, the independent reference for the PRS gcd."""
    from fractions import Fraction

    def divmod_q(f, g):
        f = [Fraction(x) for x in f]
        g = [Fraction(x) for x in g]
        while len(f) >= len(g) and any(f):
            c = f[-1] / g[-1]
            k = len(f) - len(g)
            for j in range(len(g)):
                f[k + j] -= c * g[j]
            while f and f[-1] == 0:
                f.pop()
        return f

    fa, fb = a[:], b[:]
    while fb:
        fa, fb = fb, divmod_q(fa, fb)
    return fa


def test_gcd_matches_monic_euclid():
    from fractions import Fraction

    rng = random.Random(31)
    for _ in range(25):
        g = rand_poly(rng, 6, 6) or [1]
        x = rand_poly(rng, 8, 6) or [1]
        y = rand_poly(rng, 8, 6) or [1]
        a, b = ref_mul(g, x), ref_mul(g, y)
        if not a or not b:
            continue
        got = ip.gcd(a, b)
        ref = ref_gcd_monic_euclid(a, b)
        lead = Fraction(ref[-1])
        ref_monic = [Fraction(c) / lead for c in ref]
        got_monic = [Fraction(c, got[-1]) for c in got]
        assert got_monic == ref_monic


def test_gcd_divides_both():
    rng = random.Random(37)
    for _ in range(25):
        a = rand_poly(rng, 18, 12)
        b = rand_poly(rng, 18, 12)
        if not a and not b:
            continue
        g = ip.gcd(a, b)
        for p in (a, b):
            if p:
                ip.divexact(p, g)  # a primitive gcd divides over Z; raises if not


def test_primitive_and_content():
    assert ip.primitive([4, -8, 12]) == (4, [1, -2, 3])
    assert ip.primitive([-2, -4]) == (-2, [1, 2])
    assert ip.primitive([]) == (0, [])
    assert ip.content([6, 10, 15]) == 1
