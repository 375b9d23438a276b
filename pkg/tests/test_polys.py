"""Polynomial arithmetic over prime and extension coefficient fields."""

import random

import pytest

from nbtower.errors import ZeroInverse
from nbtower.fields import PrimeModulus
from nbtower.polys import Poly, iter_monic

F5 = PrimeModulus(5)


def P(*coeffs):
    return Poly(F5, coeffs)


def test_normalization_strips_trailing_zeros():
    assert P(1, 2, 0, 0).degree == 1
    assert P(0, 0).is_zero()
    assert Poly.zero(F5).degree == -1


def test_add_sub_mul():
    a = P(1, 2, 3)
    b = P(4, 1)
    assert a + b == P(0, 3, 3)
    assert a - b == P(2, 1, 3)
    assert a * b == P(4, 4, 4, 3)
    assert a * Poly.zero(F5) == Poly.zero(F5)


def test_divmod_roundtrip():
    rng = random.Random(3)
    for _ in range(50):
        a = Poly(F5, [rng.randrange(5) for _ in range(rng.randrange(1, 8))])
        b = Poly(F5, [rng.randrange(5) for _ in range(rng.randrange(1, 5))])
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_gcd_and_egcd():
    a = P(1, 1) * P(2, 1) * P(3, 1)
    b = P(1, 1) * P(4, 1)
    g = a.gcd(b)
    assert g == P(1, 1)
    d, s, t = a.egcd(b)
    assert d == g
    assert s * a + t * b == d


def test_invert_mod():
    modulus = P(3, 0, 1)  # x^2 + 3, irreducible over GF(5)
    a = P(1, 1)
    inv = a.invert_mod(modulus)
    assert (a * inv) % modulus == Poly.one(F5)
    with pytest.raises(ZeroInverse):
        Poly.zero(F5).invert_mod(modulus)


def test_powmod_matches_naive():
    modulus = P(3, 0, 1)
    a = P(2, 1)
    naive = Poly.one(F5)
    for _ in range(13):
        naive = (naive * a) % modulus
    assert a.powmod(13, modulus) == naive


def test_compose_and_shift():
    f = P(1, 0, 1)          # x^2 + 1
    g = P(2, 1)             # x + 2
    assert f.compose(g) == P(0, 4, 1)   # (x+2)^2 + 1 = x^2 + 4x + 5
    assert f.shifted(2) == f.compose(g)


def test_reversal():
    f = P(2, 0, 1, 1)       # x^3 + x^2 + 2
    rev = f.reversed_poly()
    assert rev == P(1, 1, 0, 2)
    assert rev.monic().is_monic()


def test_evaluate_in_extension(f4):
    f = Poly(PrimeModulus(2), [1, 1, 1])
    beta = f4.generator()
    assert f.evaluate(beta).is_zero()
    assert not f.evaluate(f4.one()).is_zero()


def test_extension_coefficients(f4):
    beta = f4.generator()
    a = Poly(f4, [beta, f4.one()])
    b = Poly(f4, [beta + f4.one(), f4.one()])
    prod = a * b
    assert prod.degree == 2
    # (x + beta)(x + beta + 1) = x^2 + x + beta^2 + beta = x^2 + x + 1
    assert prod == Poly(f4, [f4.one(), f4.one(), f4.one()])


def test_iter_monic_enumerates_all():
    polys = list(iter_monic(PrimeModulus(3), 2))
    assert len(polys) == 9
    assert all(f.is_monic() and f.degree == 2 for f in polys)
