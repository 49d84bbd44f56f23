"""Binary-polynomial arithmetic, factoring, and maximal-order enumeration."""

import random

import pytest
from util import (
    ref_factorize,
    ref_is_irreducible,
    ref_mod,
    ref_mul,
    ref_order_of_x,
)

from prcodes.errors import UnsupportedRangeError
from prcodes.gf2 import (
    BitPoly,
    enumerate_primitives,
    euler_phi,
    factorize,
    is_irreducible,
    is_primitive,
    poly_mul_mod,
)

X = BitPoly.parse("x")
ONE = BitPoly(1)


# ---------------------------------------------------------------------------
# parsing and formatting

def test_parse_hex_and_symbolic():
    assert BitPoly.parse("0x13").mask == 0x13
    assert BitPoly.parse("1+x+x^4").mask == 0x13
    assert BitPoly.parse("x^4 + x + 1").mask == 0x13
    assert BitPoly.parse(0x19).mask == 0x19
    assert BitPoly.parse("0x13").to_text() == "1+x+x^4"
    assert BitPoly.parse("1+x^3+x^4").to_hex() == "0x19"
    assert str(BitPoly(0)) == "0"
    assert BitPoly.parse("0x13").degree == 4
    assert BitPoly.parse("0x13").weight == 3


@pytest.mark.parametrize("bad", ["x^", "2x", "1+x+", "x**3", "x+x", "y+1", ""])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        BitPoly.parse(bad)


def test_parse_roundtrip_random():
    rng = random.Random(2024)
    for _ in range(200):
        p = BitPoly(rng.randrange(1, 1 << 20))
        assert BitPoly.parse(p.to_text()) == p
        assert BitPoly.parse(p.to_hex()) == p


def test_reciprocal():
    assert BitPoly.parse("0x13").reciprocal() == BitPoly.parse("0x19")
    assert BitPoly.parse("1+x+x^2").reciprocal() == BitPoly.parse("1+x+x^2")


def test_negative_mask_rejected():
    with pytest.raises(ValueError):
        BitPoly(-1)


# ---------------------------------------------------------------------------
# modular multiplication

def test_mul_mod_square_of_x():
    m = BitPoly.parse("1+x+x^2")
    assert poly_mul_mod(X, X, m) == BitPoly.parse("1+x")


def test_mul_mod_identity_element():
    m = BitPoly.parse("1+x+x^4")
    for mask in range(16):
        q = BitPoly(mask)
        assert poly_mul_mod(ONE, q, m) == q


def test_mul_mod_x2_squared():
    # long division of x^4 by x^4+x+1 leaves x+1
    m = BitPoly.parse("1+x+x^4")
    x2 = BitPoly.parse("x^2")
    assert poly_mul_mod(x2, x2, m) == BitPoly.parse("1+x")


def test_mul_mod_zero_modulus_rejected():
    with pytest.raises(ValueError):
        poly_mul_mod(X, X, BitPoly(0))
    with pytest.raises(ValueError):
        poly_mul_mod(X, X, ONE)


def test_mul_mod_commutes_and_associates():
    rng = random.Random(0xC0DE)
    for _ in range(1000):
        k = rng.randrange(2, 17)
        m = BitPoly((1 << k) | rng.randrange(1 << k) | 1)
        a = BitPoly(rng.randrange(1 << 17))
        b = BitPoly(rng.randrange(1 << 17))
        c = BitPoly(rng.randrange(1 << 17))
        ab = poly_mul_mod(a, b, m)
        assert ab == poly_mul_mod(b, a, m)
        assert ab.mask == ref_mod(ref_mul(a.mask, b.mask), m.mask)
        assert poly_mul_mod(ab, c, m) == poly_mul_mod(a, poly_mul_mod(b, c, m), m)


# ---------------------------------------------------------------------------
# factorization

def test_factorize_examples():
    assert factorize(15) == {3: 1, 5: 1}
    assert factorize(255) == {3: 1, 5: 1, 17: 1}
    assert factorize(1) == {}
    assert factorize(2) == {2: 1}


def test_factorize_zero_rejected():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_against_trial_division():
    rng = random.Random(99)
    for _ in range(200):
        v = rng.randrange(2, 10**6)
        assert factorize(v) == ref_factorize(v)


def test_factorize_large_inputs():
    m61 = (1 << 61) - 1
    assert factorize(m61) == {m61: 1}
    m31 = (1 << 31) - 1
    assert factorize(m31 * m31) == {m31: 2}
    for k in (24, 32, 40):
        v = (1 << k) - 1
        fac = factorize(v)
        prod = 1
        for p, e in fac.items():
            assert ref_factorize(p) == {p: 1}, f"{p} is not prime"
            prod *= p**e
        assert prod == v


def test_euler_phi():
    assert euler_phi(1) == 1
    assert euler_phi(15) == 8
    assert euler_phi(255) == 128
    assert euler_phi(2**15 - 1) == 27000


# ---------------------------------------------------------------------------
# primitivity

def test_primitive_known_generators():
    assert is_primitive(BitPoly.parse("1+x+x^4"))
    assert is_primitive(BitPoly.parse("1+x^2+x^3+x^5+x^8"))
    assert is_primitive(BitPoly.parse("1+x^2+x^3+x^4+x^5+x^8+x^11"))


def test_irreducible_but_not_primitive():
    p = BitPoly.parse("1+x+x^2+x^3+x^4")
    assert is_irreducible(p)
    assert not is_primitive(p)
    # x only has order 5, not 15, in the quotient ring
    assert ref_order_of_x(p.mask, 30) == 5


def test_is_primitive_rejects_bad_inputs():
    with pytest.raises(ValueError):
        is_primitive(BitPoly.parse("x^2+x"))  # constant term 0
    with pytest.raises(ValueError):
        is_primitive(BitPoly.parse("1+x"))  # degree 1


def test_primitive_implies_irreducible():
    for k in range(2, 13):
        for p in enumerate_primitives(k):
            assert ref_is_irreducible(p.mask)


def test_order_oracle_agrees():
    # every enumerated degree-k polynomial gives x order 2^k - 1, and
    # rejected irreducibles give a strictly smaller order
    for k in (2, 3, 4, 5, 6):
        full = (1 << k) - 1
        prims = set(p.mask for p in enumerate_primitives(k))
        for mid in range(1 << (k - 1)):
            mask = (1 << k) | (mid << 1) | 1
            order = ref_order_of_x(mask, full)
            if mask in prims:
                assert order == full
            else:
                assert order != full


# ---------------------------------------------------------------------------
# enumeration

def test_enumerate_smallest_degrees():
    assert [p.mask for p in enumerate_primitives(2)] == [0b111]
    assert [p.to_hex() for p in enumerate_primitives(4)] == ["0x13", "0x19"]


def test_enumerate_counts_match_totient():
    for k in range(2, 13):
        count = len(enumerate_primitives(k))
        assert count == euler_phi(2**k - 1) // k, f"k={k}"


@pytest.mark.slow
def test_enumerate_counts_match_totient_high():
    for k in range(13, 17):
        count = len(enumerate_primitives(k))
        assert count == euler_phi(2**k - 1) // k, f"k={k}"


def test_enumerate_sorted_and_reciprocal_closed():
    for k in range(2, 11):
        polys = enumerate_primitives(k)
        masks = [p.mask for p in polys]
        assert masks == sorted(masks)
        as_set = set(masks)
        for p in polys:
            assert p.reciprocal().mask in as_set


def test_enumerate_cap():
    with pytest.raises(UnsupportedRangeError):
        enumerate_primitives(1)
    with pytest.raises(UnsupportedRangeError):
        enumerate_primitives(25)
