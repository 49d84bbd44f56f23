"""Arithmetic for binary polynomials packed into integer bitmasks.

Bit i of the mask holds the coefficient of x^i, so x^4 + x + 1 is the
integer 0b10011 = 0x13.  Two text formats are accepted and produced
everywhere in this package: hex masks ("0x13") and symbolic sums
("1+x+x^4").

Beyond the basic ring operations the module tests whether a polynomial
generates a maximum-length recurrence (the multiplicative order of x
modulo p equals 2^deg(p) - 1) and enumerates all such polynomials of a
given degree.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import UnsupportedRangeError

# Full enumeration of degree-k generators walks 2^(k-1) candidates; past
# this cap the walk is no longer an interactive-scale operation.
ENUMERATION_CAP = 24

_TERM_RE = re.compile(r"^(1|x|x\^(\d+))$")


@dataclass(frozen=True, order=True)
class BitPoly:
    """A polynomial over GF(2) stored as an integer bitmask."""

    mask: int

    def __post_init__(self):
        if self.mask < 0:
            raise ValueError("polynomial mask must be nonnegative")

    @classmethod
    def parse(cls, text: str | int) -> "BitPoly":
        """Build from an int, a hex mask like "0x13", or "1+x+x^4"."""
        if isinstance(text, int):
            return cls(text)
        s = text.strip().replace(" ", "")
        if s.lower().startswith("0x"):
            return cls(int(s, 16))
        mask = 0
        for term in s.split("+"):
            m = _TERM_RE.match(term)
            if m is None:
                raise ValueError(f"cannot parse polynomial term {term!r}")
            if term == "1":
                bit = 1
            elif term == "x":
                bit = 2
            else:
                bit = 1 << int(m.group(2))
            if mask & bit:
                raise ValueError(f"repeated term {term!r} in polynomial")
            mask |= bit
        return cls(mask)

    @property
    def degree(self) -> int:
        """Highest set position; -1 for the zero polynomial."""
        return self.mask.bit_length() - 1

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    def coeff(self, i: int) -> int:
        return (self.mask >> i) & 1

    def reciprocal(self) -> "BitPoly":
        """x^deg * p(1/x): the bit-reversed polynomial."""
        d = self.degree
        rev = 0
        for i in range(d + 1):
            if (self.mask >> i) & 1:
                rev |= 1 << (d - i)
        return BitPoly(rev)

    def to_hex(self) -> str:
        return hex(self.mask)

    def to_text(self) -> str:
        """Symbolic form in ascending powers, e.g. "1+x+x^4"."""
        if self.mask == 0:
            return "0"
        terms = []
        for i in range(self.mask.bit_length()):
            if (self.mask >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(terms)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"BitPoly({self.to_hex()})"

    def __bool__(self):
        return bool(self.mask)


# ---------------------------------------------------------------------------
# raw mask arithmetic

def _mul(a: int, b: int) -> int:
    """Carry-less product of two masks."""
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _mod(a: int, m: int) -> int:
    """Remainder of mask a modulo nonzero mask m."""
    dm = m.bit_length() - 1
    d = a.bit_length() - 1
    while d >= dm:
        a ^= m << (d - dm)
        d = a.bit_length() - 1
    return a


def _sqr(a: int) -> int:
    """Square of a mask: spreads every bit i to position 2i."""
    r = 0
    while a:
        low = a & -a
        r |= 1 << (2 * (low.bit_length() - 1))
        a ^= low
    return r


def _powmod(base: int, e: int, m: int) -> int:
    """base^e mod m over GF(2), square-and-multiply."""
    r = 1
    base = _mod(base, m)
    while e:
        if e & 1:
            r = _mod(_mul(r, base), m)
        base = _mod(_sqr(base), m)
        e >>= 1
    return r


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def poly_mul_mod(a: BitPoly, b: BitPoly, m: BitPoly) -> BitPoly:
    """(a*b) mod m over GF(2); the result degree is below deg(m)."""
    if m.mask == 0:
        raise ValueError("zero modulus")
    if m.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    return BitPoly(_mod(_mul(a.mask, b.mask), m.mask))


def is_irreducible(p: BitPoly) -> bool:
    """Irreducibility over GF(2) via repeated squaring and gcd."""
    a = p.mask
    if a <= 1:
        return False
    b = 2
    for _ in range(p.degree // 2):
        b = _mod(_sqr(b), a)
        if _gcd(b ^ 2, a) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# integer factorization (needed for multiplicative-order tests)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _is_prime(v: int) -> bool:
    """Deterministic Miller-Rabin, valid for all v < 2^64."""
    if v < 2:
        return False
    for p in _SMALL_PRIMES:
        if v % p == 0:
            return v == p
    d = v - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, v)
        if x == 1 or x == v - 1:
            continue
        for _ in range(r - 1):
            x = x * x % v
            if x == v - 1:
                break
        else:
            return False
    return True


def _pollard_rho(v: int) -> int:
    """A nontrivial factor of composite odd v; deterministic parameter sweep."""
    if v % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % v
            y = (y * y + c) % v
            y = (y * y + c) % v
            d = math.gcd(abs(x - y), v)
        if d != v:
            return d
    raise ArithmeticError(f"factor sweep exhausted for {v}")


def factorize(v: int) -> dict[int, int]:
    """Complete prime factorization of v >= 1 as {prime: multiplicity}."""
    if v < 1:
        raise ValueError("factorize requires v >= 1")
    factors: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while v % p == 0:
            factors[p] = factors.get(p, 0) + 1
            v //= p
    stack = [v] if v > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(factors.items()))


def euler_phi(v: int) -> int:
    """Euler's totient of v >= 1."""
    phi = 1
    for p, e in factorize(v).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


# ---------------------------------------------------------------------------
# maximal-order testing and enumeration

def _has_full_order(mask: int, k: int, cofactor_exps: list[int]) -> bool:
    """True iff x has order exactly 2^k - 1 modulo mask.

    The full-order condition x^(2^k - 1) = 1 is checked as x^(2^k) = x
    (x is invertible because the constant term is 1), which needs only k
    squarings; cofactor_exps lists (2^k - 1)/q for each prime q.
    """
    t = 2
    for _ in range(k):
        t = _mod(_sqr(t), mask)
    if t != 2:
        return False
    for e in cofactor_exps:
        if _powmod(2, e, mask) == 1:
            return False
    return True


def is_primitive(p: BitPoly) -> bool:
    """Whether p of degree k generates a maximum-length recurrence.

    True iff the multiplicative order of x in GF(2)[x]/(p) is exactly
    2^k - 1, which also forces p to be irreducible.  A constant term of
    zero cannot occur in a valid connection polynomial, so it is
    rejected as a caller bug rather than reported as non-primitive.
    """
    k = p.degree
    if k < 2:
        raise ValueError(f"connection polynomial must have degree >= 2, got {p!r}")
    if not p.mask & 1:
        raise ValueError(f"connection polynomial must have constant term 1, got {p!r}")
    order = (1 << k) - 1
    cofactors = [order // q for q in factorize(order)]
    return _has_full_order(p.mask, k, cofactors)


def enumerate_primitives(k: int) -> list[BitPoly]:
    """All degree-k polynomials with maximal order of x, ascending by mask.

    The list has euler_phi(2^k - 1) / k entries.
    """
    if not 2 <= k <= ENUMERATION_CAP:
        raise UnsupportedRangeError(
            f"enumeration supports 2 <= k <= {ENUMERATION_CAP}, got {k}"
        )
    order = (1 << k) - 1
    cofactors = [order // q for q in factorize(order)]
    base = (1 << k) | 1
    found = []
    for mid in range(1 << (k - 1)):
        mask = base | (mid << 1)
        if _has_full_order(mask, k, cofactors):
            found.append(BitPoly(mask))
    return found
