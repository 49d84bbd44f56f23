"""Brute-force oracles for the test suite.

Deliberately naive, separate implementations of things the library
computes by smarter routes, so disagreements point at real bugs.
"""

from itertools import combinations


def ref_mul(a: int, b: int) -> int:
    """Schoolbook carry-less product of two polynomial masks."""
    r = 0
    shift = 0
    while b >> shift:
        if (b >> shift) & 1:
            r ^= a << shift
        shift += 1
    return r


def ref_mod(a: int, m: int) -> int:
    """Long-division remainder of mask a modulo mask m."""
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def ref_order_of_x(mask: int, cap: int) -> int:
    """Multiplicative order of x modulo mask by literal stepping.

    Returns 0 if no power of x up to cap reaches 1.
    """
    val = ref_mod(2, mask)
    order = 1
    while val != 1:
        val = ref_mod(val << 1, mask)
        order += 1
        if order > cap:
            return 0
    return order


def ref_is_irreducible(mask: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    d = mask.bit_length() - 1
    if d <= 0:
        return False
    for cand in range(2, 1 << (d // 2 + 1)):
        if cand != mask and ref_mod(mask, cand) == 0:
            return False
    return True


def ref_factorize(v: int) -> dict[int, int]:
    """Trial-division factorization."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= v:
        while v % d == 0:
            out[d] = out.get(d, 0) + 1
            v //= d
        d += 1
    if v > 1:
        out[v] = out.get(v, 0) + 1
    return out


def tnomial_multiple_count(p_mask: int, k: int, t: int) -> int:
    """Count weight-t masks with constant term 1 and degree <= 2^k - 2
    divisible by p, enumerating all exponent subsets."""
    top = (1 << k) - 2
    count = 0
    for exps in combinations(range(1, top + 1), t - 1):
        q = 1
        for e in exps:
            q |= 1 << e
        if ref_mod(q, p_mask) == 0:
            count += 1
    return count


def rotate_mask(mask: int, n: int, s: int) -> int:
    """Cyclic left rotation of an n-bit mask by s places."""
    s %= n
    full = (1 << n) - 1
    return ((mask << s) | (mask >> (n - s))) & full
