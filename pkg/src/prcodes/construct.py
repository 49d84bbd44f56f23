"""Linear codes built from windows of maximum-length LFSR sequences.

A degree-k connection polynomial p with p_0 = p_k = 1 drives the
recurrence c_t = sum_{i=1..k} p_i * c_{t-i} over GF(2).  Seeding the
register with each unit vector yields k sequences whose length-n
prefixes form the rows of a generator matrix; the 2^k - 1 nonzero
codewords are exactly the length-n windows of the period-(2^k - 1)
sequence at all phases.

Codewords and generator rows are packed into ints, bit i holding
coordinate i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import UnsupportedRangeError
from .gf2 import BitPoly, is_primitive

# codeword_set materializes 2^k packed words
CODEWORD_SET_CAP = 24


def bits_to_int(bits: Iterable[int]) -> int:
    """Pack bits (coordinate 0 first) into an int mask."""
    mask = 0
    for i, b in enumerate(bits):
        if b:
            mask |= 1 << i
    return mask


def int_to_bits(mask: int, length: int) -> list[int]:
    """Unpack the low `length` bits of a mask, coordinate 0 first."""
    return [(mask >> i) & 1 for i in range(length)]


def _parse_init(init: Sequence[int] | str, k: int) -> list[int]:
    if isinstance(init, str):
        bits = [int(ch) for ch in init]
    else:
        bits = [int(b) for b in init]
    if len(bits) != k:
        raise ValueError(f"initial state must have exactly {k} bits, got {len(bits)}")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("initial state bits must be 0 or 1")
    return bits


def lfsr_subsequence(p: BitPoly, init: Sequence[int] | str, n: int) -> list[int]:
    """First n bits of the recurrence driven by p from the given state.

    Bits 0..k-1 equal init; every later bit is the tap sum of the k
    preceding ones.  An all-zero state stays at zero forever.
    """
    k = p.degree
    if k < 1:
        raise ValueError("connection polynomial must have degree >= 1")
    if n < 1:
        raise ValueError("subsequence length must be >= 1")
    bits = _parse_init(init, k)
    taps = [i for i in range(1, k + 1) if p.coeff(i)]
    for t in range(k, n):
        b = 0
        for i in taps:
            b ^= bits[t - i]
        bits.append(b)
    return bits[:n]


@dataclass(frozen=True)
class PrCode:
    """An (n, k) linear code generated by LFSR subsequence rows.

    Row i of the generator matrix is the length-n sequence seeded with
    the i-th unit vector, so the first k columns form the identity and
    encoding a message reproduces the sequence seeded with it.
    """

    poly: BitPoly
    k: int
    n: int
    rows: tuple[int, ...]

    def encode(self, message: int) -> int:
        """Codeword mask for a k-bit message mask."""
        if not 0 <= message < (1 << self.k):
            raise ValueError(f"message must be in [0, 2^{self.k})")
        word = 0
        m = message
        while m:
            low = m & -m
            word ^= self.rows[low.bit_length() - 1]
            m ^= low
        return word

    def to_text(self) -> str:
        """Serialize as a "k n poly_hex" header plus one hex row per line."""
        lines = [f"{self.k} {self.n} {self.poly.to_hex()}"]
        lines.extend(hex(r) for r in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PrCode":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        k_s, n_s, poly_hex = lines[0].split()
        k, n = int(k_s), int(n_s)
        rows = tuple(int(ln, 16) for ln in lines[1:])
        if len(rows) != k:
            raise ValueError(f"expected {k} generator rows, got {len(rows)}")
        return cls(poly=BitPoly.parse(poly_hex), k=k, n=n, rows=rows)


def build_code(p: BitPoly, n: int) -> PrCode:
    """Construct the (n, k) code for a maximal-period connection polynomial.

    n may exceed the sequence period 2^k - 1, in which case coordinates
    repeat; analyses that assume n <= 2^k - 1 must check that themselves.
    """
    if not is_primitive(p):
        raise ValueError(f"{p!r} does not generate a maximum-length sequence")
    k = p.degree
    if n < k:
        raise ValueError(f"block length must be >= k = {k}, got {n}")
    rows = []
    for i in range(k):
        init = [0] * k
        init[i] = 1
        rows.append(bits_to_int(lfsr_subsequence(p, init, n)))
    return PrCode(poly=p, k=k, n=n, rows=tuple(rows))


def codeword_set(code: PrCode) -> set[int]:
    """All 2^k codeword masks (Gray-order walk over messages)."""
    if code.k > CODEWORD_SET_CAP:
        raise UnsupportedRangeError(
            f"codeword_set supports k <= {CODEWORD_SET_CAP}, got {code.k}"
        )
    words = {0}
    word = 0
    for i in range(1, 1 << code.k):
        low = i & -i
        word ^= code.rows[low.bit_length() - 1]
        words.add(word)
    return words


def verify_disjoint(p1: BitPoly, p2: BitPoly, n: int) -> bool:
    """Whether two codes share no nonzero codeword.

    Both polynomials must be distinct maximal-period generators of the
    same degree k, and n must be at least 2k: below that, windows are
    short enough for two different recurrences to produce the same
    nonzero word, and the disjointness guarantee does not apply.
    """
    if p1 == p2:
        raise ValueError("connection polynomials must differ")
    k = p1.degree
    if p2.degree != k:
        raise ValueError("connection polynomials must have the same degree")
    if n < 2 * k:
        raise ValueError(f"disjointness requires n >= 2k = {2 * k}, got {n}")
    for p in (p1, p2):
        if not is_primitive(p):
            raise ValueError(f"{p!r} does not generate a maximum-length sequence")
    c1 = codeword_set(build_code(p1, n))
    c2 = codeword_set(build_code(p2, n))
    return c1 & c2 == {0}
