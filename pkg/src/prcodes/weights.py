"""Hamming weight distributions and their transforms.

Exact enumerators are integer vectors A_0..A_n obtained by walking all
2^k codewords.  The binary MacWilliams transform maps an enumerator to
its dual's through the Krawtchouk kernel; everything on that path is
arbitrary-precision integer arithmetic, so a non-integer or negative
output is reported as an error instead of being rounded away.

On top of the exact machinery sit the ensemble averages over all
maximal-period polynomials of a degree, closed-form approximations of
those averages built from sparse-multiple counts, and a KL divergence
for comparing the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, inf, log

from .construct import PrCode, build_code
from .errors import (
    InconsistentEnumeratorError,
    RecursionInconsistencyError,
    UnsupportedRangeError,
)
from .gf2 import BitPoly, enumerate_primitives

# exhaustive enumeration caps: one code, and a whole degree-k ensemble
ENUMERATOR_CAP = 24
ENSEMBLE_CAP = 16


@dataclass(frozen=True)
class WeightEnumerator:
    """Exact codeword counts by Hamming weight for one (n, dim) code."""

    n: int
    dim: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError(f"need {self.n + 1} counts, got {len(self.counts)}")
        if self.counts[0] != 1:
            raise InconsistentEnumeratorError("count at weight 0 must be 1")
        if any(c < 0 for c in self.counts):
            raise InconsistentEnumeratorError("counts must be nonnegative")
        if sum(self.counts) != 1 << self.dim:
            raise InconsistentEnumeratorError(
                f"counts must total 2^{self.dim} = {1 << self.dim}"
            )

    def min_nonzero_weight(self) -> int:
        """Smallest weight >= 1 with a codeword; the code's minimum distance."""
        for j in range(1, self.n + 1):
            if self.counts[j]:
                return j
        raise ValueError("code has no nonzero codeword")

    def as_distribution(self, label: str = "exact") -> "RealDistribution":
        return RealDistribution(
            n=self.n, values=tuple(float(c) for c in self.counts), label=label
        )


@dataclass(frozen=True)
class RealDistribution:
    """Real-valued weight profile indexed 0..n (averages, approximations)."""

    n: int
    values: tuple[float, ...]
    label: str

    def __post_init__(self):
        if len(self.values) != self.n + 1:
            raise ValueError(f"need {self.n + 1} values, got {len(self.values)}")


# ---------------------------------------------------------------------------
# exact enumerators

def _weight_counts(rows: tuple[int, ...], k: int, n: int) -> list[int]:
    """Counts by weight over all 2^k row combinations, via a Gray walk."""
    counts = [0] * (n + 1)
    counts[0] = 1
    word = 0
    for i in range(1, 1 << k):
        low = i & -i
        word ^= rows[low.bit_length() - 1]
        counts[word.bit_count()] += 1
    return counts


def weight_enumerator_exact(code: PrCode) -> WeightEnumerator:
    """Exact weight distribution by exhaustive codeword enumeration."""
    if code.k > ENUMERATOR_CAP:
        raise UnsupportedRangeError(
            f"exhaustive enumeration supports k <= {ENUMERATOR_CAP}, got {code.k}"
        )
    counts = _weight_counts(code.rows, code.k, code.n)
    return WeightEnumerator(n=code.n, dim=code.k, counts=tuple(counts))


# ---------------------------------------------------------------------------
# Krawtchouk kernel and the MacWilliams transform

def krawtchouk(n: int, j: int, t: int) -> int:
    """K_j(t) = sum_l (-1)^l C(t,l) C(n-t,j-l), exact."""
    if not 0 <= j <= n:
        raise ValueError(f"j must be in [0, {n}], got {j}")
    if not 0 <= t <= n:
        raise ValueError(f"t must be in [0, {n}], got {t}")
    acc = 0
    for l in range(max(0, j - (n - t)), min(j, t) + 1):
        term = comb(t, l) * comb(n - t, j - l)
        acc += -term if l & 1 else term
    return acc


@lru_cache(maxsize=64)
def _krawtchouk_table(n: int) -> tuple[tuple[int, ...], ...]:
    """table[j][t] = K_j(t) for the given length."""
    return tuple(
        tuple(krawtchouk(n, j, t) for t in range(n + 1)) for j in range(n + 1)
    )


def _transform_counts(counts: list[int], n: int, dim: int) -> list[int]:
    """Raw transform: out[t] = 2^-dim * sum_j counts[j] K_t(j), exact."""
    table = _krawtchouk_table(n)
    scale = 1 << dim
    out = []
    for t in range(n + 1):
        row = table[t]
        acc = 0
        for j, a in enumerate(counts):
            if a:
                acc += a * row[j]
        if acc < 0 or acc % scale:
            raise InconsistentEnumeratorError(
                f"transform output at weight {t} is {acc}/{scale}, "
                "not a nonnegative integer; input was not a valid "
                "linear-code weight distribution"
            )
        out.append(acc // scale)
    return out


def macwilliams(a: WeightEnumerator) -> WeightEnumerator:
    """Weight distribution of the dual (n, n - dim) code, exact."""
    if a.dim > a.n:
        raise ValueError("dimension cannot exceed length")
    dual = _transform_counts(list(a.counts), a.n, a.dim)
    return WeightEnumerator(n=a.n, dim=a.n - a.dim, counts=tuple(dual))


# ---------------------------------------------------------------------------
# ensemble averages over all maximal-period polynomials of one degree

def ensemble_enumerators(k: int, n: int) -> list[tuple[BitPoly, WeightEnumerator]]:
    """Exact enumerator for every degree-k maximal-period polynomial."""
    if k > ENSEMBLE_CAP:
        raise UnsupportedRangeError(
            f"ensemble enumeration supports k <= {ENSEMBLE_CAP}, got {k}"
        )
    out = []
    for p in enumerate_primitives(k):
        out.append((p, weight_enumerator_exact(build_code(p, n))))
    return out


def ensemble_average_exact(k: int, n: int) -> tuple[RealDistribution, RealDistribution]:
    """Exact average primal and dual weight distributions for degree k.

    The dual average is the transform of the summed primal counts, which
    by linearity equals the average of the per-code dual enumerators.
    """
    members = ensemble_enumerators(k, n)
    count = len(members)
    primal_sum = [0] * (n + 1)
    for _, enum in members:
        for j, c in enumerate(enum.counts):
            primal_sum[j] += c
    dual_sum = _transform_counts(primal_sum, n, k)
    primal = tuple(float(Fraction(s, count)) for s in primal_sum)
    dual = tuple(float(Fraction(s, count)) for s in dual_sum)
    return (
        RealDistribution(n=n, values=primal, label="exact-avg-primal"),
        RealDistribution(n=n, values=dual, label="exact-avg-dual"),
    )


# ---------------------------------------------------------------------------
# closed-form approximations

def n_multiples(k: int, t: int) -> int:
    """Number of weight-t multiples (constant term 1) of degree <= 2^k - 2
    of a degree-k maximal-period polynomial.

    Computed by the exact recursion seeded with zero counts at t = 1, 2;
    the result is independent of which degree-k polynomial is chosen.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if t <= 2:
        return 0
    m = 1 << k
    prev2, prev1 = Fraction(0), Fraction(0)  # N at t-2, t-1
    value = Fraction(0)
    for s in range(3, t + 1):
        value = (
            comb(m - 2, s - 2) - prev1 - Fraction(s - 1, s - 2) * (m - s + 1) * prev2
        ) / (s - 1)
        prev2, prev1 = prev1, value
    if value.denominator != 1:
        raise RecursionInconsistencyError(
            f"count at t={t} is the non-integer {value}"
        )
    return int(value)


def _span_weighted_count(n: int, t: int, k: int) -> int:
    """Sum over degrees c of C(c-1, t-2) (n-c): weight-t windows grouped by
    the distance c between their first and last one, c >= max(k, t-1)."""
    if t < 2:
        return 0
    return sum(comb(c - 1, t - 2) * (n - c) for c in range(max(k, t - 1), n))


def avg_dual_approx(k: int, n: int) -> RealDistribution:
    """Closed-form estimate of the average dual weight distribution.

    Entry t (3 <= t <= n) is _span_weighted_count / (2^k - t); weights 1
    and 2 are exactly zero because the dual minimum weight is at least 3,
    and weight 0 is the single zero word.  The refined 1/(2^k - t)
    density is meaningless once t reaches 2^k (it hits a zero or
    negative denominator), so entries there fall back to the uniform
    1/2^k density, which matches the C(n,t)/2^k scale of the true
    average in that regime.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if n < k:
        raise ValueError(f"n must be >= k, got n={n}, k={k}")
    values = [0.0] * (n + 1)
    values[0] = 1.0
    for t in range(3, n + 1):
        denom = (1 << k) - t if t < 1 << k else 1 << k
        values[t] = float(Fraction(_span_weighted_count(n, t, k), denom))
    return RealDistribution(n=n, values=tuple(values), label="approx-dual")


def avg_primal_approx(k: int, n: int, mode: str = "primary") -> RealDistribution:
    """Closed-form estimate of the average primal weight distribution.

    primary: transform of the dual estimate with its zero-weight term
    carried explicitly, 2^-(n-k) [K_j(0) + sum_t B_t K_j(t)], which keeps
    the total at 2^k.  When n >= 2^k the refined 1/(2^k - t) densities
    are undefined for large t, so the uniform 2^-k density is used for
    every t instead; both branches agree asymptotically for n << 2^k.

    literal: 2^-n sum_t D_t K_j(t) with no zero-weight term, kept as a
    diagnostic; its values total 0 and go negative at the edges.
    """
    if mode not in ("primary", "literal"):
        raise ValueError(f"mode must be 'primary' or 'literal', got {mode!r}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if n < k:
        raise ValueError(f"n must be >= k, got n={n}, k={k}")
    table = _krawtchouk_table(n)
    spans = {t: _span_weighted_count(n, t, k) for t in range(2, n + 1)}
    values = []
    if mode == "literal":
        for j in range(n + 1):
            acc = sum(spans[t] * table[j][t] for t in range(2, n + 1))
            values.append(float(Fraction(acc, 1 << n)))
        label = "approx-primal-literal"
    else:
        refined = n < 1 << k
        dens = {
            t: Fraction(spans[t], ((1 << k) - t) if refined else 1 << k)
            for t in range(3, n + 1)
        }
        for j in range(n + 1):
            acc = Fraction(table[j][0])
            for t in range(3, n + 1):
                acc += dens[t] * table[j][t]
            values.append(float(acc / (1 << (n - k))))
        label = "approx-primal"
    return RealDistribution(n=n, values=tuple(values), label=label)


# ---------------------------------------------------------------------------
# divergence

def kld(p: RealDistribution, q: RealDistribution) -> float:
    """KL divergence (natural log) between two weight profiles.

    Both are restricted to weights 3..n, clamped at zero, and normalized
    to unit mass before comparing.  Returns inf when q has no mass at a
    weight where p does.
    """
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} vs {q.n}")
    pv = [max(v, 0.0) for v in p.values[3:]]
    qv = [max(v, 0.0) for v in q.values[3:]]
    ps, qs = sum(pv), sum(qv)
    if ps <= 0 or qs <= 0:
        raise ValueError("both profiles need positive mass on weights >= 3")
    acc = 0.0
    for pi, qi in zip(pv, qv):
        if pi == 0.0:
            continue
        if qi == 0.0:
            return inf
        pi /= ps
        qi /= qs
        acc += pi * log(pi / qi)
    return acc
