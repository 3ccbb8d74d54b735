"""Exact integer verification of the arithmetic behind the mollifier.

The discriminant cusp form's coefficients tau(n) are computed from the
q-expansion q * prod_{n>=1} (1 - q^n)^24 with exact big integers.  The
unnormalized mollifier coefficients m(n) (the Dirichlet inverse of tau,
scaled by n^{11/2} to stay integral) are built multiplicatively, and the
identities the mollifier relies on are checked by exhaustive exact
arithmetic: the convolution cancellation, multiplicativity, the prime
power recursion, and the divisor-count form of Deligne's bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import dec_str

__all__ = [
    "TableLimitError",
    "TauTable",
    "MollifierTable",
    "ConvolutionWitness",
    "DxValue",
    "DeligneReport",
    "compute_tau",
    "mollifier_from",
    "convolution_identity_check",
    "d_x",
    "deligne_check",
    "hecke_recursion_failures",
    "multiplicativity_failures",
    "divisor_counts",
    "DEFAULT_LIMIT",
    "MAX_LIMIT",
]

DEFAULT_LIMIT = 10_000
#: Memory guard: tables beyond this need a deliberate override.
MAX_LIMIT = 200_000


class TableLimitError(ValueError):
    """Requested table size exceeds the configured memory budget."""


# ---------------------------------------------------------------------------
# Truncated integer power series via packed big integers
# ---------------------------------------------------------------------------

def _pack(coeffs: list[int], block_bytes: int) -> int:
    blob = b"".join(c.to_bytes(block_bytes, "little") for c in coeffs)
    return int.from_bytes(blob, "little")


def _unpack(packed: int, block_bytes: int, count: int) -> list[int]:
    packed &= (1 << (count * block_bytes * 8)) - 1  # truncate the series
    blob = packed.to_bytes(count * block_bytes, "little")
    return [
        int.from_bytes(blob[i * block_bytes:(i + 1) * block_bytes], "little")
        for i in range(count)
    ]


def _block_bytes(f: list[int], g: list[int], n: int) -> int:
    mf = max((abs(c) for c in f), default=0)
    mg = max((abs(c) for c in g), default=0)
    bound = n * mf * mg + 1
    return (bound.bit_length() + 1 + 7) // 8


def _series_mul(f: list[int], g: list[int], n: int) -> list[int]:
    """Truncated product of integer series, exact for mixed signs.

    Splits each factor into nonnegative and negative parts and multiplies
    the packed big integers (Kronecker substitution), which hands the
    convolution to the big-int multiplier.
    """
    bb = _block_bytes(f, g, n)
    fp = _pack([max(c, 0) for c in f], bb)
    fn = _pack([max(-c, 0) for c in f], bb)
    gp = _pack([max(c, 0) for c in g], bb)
    gn = _pack([max(-c, 0) for c in g], bb)
    pos = _unpack(fp * gp + fn * gn, bb, n)
    neg = _unpack(fp * gn + fn * gp, bb, n)
    return [p - q for p, q in zip(pos, neg)]


def _series_square(f: list[int], n: int) -> list[int]:
    bb = _block_bytes(f, f, n)
    fp = _pack([max(c, 0) for c in f], bb)
    fn = _pack([max(-c, 0) for c in f], bb)
    pos = _unpack(fp * fp + fn * fn, bb, n)
    neg = _unpack(fp * fn, bb, n)
    return [p - 2 * q for p, q in zip(pos, neg)]


def _pentagonal_series(n: int) -> list[int]:
    """prod_{m>=1} (1 - q^m) truncated to n coefficients (sparse +-1)."""
    coeffs = [0] * n
    coeffs[0] = 1
    k = 1
    while True:
        placed = False
        for idx in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if idx < n:
                coeffs[idx] = 1 if k % 2 == 0 else -1
                placed = True
        if not placed:
            break
        k += 1
    return coeffs


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TauTable:
    """tau(1..limit) as exact integers (index 0 unused)."""

    limit: int
    tau: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(f"tau({n}) outside table limit {self.limit}")
        return self.tau[n]


@dataclass(frozen=True)
class MollifierTable:
    """Unnormalized mollifier coefficients m(1..limit).

    m is multiplicative with m(p) = -tau(p), m(p^2) = p^11, m(p^a) = 0 for
    a >= 3; it is supported exactly on cube-free integers.
    """

    limit: int
    m: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(f"m({n}) outside table limit {self.limit}")
        return self.m[n]


def compute_tau(limit: int, max_limit: int = MAX_LIMIT) -> TauTable:
    """Exact tau table via the pentagonal expansion raised to the 24th power.

    24 = 2*2*2*3: three truncated squarings of the pentagonal series, then
    one cube, all with exact integer coefficients; the final shift by q
    gives tau(n) as the coefficient of q^n.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if limit > max_limit:
        raise TableLimitError(
            f"limit {limit} exceeds the configured budget of {max_limit}"
        )
    n = limit
    eta = _pentagonal_series(n)
    eta2 = _series_square(eta, n)
    eta4 = _series_square(eta2, n)
    eta8 = _series_square(eta4, n)
    eta24 = _series_mul(_series_square(eta8, n), eta8, n)
    tau = [0] * (limit + 1)
    tau[1:] = eta24[: limit]
    return TauTable(limit, tuple(tau))


def _smallest_prime_factors(limit: int) -> list[int]:
    spf = list(range(limit + 1))
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf


def mollifier_from(table: TauTable) -> MollifierTable:
    """Build m(1..limit) multiplicatively from the tau table."""
    limit = table.limit
    spf = _smallest_prime_factors(limit)
    m = [0] * (limit + 1)
    m[1] = 1
    for n in range(2, limit + 1):
        p = spf[n]
        rest, a = n, 0
        while rest % p == 0:
            rest //= p
            a += 1
        if a == 1:
            local = -table[p]
        elif a == 2:
            local = p ** 11
        else:
            local = 0
        m[n] = m[rest] * local
    return MollifierTable(limit, tuple(m))


# ---------------------------------------------------------------------------
# Identity checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConvolutionWitness:
    """A value of sum_{d | n} m(d) tau(n/d) that missed its expectation."""

    n: int
    value: int
    expected: int


def convolution_values(table: TauTable, moll: MollifierTable, upto: int) -> list[int]:
    """sum_{d | n} m(d) tau(n/d) for n = 1..upto (index 0 unused)."""
    if upto > table.limit:
        raise ValueError("upto exceeds the table limit")
    vals = [0] * (upto + 1)
    for d in range(1, upto + 1):
        md = moll[d]
        if md == 0:
            continue
        for n in range(d, upto + 1, d):
            vals[n] += md * table[n // d]
    return vals


def convolution_identity_check(
    table: TauTable, upto: int, moll: MollifierTable | None = None
) -> list[ConvolutionWitness]:
    """Failures of the full-inverse cancellation on [1, upto] (empty = pass).

    The expectation is 1 at n = 1 and 0 for every 2 <= n <= upto.
    """
    moll = moll or mollifier_from(table)
    vals = convolution_values(table, moll, upto)
    failures = []
    for n in range(1, upto + 1):
        expected = 1 if n == 1 else 0
        if vals[n] != expected:
            failures.append(ConvolutionWitness(n, vals[n], expected))
    return failures


@dataclass(frozen=True)
class DxValue:
    """Truncated-divisor convolution U_X(n) = sum_{d | n, d <= X} m(d) tau(n/d).

    The normalized quantity is U_X(n) / n^{11/2}; the integer is exact.
    """

    n: int
    x: int
    value: int


def d_x(n: int, x: int, table: TauTable, moll: MollifierTable | None = None) -> DxValue:
    if n > table.limit:
        raise ValueError(f"n = {n} exceeds the table limit {table.limit}")
    moll = moll or mollifier_from(table)
    total = 0
    for d in range(1, math.isqrt(n) + 1):
        if n % d:
            continue
        for div in {d, n // d}:
            if div <= x:
                total += moll[div] * table[n // div]
    return DxValue(n, x, total)


@dataclass(frozen=True)
class DeligneReport:
    """Worst case of tau(n)^2 against d(n)^2 n^11 over the table."""

    limit: int
    max_ratio: Fraction
    argmax: int
    violations: tuple[int, ...]

    @property
    def max_ratio_decimal(self) -> str:
        return dec_str(self.max_ratio)

    @property
    def ok(self) -> bool:
        return not self.violations


def divisor_counts(limit: int) -> list[int]:
    d = [0] * (limit + 1)
    for k in range(1, limit + 1):
        for n in range(k, limit + 1, k):
            d[n] += 1
    return d


def deligne_check(table: TauTable) -> DeligneReport:
    """Exact check of tau(n)^2 <= d(n)^2 n^11 for every n in the table."""
    d = divisor_counts(table.limit)
    best_num, best_den, argmax = 0, 1, 1
    violations = []
    for n in range(1, table.limit + 1):
        num = table[n] ** 2
        den = d[n] ** 2 * n ** 11
        if num > den:
            violations.append(n)
        if num * best_den > best_num * den:
            best_num, best_den, argmax = num, den, n
    return DeligneReport(table.limit, Fraction(best_num, best_den), argmax, tuple(violations))


def hecke_recursion_failures(table: TauTable) -> list[tuple[int, int]]:
    """Prime powers (p, a) with tau(p^{a+1}) != tau(p) tau(p^a) - p^11 tau(p^{a-1})."""
    limit = table.limit
    spf = _smallest_prime_factors(limit)
    primes = [p for p in range(2, limit + 1) if spf[p] == p]
    failures = []
    for p in primes:
        pa = p  # p^a, starting at a = 1
        a = 1
        while pa * p <= limit:
            lhs = table[pa * p]
            rhs = table[p] * table[pa] - p ** 11 * table[pa // p]
            if lhs != rhs:
                failures.append((p, a))
            pa *= p
            a += 1
    return failures


def multiplicativity_failures(table: TauTable) -> list[tuple[int, int]]:
    """Coprime pairs (m, n), m < n, m n <= limit, with tau(mn) != tau(m) tau(n)."""
    limit = table.limit
    failures = []
    for m in range(2, math.isqrt(limit) + 1):
        for n in range(m + 1, limit // m + 1):
            if math.gcd(m, n) != 1:
                continue
            if table[m * n] != table[m] * table[n]:
                failures.append((m, n))
    return failures
