"""Prime infrastructure: a segmented sieve, n-th primes, primorials and exact
integer k-th roots.

Everything that feeds an exact sum works on Python integers; floating point is
only used for reporting.
"""
from __future__ import annotations

import bisect
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

# sieve segment length, and the largest limit we agree to sieve
SEGMENT_SIZE = 1 << 18
MAX_SIEVE_LIMIT = 2 * 10**9


@dataclass(frozen=True)
class PrimeTable:
    limit: int
    primes: tuple[int, ...] = field(repr=False)

    def __len__(self):
        return len(self.primes)

    def __getitem__(self, i):
        return self.primes[i]

    def __iter__(self):
        return iter(self.primes)

    def pi(self, x: int) -> int:
        """Number of primes <= x (x must not exceed the sieve limit)."""
        if x > self.limit:
            raise ValueError(f"{x} exceeds sieve limit {self.limit}")
        return bisect.bisect_right(self.primes, x)


def _small_sieve(limit: int) -> np.ndarray:
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    return np.flatnonzero(is_p)


def sieve(limit: int) -> PrimeTable:
    """All primes <= limit via a segmented sieve of Eratosthenes."""
    if limit < 2:
        raise ValueError("sieve limit must be >= 2")
    if limit > MAX_SIEVE_LIMIT:
        raise MemoryError(f"sieve limit {limit} exceeds memory budget {MAX_SIEVE_LIMIT}")
    root = math.isqrt(limit)
    base = _small_sieve(max(root, 2))
    if limit <= SEGMENT_SIZE:
        return PrimeTable(limit, tuple(int(p) for p in _small_sieve(limit)))

    out = [int(p) for p in base]
    lo = root + 1
    while lo <= limit:
        hi = min(lo + SEGMENT_SIZE, limit + 1)
        seg = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start >= hi:
                continue
            seg[start - lo :: p] = False
        out.extend(int(x) + lo for x in np.flatnonzero(seg))
        lo = hi
    return PrimeTable(limit, tuple(out))


def nth_prime_bound(n: int) -> int:
    """An upper bound for p_n (Rosser: p_n < n(log n + log log n) for n >= 6)."""
    if n < 6:
        return 13
    return int(n * (math.log(n) + math.log(math.log(n)))) + 1


@lru_cache(maxsize=8)
def first_primes(n: int) -> tuple[int, ...]:
    """p_1, ..., p_n."""
    if n <= 0:
        return ()
    table = sieve(nth_prime_bound(n))
    return table.primes[:n]


def nth_prime(n: int) -> int:
    """p_n with p_1 = 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return first_primes(n)[n - 1]


def primorial(s: int) -> int:
    return math.prod(first_primes(s))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def floor_kth_root(m: int, k: int) -> int:
    """Largest x with x**k <= m, by binary search on integers."""
    if m < 0 or k < 1:
        raise ValueError("need m >= 0 and k >= 1")
    if k == 1 or m < 2:
        return m
    if k == 2:
        return math.isqrt(m)
    lo, hi = 1, 1 << (m.bit_length() // k + 1)
    # invariant: lo**k <= m < hi**k
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**k <= m:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass
class RootFloorReport:
    """Multiset {floor(p**(1/k)) : p prime <= limit} plus empirical density data.

    ``hit_fraction`` is the share of 1..value_max hit at least once;
    ``min_growth`` is min over the checked n of a[floor((1+eps) n)] / a[n],
    the empirical weakly-increasing margin.
    """

    k: int
    limit: int
    counts: Counter
    value_max: int
    hit_fraction: float
    eps: float
    min_growth: float
    n_missing: int
    first_missing: list[int]


def root_floor_multiset(
    k: int, limit: int, eps: float = 0.1, n_start: int | None = None
) -> RootFloorReport:
    table = sieve(limit)
    values = [floor_kth_root(p, k) for p in table.primes]
    counts = Counter(values)
    # only values whose whole preimage interval lies below the limit are complete
    value_max = floor_kth_root(limit, k) - 1 if k > 1 else limit
    hit = sum(1 for v in counts if 1 <= v <= value_max)
    hit_fraction = hit / value_max if value_max > 0 else 0.0
    first_missing = []
    for v in range(1, value_max + 1):
        if len(first_missing) == 20:
            break
        if v not in counts:
            first_missing.append(v)

    growth = math.inf
    if n_start is None:
        n_start = max(1, len(values) // 4)
    n_max = int(len(values) / (1 + eps))
    for n in range(n_start, n_max + 1):
        m = math.floor((1 + eps) * n)
        growth = min(growth, values[m - 1] / values[n - 1])
    return RootFloorReport(
        k, limit, counts, value_max, hit_fraction, eps, growth, value_max - hit, first_missing
    )
