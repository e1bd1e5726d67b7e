"""Writing h1 = sum_{i<=n} floor(p_i^(1/k)) + sum_{j in J} floor(p_j^(1/k)) with
J inside the window {n+1, ..., floor((1+eps) n)}.

The prefix length n is the largest one whose prefix sum plus half the window
total stays below h1, so the residual sits near the middle of the window's
subset-sum range. J comes from an exact subset sum DP with backtracking; if
the residual is not a subset sum, n is lowered and the search repeats.

Subset sums of j window values fill [sum of j smallest, sum of j largest].
Consecutive j are one window value apart, and for k = 1 (odd primes) only
every other j has the right parity. The threshold therefore starts at the
first n whose half-window range is at least twice the largest window value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from ..errors import NoRepresentation
from ..primes import first_primes, floor_kth_root, nth_prime_bound, sieve

# half-window sum range must span this many of the largest window values
COVER_FACTOR = 2


@dataclass(frozen=True)
class RepresentationPlan:
    k: int
    h1: int
    n: int
    epsilon: float
    window: tuple[int, int]  # inclusive 1-based index range
    chosen: tuple[int, ...]  # 1-based prime indices in J

    def values(self) -> tuple[list[int], list[int]]:
        a = root_floors(self.k, max(self.window[1], self.n))
        return a[: self.n], [a[j - 1] for j in self.chosen]

    def total(self) -> int:
        prefix, extra = self.values()
        return sum(prefix) + sum(extra)

    def is_valid(self) -> bool:
        lo, hi = self.window
        return (
            self.total() == self.h1
            and lo == self.n + 1
            and hi == math.floor((1 + self.epsilon) * self.n)
            and all(lo <= j <= hi for j in self.chosen)
            and len(set(self.chosen)) == len(self.chosen)
        )


@lru_cache(maxsize=16)
def _root_floor_cache(k: int, count: int) -> tuple[int, ...]:
    return tuple(floor_kth_root(p, k) for p in first_primes(count))


def root_floors(k: int, count: int) -> tuple[int, ...]:
    """floor(p_i^(1/k)) for i = 1..count (cached in power-of-two blocks)."""
    size = 1024
    while size < count:
        size *= 2
    return _root_floor_cache(k, size)[:count]


def subset_sum(values: list[int], target: int) -> list[int] | None:
    """Indices (into values) of a subset summing to target, or None.

    Forward pass keeps one reachable-sums bitset per prefix of ``values``;
    the certificate is read back from the last item to the first.
    """
    if target < 0:
        return None
    mask = (1 << (target + 1)) - 1
    layers = [1]
    for v in values:
        prev = layers[-1]
        layers.append((prev | (prev << v)) & mask)
    if not (layers[-1] >> target) & 1:
        return None
    chosen = []
    rest = target
    for i in range(len(values), 0, -1):
        if (layers[i - 1] >> rest) & 1:
            continue  # reachable without item i-1
        chosen.append(i - 1)
        rest -= values[i - 1]
    assert rest == 0
    return sorted(chosen)


def _window_end(n: int, eps: float) -> int:
    return math.floor((1 + eps) * n)


def _covers(a, n: int, eps: float) -> bool:
    window = a[n : _window_end(n, eps)]
    j = len(window) // 2
    if j == 0:
        return False
    spread = sum(window[-j:]) - sum(window[:j])
    return spread >= COVER_FACTOR * window[-1]


@lru_cache(maxsize=32)
def min_prefix_index(k: int, eps: float) -> int:
    """Smallest n from which every window passes the coverage test."""
    count = 4096
    while True:
        a = root_floors(k, count)
        last_bad = 0
        limit = int(count / (1 + eps)) - 1
        for n in range(1, limit):
            if not _covers(a, n, eps):
                last_bad = n
        if last_bad < limit // 2:
            return last_bad + 1
        count *= 2


def threshold(k: int, eps: float) -> int:
    """Smallest h1 handled: prefix sum up to the first admissible n plus half
    that window, i.e. the point where n reaches ``min_prefix_index``."""
    n = min_prefix_index(k, eps)
    a = root_floors(k, _window_end(n, eps))
    return sum(a[:n]) + sum(a[n:_window_end(n, eps)]) // 2 + 1


def represent(h1: int, k: int, eps: float = 0.1, retries: int = 50) -> RepresentationPlan:
    if not (0 < eps <= 1):
        raise ValueError("eps must lie in (0, 1]")
    if k < 1:
        raise ValueError("need k >= 1")
    floor_h1 = threshold(k, eps)
    if h1 < floor_h1:
        raise NoRepresentation(f"h1={h1} is below the threshold {floor_h1} for k={k}, eps={eps}")

    # enough root floors to cover h1 comfortably
    count = 2048
    while True:
        a = root_floors(k, count)
        if sum(a[: int(count / (1 + eps)) - 1]) > h1:
            break
        count *= 2

    prefix = [0]
    for v in a:
        prefix.append(prefix[-1] + v)

    def centre(n):  # u_n = prefix_n + half the window total
        hi = _window_end(n, eps)
        return prefix[n] + (prefix[hi] - prefix[n]) / 2

    n_min = min_prefix_index(k, eps)
    n = n_min
    while centre(n + 1) < h1:
        n += 1

    last_residual = None
    for n_try in range(n, max(n_min, n - retries) - 1, -1):
        hi = _window_end(n_try, eps)
        residual = h1 - prefix[n_try]
        last_residual = residual
        window_values = list(a[n_try:hi])
        picked = subset_sum(window_values, residual)
        if picked is not None:
            chosen = tuple(n_try + 1 + i for i in picked)
            return RepresentationPlan(k, h1, n_try, eps, (n_try + 1, hi), chosen)
    raise NoRepresentation(
        f"no representation of h1={h1} (k={k}, eps={eps}) within {retries} retries",
        residual=last_residual,
    )
