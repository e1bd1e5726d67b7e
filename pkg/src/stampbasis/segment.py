"""The classical postage stamp problem on a segment {0, 1, ..., n}.

``reach`` is a DP over (value, stamps used): layer j is the set of values
representable with at most j stamps, held as a Python integer bitset.
``n_exact`` searches stamp vectors 1 = a_1 < a_2 < ... < a_k with
a_{i+1} <= reach(a_1..a_i) + 1, depth first in lexicographic order.

Pruning bound at a node with prefix P and q stamps still to place: any value
<= h is a sum of m new stamps (at most C(m+q-1, m) multisets) plus a sum of
at most h-m prefix stamps (D_{h-m} distinct values, read off the prefix's
layers). Hence reach + 1 <= sum_m C(m+q-1, m) * D_{h-m}, which is the
binomial counting bound applied to the remaining extension only.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .config import SearchConfig
from .cyclic import ExtremalRecord, _bits_to_indices
from .errors import SearchTooLarge


@dataclass(frozen=True)
class SegmentBasis:
    stamps: tuple[int, ...]
    budget: int

    def __post_init__(self):
        stamps = tuple(sorted(int(a) for a in self.stamps))
        object.__setattr__(self, "stamps", stamps)
        if self.budget < 1:
            raise ValueError(f"budget h must be >= 1, got {self.budget}")
        if not stamps:
            raise ValueError("need at least one stamp")
        if len(set(stamps)) != len(stamps):
            raise ValueError(f"stamps must be distinct: {stamps}")
        if stamps[0] < 1:
            raise ValueError(f"stamps must be positive: {stamps}")

    @property
    def k(self) -> int:
        return len(self.stamps)


@dataclass(frozen=True)
class ReachResult:
    """``min_stamps[v]`` is the least number of stamps summing to v for
    v <= reach + 1 (``budget + 1`` marks "more than budget")."""

    reach: int
    coverage: int = field(repr=False)
    min_stamps: np.ndarray = field(repr=False, compare=False)

    def covers(self, value: int) -> bool:
        return bool((self.coverage >> value) & 1)


def _trailing_ones(bits: int) -> int:
    return (~bits & (bits + 1)).bit_length() - 1


def _layers(stamps, h: int, width: int) -> list[int]:
    mask = (1 << width) - 1
    layers = [1]
    for _ in range(h):
        prev = layers[-1]
        cur = prev
        for a in stamps:
            cur |= prev << a
        layers.append(cur & mask)
    return layers


def reach(basis: SegmentBasis) -> ReachResult:
    h, stamps = basis.budget, basis.stamps
    width = min(h * stamps[-1], math.comb(h + len(stamps), h)) + 2
    layers = _layers(stamps, h, width)
    r = _trailing_ones(layers[h]) - 1
    min_stamps = np.full(r + 2, h + 1, dtype=np.int64)
    for j in range(h, -1, -1):
        min_stamps[_bits_to_indices(layers[j], r + 2)] = j
    coverage = layers[h] & ((1 << (r + 2)) - 1)
    return ReachResult(r, coverage, min_stamps)


def digit_construction(h: int, m: int) -> SegmentBasis:
    """Stamps {i m^j : 1 <= i <= m-1, 0 <= j < h}; every value < m^h has a
    base-m expansion with at most h nonzero digits, so reach >= m^h - 1."""
    if m < 2 or h < 1:
        raise ValueError("need m >= 2 and h >= 1")
    stamps = sorted({i * m**j for j in range(h) for i in range(1, m)})
    return SegmentBasis(tuple(stamps), h)


def rohrbach_bounds(h: int, k: int) -> tuple[float, int]:
    """(k/h)^h <= n(h,k) <= C(h+k, h)."""
    return (k / h) ** h, math.comb(h + k, h)


def stohr_lower_bound(h: int, k: int) -> int:
    """(floor(h/k) + 1)^k, the Stohr lower bound as usually displayed.

    The digit argument behind it (k base-m digits, m = floor(h/k) + 1, each
    digit costing at most m - 1 stamps) only proves m^k - 1 <= n(h,k). For
    k = 1 the displayed form exceeds n(h,1) = h; for k >= 2 it held on every
    value we computed.
    """
    return (h // k + 1) ** k


class _Search:
    def __init__(self, h: int, k: int, budget: int):
        self.h, self.k = h, k
        self.budget = budget
        self.cells = 0
        self.nodes = 0
        self.best = -1
        self.witness: tuple[int, ...] | None = None
        # multisets of m stamps drawn from q new ones, indexed [q][m]
        self.multi = [[math.comb(m + q - 1, m) if q else int(m == 0) for m in range(h + 1)]
                      for q in range(k + 1)]

    def extend(self, layers: list[int], a: int) -> list[int]:
        new = [1]
        for j in range(1, self.h + 1):
            new.append(layers[j] | (new[j - 1] << a))
        self.cells += self.h * new[-1].bit_length()
        if self.cells > self.budget:
            raise SearchTooLarge(
                f"n({self.h},{self.k}) search exceeded {self.budget} DP cell updates"
            )
        return new

    def bound(self, layers: list[int], q: int) -> int:
        row = self.multi[q]
        return sum(row[m] * layers[self.h - m].bit_count() for m in range(self.h + 1)) - 1

    def run(self, prefix: tuple[int, ...], layers: list[int]) -> None:
        self.nodes += 1
        r = _trailing_ones(layers[self.h]) - 1
        q = self.k - len(prefix)
        if q == 0:
            if r > self.best:
                self.best, self.witness = r, prefix
            return
        if self.bound(layers, q) <= self.best:
            return
        for a in range(prefix[-1] + 1, r + 2):
            self.run(prefix + (a,), self.extend(layers, a))


def _search_branch(h: int, k: int, second: int | None, budget: int, floor: int):
    s = _Search(h, k, budget)
    s.best = floor
    base = s.extend([1] * (h + 1), 1)  # prefix (1,)
    if second is None:
        s.run((1,), base)
    else:
        s.run((1, second), s.extend(base, second))
    return s.best, s.witness, s.cells, s.nodes


def n_exact(h: int, k: int, config: SearchConfig | None = None) -> ExtremalRecord:
    """n(h, k) with the lexicographically smallest extremal stamp vector."""
    config = config or SearchConfig()
    if h < 1 or k < 1:
        raise ValueError("need h, k >= 1")
    budget = config.resolved_budget()
    if k == 1:
        return ExtremalRecord("n", {"h": h, "k": k}, h, (1,))
    if config.workers <= 1:
        best, witness, _, _ = _search_branch(h, k, None, budget, -1)
    else:
        # second stamp ranges over 2..h+1 (reach of {1} is h)
        seconds = list(range(2, h + 2))
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_search_branch, [h] * len(seconds), [k] * len(seconds),
                                    seconds, [budget] * len(seconds), [-1] * len(seconds)))
        if sum(r[2] for r in results) > budget:
            raise SearchTooLarge(f"n({h},{k}) search exceeded {budget} DP cell updates")
        best, witness = -1, None
        for value, wit, _, _ in results:  # seconds ascending = lexicographic order
            if wit is not None and value > best:
                best, witness = value, wit
    return ExtremalRecord("n", {"h": h, "k": k}, best, witness)


def s_ratio(h: int, k: int, config: SearchConfig | None = None) -> float:
    """(1/k) * (n(h,k) / h^k)^(-1/k)."""
    n = n_exact(h, k, config).value
    return (n / h**k) ** (-1.0 / k) / k
