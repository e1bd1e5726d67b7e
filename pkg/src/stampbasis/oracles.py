"""Slow reference implementations used to cross-check the fast kernels.

Nothing here shares code with the kernels: no bitsets, no pruning, no
normalization. Each function tries every candidate the definition allows.
"""
from __future__ import annotations

import math
from itertools import combinations


def naive_lengths(modulus: int, elements) -> list[float]:
    """l(r) by relaxing r -> r + a until nothing improves."""
    inf = math.inf
    best = [inf] * modulus
    best[0] = 0
    changed = True
    while changed:
        changed = False
        for r in range(modulus):
            if best[r] == inf:
                continue
            for a in elements:
                s = (r + a) % modulus
                if best[r] + 1 < best[s]:
                    best[s] = best[r] + 1
                    changed = True
    return best


def naive_order(modulus: int, elements) -> int | None:
    m = max(naive_lengths(modulus, elements))
    return None if m == math.inf else int(m)


def naive_h(modulus: int, k: int) -> tuple[int, tuple[int, ...]]:
    """min order over all k-subsets, with the lexicographically first minimizer."""
    best, witness = math.inf, None
    for A in combinations(range(1, modulus), k):
        o = naive_order(modulus, A)
        if o is not None and o < best:
            best, witness = o, A
    return best, witness


def naive_big_n(h: int, k: int) -> int:
    """Largest N admitting a k-subset of order <= h (scan every N up to the multiset bound)."""
    best = None
    for N in range(k + 1, math.comb(h + k, k) + 1):
        for A in combinations(range(1, N), k):
            o = naive_order(N, A)
            if o is not None and o <= h:
                best = N
                break
    return best


def naive_reach(stamps, h: int) -> int:
    """First value needing more than h stamps, minus one (plain min-count DP)."""
    stamps = sorted(stamps)
    limit = h * stamps[-1] + 2
    count = [0] + [math.inf] * limit
    for v in range(1, limit + 1):
        count[v] = min((count[v - a] + 1 for a in stamps if a <= v), default=math.inf)
        if count[v] > h:
            return v - 1
    return limit


def chain_n(h: int, k: int) -> tuple[int, tuple[int, ...]]:
    """n(h, k) over every chain 1 = a_1 < ... < a_k with a_{i+1} <= reach + 1 (no bound pruning)."""
    best, witness = -1, None

    def walk(prefix):
        nonlocal best, witness
        r = naive_reach(prefix, h)
        if len(prefix) == k:
            if r > best:
                best, witness = r, tuple(prefix)
            return
        for a in range(prefix[-1] + 1, r + 2):
            walk(prefix + [a])

    walk([1])
    return best, witness


def brute_n(h: int, k: int) -> int:
    """n(h, k) over all k-subsets of {1, ..., C(h+k, h) + 1}."""
    top = math.comb(h + k, h) + 1
    best = 0
    for A in combinations(range(1, top + 1), k):
        if A[0] == 1:
            best = max(best, naive_reach(A, h))
    return best


def brute_essential(period: int, elements, max_size: int = 4) -> list[tuple[int, ...]]:
    """Every C with |C| <= max_size whose removal breaks the basis and is minimal.

    Removal breaks P N + E when the remaining residues fail to generate Z_P,
    tested by the naive length table rather than by a gcd.
    """
    elements = tuple(sorted(elements))

    def breaks(removed):
        rest = {e % period for e in elements if e not in removed}
        return not rest or naive_order(period, rest) is None

    out = []
    for size in range(1, max_size + 1):
        for C in combinations(elements, size):
            s = set(C)
            if breaks(s) and all(not breaks(s - {e}) for e in C):
                out.append(C)
    return out
