"""Exact postage stamp quantities over Z_N.

For a k-set A of nonzero residues, l(r) is the least number of elements of A
(with repetition) summing to r mod N. The order of A_0 = A + {0} is max l(r).
Layers of the breadth-first expansion are Python integers used as N-bit sets;
one layer costs k rotate-and-OR passes.

The extremal searches use the fact that multiplying A by a unit of Z_N
preserves the order. Every orbit under the unit group contains a set whose
smallest element d divides N and satisfies d <= gcd(a, N) for all a in A.
The lexicographically smallest member of an orbit has that shape, so
enumerating only such sets, in lexicographic order, still returns the
lexicographically smallest witness over all k-subsets.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .config import SearchConfig
from .errors import SearchTooLarge


@dataclass(frozen=True)
class CyclicBasis:
    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(int(a) for a in self.elements))
        object.__setattr__(self, "elements", elems)
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not elems:
            raise ValueError("a cyclic basis needs at least one element")
        if len(set(elems)) != len(elems):
            raise ValueError(f"elements must be distinct: {elems}")
        if elems[0] < 1 or elems[-1] >= self.modulus:
            raise ValueError(f"elements must lie in 1..{self.modulus - 1}: {elems}")

    @property
    def k(self) -> int:
        return len(self.elements)

    def is_generating(self) -> bool:
        return math.gcd(self.modulus, *self.elements) == 1


@dataclass(frozen=True)
class OrderProfile:
    """``lengths[r]`` is l(r), or -1 where r is unreachable; ``order`` is None
    when A_0 does not generate Z_N."""

    modulus: int
    lengths: np.ndarray = field(repr=False, compare=False)
    order: int | None

    @property
    def is_basis(self) -> bool:
        return self.order is not None


@dataclass(frozen=True)
class ExtremalRecord:
    """An exact extremal value with the set achieving it.

    ``quantity`` is "n" (segment postage stamp number), "N" (cyclic postage
    stamp number) or "h" (least order of a (k+1)-element basis of Z_N);
    ``params`` holds (h, k) or (N, k) accordingly.
    """

    quantity: str
    params: dict
    value: int
    witness: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "params": dict(self.params),
            "value": self.value,
            "witness": list(self.witness),
        }


def _bits_to_indices(bits: int, width: int) -> np.ndarray:
    bits &= (1 << width) - 1
    raw = np.frombuffer(bits.to_bytes((width + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")[:width])


def _order(modulus: int, elements: Sequence[int], cap: int | None = None) -> int | None:
    """Order of A_0 in Z_N, or None if not a basis or if the order exceeds cap."""
    full = (1 << modulus) - 1
    shifts = [(a, modulus - a) for a in elements]
    reached = frontier = 1
    level = 0
    while reached != full:
        if level == cap:
            return None
        new = 0
        for up, down in shifts:
            new |= (frontier << up) | (frontier >> down)
        frontier = new & full & ~reached
        if not frontier:
            return None
        reached |= frontier
        level += 1
    return level


def cyclic_order(modulus: int, elements: Sequence[int], cap: int | None = None) -> int | None:
    """Order of A_0 = A + {0} in Z_modulus (elements are reduced mod modulus)."""
    residues = sorted({a % modulus for a in elements} - {0})
    if modulus == 1:
        return 0
    if not residues:
        return None
    return _order(modulus, residues, cap)


def order_profile(basis: CyclicBasis) -> OrderProfile:
    n = basis.modulus
    full = (1 << n) - 1
    shifts = [(a, n - a) for a in basis.elements]
    lengths = np.full(n, -1, dtype=np.int64)
    lengths[0] = 0
    reached = frontier = 1
    level = 0
    while reached != full:
        new = 0
        for up, down in shifts:
            new |= (frontier << up) | (frontier >> down)
        frontier = new & full & ~reached
        if not frontier:
            return OrderProfile(n, lengths, None)
        level += 1
        lengths[_bits_to_indices(frontier, n)] = level
        reached |= frontier
    return OrderProfile(n, lengths, level)


def digit_basis(modulus: int, k: int) -> tuple[int, ...]:
    """{1, m, ..., m^(k-1)} with m = ceil(N^(1/k)); order <= k(m-1) when valid."""
    from .primes import floor_kth_root

    m = floor_kth_root(modulus - 1, k) + 1  # smallest m with m**k >= modulus
    return tuple(m**j for j in range(k))


def counting_lower_bound(modulus: int, k: int) -> int:
    """Least h with C(h+k, k) >= N; no (k+1)-element basis of Z_N has smaller order."""
    h = 0
    while math.comb(h + k, k) < modulus:
        h += 1
    return h


def multiset_bound(h: int, k: int) -> int:
    """C(h+k, k): |hA_0| can never exceed this, so N(h,k) <= C(h+k, k)."""
    return math.comb(h + k, k)


# -- canonical enumeration --------------------------------------------------

def _prefixes(modulus: int, k: int) -> list[tuple[int, ...]]:
    """Work units in lexicographic order: (d,) for k <= 2, else (d, second)."""
    divisors = [d for d in range(1, modulus) if modulus % d == 0]
    out = []
    for d in divisors:
        if k <= 2:
            out.append((d,))
            continue
        for second in range(d + 1, modulus):
            if math.gcd(second, modulus) >= d:
                out.append((d, second))
    return out


def _sets_with_prefix(modulus: int, k: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    d = prefix[0]
    pool = [x for x in range(prefix[-1] + 1, modulus) if math.gcd(x, modulus) >= d]
    for rest in combinations(pool, k - len(prefix)):
        cand = prefix + rest
        if d == 1 or math.gcd(modulus, *cand) == 1:
            yield cand


def _best_in_prefix(
    modulus: int, k: int, prefix, floor: int, cap: int | None = None
) -> tuple[int, tuple[int, ...]] | None:
    """Lexicographically first set of minimum order within one work unit,
    considering only orders <= cap; stops early once ``floor`` is reached."""
    best = None
    for cand in _sets_with_prefix(modulus, k, prefix):
        order = _order(modulus, cand, cap)
        if order is not None:
            best = (order, cand)
            if order <= floor:
                break
            cap = order - 1
    return best


def _first_in_prefix(modulus: int, k: int, prefix, h: int) -> tuple[int, ...] | None:
    for cand in _sets_with_prefix(modulus, k, prefix):
        if _order(modulus, cand, h) is not None:
            return cand
    return None


def _map(fn, args: list[tuple], workers: int):
    if workers <= 1 or len(args) < 2:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*args)))


def _check_budget(modulus: int, k: int, budget: int, spent: int = 0) -> int:
    cost = math.comb(modulus - 1, k)
    if spent + cost > budget:
        raise SearchTooLarge(
            f"enumerating {k}-subsets of Z_{modulus} needs {spent + cost} > budget {budget}"
        )
    return spent + cost


def h_of(modulus: int, k: int, config: SearchConfig | None = None) -> ExtremalRecord:
    """h(N, k): least order of A_0 over all k-subsets A of Z_N minus {0}."""
    config = config or SearchConfig()
    if not (1 <= k and k + 1 <= modulus):
        raise ValueError(f"need 2 <= k+1 <= N, got N={modulus}, k={k}")
    _check_budget(modulus, k, config.resolved_budget())
    floor = counting_lower_bound(modulus, k)
    prefixes = _prefixes(modulus, k)

    if config.workers <= 1:
        best = None
        for prefix in prefixes:
            cap = None if best is None else best[0] - 1
            found = _best_in_prefix(modulus, k, prefix, floor, cap)
            if found is not None:
                best = found
                if best[0] <= floor:
                    break
    else:
        results = _map(_best_in_prefix, [(modulus, k, p, floor) for p in prefixes], config.workers)
        best = None
        for found in results:  # prefixes are in lexicographic order
            if found is not None and (best is None or found[0] < best[0]):
                best = found
    assert best is not None, "Z_N always has a basis containing 1"
    return ExtremalRecord("h", {"N": modulus, "k": k}, best[0], best[1])


def admits_order(modulus: int, k: int, h: int, workers: int = 1) -> tuple[int, ...] | None:
    """Lexicographically smallest k-subset of Z_N with order <= h, or None."""
    if k + 1 > modulus:
        return None
    prefixes = _prefixes(modulus, k)
    if workers <= 1:
        for prefix in prefixes:
            found = _first_in_prefix(modulus, k, prefix, h)
            if found is not None:
                return found
        return None
    for found in _map(_first_in_prefix, [(modulus, k, p, h) for p in prefixes], workers):
        if found is not None:
            return found
    return None


def big_n(h: int, k: int, config: SearchConfig | None = None) -> ExtremalRecord:
    """N(h, k): largest N with a k-subset of Z_N whose A_0 has order <= h.

    N is scanned downward from C(h+k, k) and the first feasible modulus wins;
    feasibility is not monotone in N, so nothing below is skipped.
    """
    config = config or SearchConfig()
    if h < 1 or k < 1:
        raise ValueError("need h, k >= 1")
    budget = config.resolved_budget()
    spent = 0
    for modulus in range(multiset_bound(h, k), k, -1):
        spent = _check_budget(modulus, k, budget, spent)
        witness = admits_order(modulus, k, h, config.workers)
        if witness is not None:
            return ExtremalRecord("N", {"h": h, "k": k}, modulus, witness)
    raise AssertionError("unreachable: {1..k} covers Z_{k+1} in one step")


def r_ratio(modulus: int, k: int, config: SearchConfig | None = None) -> float:
    """h(N,k) / (k * N^(1/k))."""
    return h_of(modulus, k, config).value / (k * modulus ** (1.0 / k))


def s_big_ratio(h: int, k: int, config: SearchConfig | None = None) -> float:
    """(1/k) * (N(h,k) / h^k)^(-1/k)."""
    n = big_n(h, k, config).value
    return (n / h**k) ** (-1.0 / k) / k


def wang_coppersmith_bounds(modulus: int, k: int) -> tuple[float, float]:
    """(lower, upper) = ((k! N)^(1/k) - (k+1)/2, k (N^(1/k) - 1))."""
    lower = (math.factorial(k) * modulus) ** (1.0 / k) - (k + 1) / 2
    upper = k * (modulus ** (1.0 / k) - 1)
    return lower, upper


def reverify(record: ExtremalRecord) -> bool:
    """Recompute the witness's order/reach and compare with the stored value."""
    if record.quantity == "h":
        return cyclic_order(record.params["N"], record.witness) == record.value
    if record.quantity == "N":
        order = cyclic_order(record.value, record.witness)
        return order is not None and order <= record.params["h"]
    if record.quantity == "n":
        from .segment import SegmentBasis, reach

        return reach(SegmentBasis(record.witness, record.params["h"])).reach == record.value
    raise ValueError(f"unknown quantity {record.quantity!r}")
