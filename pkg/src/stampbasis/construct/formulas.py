"""Closed-form asymptotic comparators. These are evaluated and reported; the
exact constructions live in the sibling modules."""
from __future__ import annotations

import math

from ..primes import first_primes, primorial


def formula_f(h: float, k: int) -> float:
    """(k+1)/k^2 * k^(1/(k+1)) * (h^k / log h)^(1/(k+1))."""
    if h < 2:
        raise ValueError(f"need h >= 2 so that log h > 0, got {h}")
    if k < 1:
        raise ValueError("need k >= 1")
    return (k + 1) / k**2 * k ** (1.0 / (k + 1)) * (h**k / math.log(h)) ** (1.0 / (k + 1))


def formula_f_k1(h: float) -> float:
    """2 * sqrt(h / log h), the k = 1 case written directly."""
    return 2.0 * math.sqrt(h / math.log(h))


def formula_e_upper(h: int, k: float) -> float:
    """(h-1) * log k / log log k, the fixed-h growth of E(h, k)."""
    if k < 3:
        raise ValueError(f"need k >= 3 so that log log k > 0, got {k}")
    return (h - 1) * math.log(k) / math.log(math.log(k))


def primorial_lower_bound(s: int) -> tuple[int, float, float]:
    """(p_1 ... p_s, (s log s)^s, primorial^(1/s) / (s log s)).

    The last entry is the empirical constant 1/alpha in primorial >~ (s log s / alpha)^s.
    """
    if s < 2:
        raise ValueError("need s >= 2")
    exact = primorial(s)
    comparator = (s * math.log(s)) ** s
    ratio = math.exp(math.log(exact) / s) / (s * math.log(s))
    return exact, comparator, ratio


def kth_root_partial_sum(n: int, k: int) -> tuple[float, float]:
    """(sum_{i<=n} p_i^(1/k), k/(k+1) * (n^(k+1) log n)^(1/k))."""
    if n < 2:
        raise ValueError("need n >= 2")
    exact = math.fsum(p ** (1.0 / k) for p in first_primes(n))
    comparator = k / (k + 1) * (n ** (k + 1) * math.log(n)) ** (1.0 / k)
    return exact, comparator
