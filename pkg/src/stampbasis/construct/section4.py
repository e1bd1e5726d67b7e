"""Bases of order h with many essential subsets of size k, k fixed.

For primes p_1, ..., p_m (all larger than the k-th prime) pick k-element bases
A_i of Z_{p_i} of order r_i from the A_t family, and put P = prod p_i,
P_i = P / p_i, E_i = {a P_i : a in A_i}. Every element of E_j (j != i)
vanishes mod p_i, so by the Chinese remainder theorem the least number of
elements of E = union E_i summing to r mod P is sum_i l_{A_i}(r mod p_i), and

    order(P N + E) = 1 + sum_i r_i.

The requested order h therefore needs sum r_i = h - 1. Removing E_i leaves
only multiples of p_i, and E_i is exactly {e in E : p_i does not divide e},
so the E_i are the essential subsets, each of size k.

Orders come from per-prime menus: the BFS-verified orders met while sweeping
t. Offsets s_i = r_i - k x_i in {0, 1} are preferred; the full menu is the
fallback. At desk scale P must stay small, so instead of all primes up to
(1 + eps) n the automatic mode takes a prefix of eligible primes plus one
further prime and searches for the largest such set that reaches h.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ..cyclic import cyclic_order
from ..errors import Infeasible, PreconditionFailed
from ..intbasis import StructuredIntegerBasis, basis_order, enumerate_essential
from ..primes import first_primes, floor_kth_root, is_prime, sieve
from .thm44 import check_precondition, iter_sweep

DEFAULT_PRIME_BUDGET = 10**7


@dataclass(frozen=True)
class PrimeChoice:
    p: int
    x: int
    t: int
    elements: tuple[int, ...]  # A_i as residues mod p
    order: int  # r_i, BFS-verified

    @property
    def offset(self) -> int:
        """s_i in r_i = k x + s_i."""
        return self.order - len(self.elements) * self.x


@dataclass(frozen=True)
class Section4Plan:
    h: int
    k: int
    s_rem: int  # h mod k
    h1: int  # h div k
    choices: tuple[PrimeChoice, ...]
    P: int

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(c.p for c in self.choices)

    @property
    def cofactors(self) -> tuple[int, ...]:
        return tuple(self.P // c.p for c in self.choices)

    @property
    def essential_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(sorted(a * cof for a in c.elements)) for c, cof in zip(self.choices, self.cofactors)
        )

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(e for E in self.essential_sets for e in E))

    @property
    def count(self) -> int:
        return len(self.choices)


def order_menu(p: int, k: int) -> dict[int, PrimeChoice]:
    """Verified order -> first A_t in the sweep achieving it."""
    check_precondition(p, k)
    x = floor_kth_root(p, k)
    menu: dict[int, PrimeChoice] = {}
    for pt in iter_sweep(p, k):
        order = k * x - k + pt.verified_offset
        menu.setdefault(order, PrimeChoice(p, x, pt.t, pt.elements, order))
    return menu


def _pick(menus: list[dict[int, PrimeChoice]], target: int) -> list[PrimeChoice] | None:
    """One entry per menu with orders summing to target (first found in menu order)."""
    reach = {0: []}
    for menu in menus:
        nxt = {}
        for total, picked in reach.items():
            for order in sorted(menu):
                nxt.setdefault(total + order, picked + [menu[order]])
        reach = nxt
    return reach.get(target)


def _sums(menus: list[dict[int, PrimeChoice]]) -> set[int]:
    sums = {0}
    for menu in menus:
        sums = {a + b for a in sums for b in menu}
    return sums


def choose_orders(menus: list[dict[int, PrimeChoice]], target: int) -> list[PrimeChoice] | None:
    """Prefer offsets s_i in {0, 1}; fall back to the whole menu."""
    narrow = [{o: c for o, c in m.items() if c.offset in (0, 1)} for m in menus]
    if all(narrow):
        picked = _pick(narrow, target)
        if picked is not None:
            return picked
    return _pick(menus, target)


def eligible_primes(k: int, limit: int) -> list[int]:
    """Primes above p_k, below limit, meeting the A_t precondition."""
    p_k = first_primes(k)[-1]
    out = []
    for p in sieve(limit).primes:
        if p <= p_k:
            continue
        try:
            check_precondition(int(p), k)
        except PreconditionFailed:
            continue
        out.append(int(p))
    return out


def _assemble(h: int, k: int, picked: list[PrimeChoice]) -> Section4Plan:
    P = math.prod(c.p for c in picked)
    return Section4Plan(h, k, h % k, h // k, tuple(picked), P)


def _from_primes(h: int, k: int, primes: list[int]) -> tuple[Section4Plan | None, set[int]]:
    menus = [order_menu(p, k) for p in primes]
    picked = choose_orders(menus, h - 1)
    achievable = {1 + s for s in _sums(menus)}
    return (_assemble(h, k, picked) if picked else None), achievable


def _nearest(h: int, achievable: set[int], n: int = 3) -> list[int]:
    return sorted(sorted(achievable, key=lambda v: (abs(v - h), v))[:n])


def plan_section4(
    h: int, k: int, primes: list[int] | None = None, prime_budget: int = DEFAULT_PRIME_BUDGET
) -> Section4Plan:
    if k < 2:
        raise ValueError("need k >= 2")
    if h < 2:
        raise ValueError("need h >= 2")
    if primes is not None:
        primes = sorted(set(int(p) for p in primes))
        p_k = first_primes(k)[-1]
        for p in primes:
            if not is_prime(p):
                raise PreconditionFailed(f"{p} is not prime")
            if p <= p_k:
                raise PreconditionFailed(f"prime {p} is not above p_k = {p_k}")
        if math.prod(primes) > prime_budget:
            raise Infeasible(f"product of {primes} exceeds the prime budget {prime_budget}")
        plan, achievable = _from_primes(h, k, primes)
        if plan is None:
            raise Infeasible(
                f"no orders on primes {primes} sum to h-1={h - 1}; nearest achievable h: "
                f"{_nearest(h, achievable)}"
            )
        return plan

    # automatic: a prefix of eligible primes plus one further prime
    pool = eligible_primes(k, min(prime_budget, 10**6) + 1)
    achievable: set[int] = set()
    max_m = 0
    prod = 1
    for p in pool:
        if prod * p > prime_budget:
            break
        prod *= p
        max_m += 1
    for m in range(max_m, 0, -1):
        prefix = pool[: m - 1]
        base = math.prod(prefix)
        prefix_menus = [order_menu(p, k) for p in prefix]
        prefix_sums = _sums(prefix_menus)
        for w in pool[m - 1 :]:
            if base * w > prime_budget:
                break
            menus = prefix_menus + [order_menu(w, k)]
            window_sums = {1 + a + b for a in prefix_sums for b in menus[-1]}
            achievable |= window_sums
            if h not in window_sums:
                # the smallest order grows with w: stop once even that overshoots
                if min(window_sums) > h:
                    break
                continue
            picked = choose_orders(menus, h - 1)
            if picked is not None:
                return _assemble(h, k, picked)
    raise Infeasible(
        f"no prime set with product <= {prime_budget} reaches h={h} for k={k}; "
        f"nearest achievable h: {_nearest(h, achievable)}"
    )


@dataclass(frozen=True)
class CrtCheck:
    order_mod_P: int  # max_r l_E(r) over Z_P
    per_prime: tuple[int, ...]  # max l over Z_{p_i}

    @property
    def holds(self) -> bool:
        return self.order_mod_P == sum(self.per_prime)


def crt_check(plan: Section4Plan) -> CrtCheck:
    per = tuple(cyclic_order(c.p, c.elements) for c in plan.choices)
    total = cyclic_order(plan.P, plan.elements)
    return CrtCheck(total, per)


def build_section4(
    h: int, k: int, primes: list[int] | None = None, prime_budget: int = DEFAULT_PRIME_BUDGET
) -> tuple[Section4Plan, StructuredIntegerBasis]:
    """Plan and verified basis (order, essential subsets, sizes)."""
    plan = plan_section4(h, k, primes, prime_budget)
    basis = StructuredIntegerBasis(plan.P, plan.elements)
    order = basis_order(basis)
    if order != h:
        raise Infeasible(f"assembled basis has order {order}, wanted {h}")
    found = {e.members for e in enumerate_essential(basis)}
    if found != set(plan.essential_sets) or any(len(E) != k for E in found):
        raise Infeasible("essential subsets differ from the constructed E_i")
    return plan, basis
