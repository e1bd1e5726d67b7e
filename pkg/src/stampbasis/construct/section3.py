"""Bases of order h with many essential subsets of size k, h fixed.

P is the product of the first s primes, s the largest value with
(h s) P^(1/(h-1)) <= k. A base-m digit set F (m = ceil(P^(1/(h-1)))) has order
at most h-1 modulo P. Writing E_i = {e : p_i does not divide e}, the sizes
|E_i| are then raised to exactly k by adding fillers from

    G_i = {x : p_i | x and gcd(x, p_j) = 1 for j != i},

which land in every E_j except E_i. With f_i = |F_i| the counts g_i solve
f_i + sum_{j != i} g_j = k, i.e. g_i = (k + (s-1) f_i - sum f) / (s-1); a few
multiples of p_{s-1} p_s (which raise f_i for i <= s-2 only) first make
k - sum f divisible by s-1, so every g_i is an integer.

|G_i intersected with [1, P)| is far smaller than g_i at small P, so fillers
and padding are lifts r + jP of one fixed residue class r per role (smallest
such r, smallest lifts first). Lifting keeps divisibility by every p_j, so
the sets E_i behave exactly as for residues, and the residues of E are F plus
at most s + 1 extra classes.

Condition (i) asks for order exactly h-1 modulo P. At small P the digit seed
can already do better than h-1, which would make A a basis of order below h.
In that case the seed is thinned: its elements are dropped, largest first,
while the residue set keeps order at most h-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count

from ..cyclic import cyclic_order
from ..errors import Infeasible
from ..intbasis import StructuredIntegerBasis, basis_order, enumerate_essential
from ..primes import first_primes, floor_kth_root


def ceil_root(m: int, r: int) -> int:
    x = floor_kth_root(m, r)
    return x if x**r == m else x + 1


def choose_s(h: int, k: int) -> int:
    """Largest s with (h s)^(h-1) * p_1...p_s <= k^(h-1) (exact integers)."""
    s, P = 0, 1
    for p in first_primes(64):
        if (h * (s + 1)) ** (h - 1) * (P * p) > k ** (h - 1):
            return s
        s, P = s + 1, P * p
    return s


def digit_seed(P: int, h: int) -> tuple[int, ...]:
    """{i m^j < P : 1 <= i < m, 0 <= j <= h-2}; order at most h-1 modulo P."""
    m = ceil_root(P, h - 1)
    return tuple(sorted({i * m**j for j in range(h - 1) for i in range(1, m) if i * m**j < P}))


@dataclass(frozen=True)
class Section3Plan:
    h: int
    k: int
    s: int
    P: int
    primes: tuple[int, ...]
    F: tuple[int, ...]  # digit seed, possibly thinned
    thinned: tuple[int, ...]  # seed elements dropped to keep order h-1
    padding: tuple[int, ...]  # multiples of p_{s-1} p_s added to make sum f divisible
    f: tuple[int, ...]  # |F_i| after padding
    g: tuple[int, ...]  # filler counts
    fillers: tuple[tuple[int, ...], ...]  # fillers[i] drawn from G_i

    @property
    def elements(self) -> tuple[int, ...]:
        out = set(self.F) | set(self.padding)
        for fill in self.fillers:
            out |= set(fill)
        return tuple(sorted(out))


def _class_rep(P: int, predicate) -> int:
    return next(r for r in range(1, P) if predicate(r))


def _lifts(r: int, P: int, taken: set, how_many: int) -> tuple[int, ...]:
    """The how_many smallest x = r (mod P) not already taken."""
    out = []
    if how_many <= 0:
        return ()
    for j in count(0):
        x = r + j * P
        if x not in taken:
            out.append(x)
            if len(out) == how_many:
                return tuple(out)


def _thin(F: tuple[int, ...], extra: set, P: int, target: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Drop seed elements, largest first, while order(F + extra) stays <= target."""
    keep = list(F)
    order = cyclic_order(P, set(keep) | extra)
    dropped = []
    if order is not None and order >= target:
        return tuple(keep), ()
    for e in sorted(F, reverse=True):
        trial = [x for x in keep if x != e]
        o = cyclic_order(P, set(trial) | extra, cap=target)
        if o is not None and o <= target:
            keep, order = trial, o
            dropped.append(e)
            if order == target:
                break
    return tuple(keep), tuple(sorted(dropped))


def plan_section3(h: int, k: int) -> Section3Plan:
    if h < 2:
        raise ValueError("need h >= 2")
    s = choose_s(h, k)
    if s == 0:
        raise Infeasible(f"no s >= 1 satisfies (h s) P^(1/(h-1)) <= k for h={h}, k={k}")
    primes = tuple(first_primes(s))
    P = 1
    for p in primes:
        P *= p
    F = digit_seed(P, h)

    def f_counts(elems):
        return [sum(1 for e in elems if e % p) for p in primes]

    if h - 1 > P - 1:
        raise Infeasible(f"no residue set mod P={P} has order h-1={h - 1}")
    if s == 1:
        # one essential subset E_1 = odd elements, topped up with odd lifts
        F, dropped = _thin(F, set(), P, h - 1)
        f = f_counts(F)
        if f[0] > k:
            raise Infeasible(f"|F_1| = {f[0]} already exceeds k={k}")
        extra = _lifts(1, P, set(F), k - f[0])
        return Section3Plan(h, k, 1, P, primes, F, dropped, extra, (k,), (0,), ((),))

    reps = [
        _class_rep(P, lambda x, i=i: x % primes[i] == 0 and all(x % q for j, q in enumerate(primes) if j != i))
        for i in range(s)
    ]
    pad_rep = None
    if s >= 3:
        q = primes[-2] * primes[-1]
        pad_rep = _class_rep(P, lambda x: x % q == 0 and all(x % p for p in primes[:-2]))
    F, dropped = _thin(F, set(reps), P, h - 1)
    taken = set(F)

    padding: tuple[int, ...] = ()
    if s >= 3:
        # each pad raises sum f by s-2, i.e. lowers it by 1 mod (s-1)
        need = (sum(f_counts(F)) - k) % (s - 1)
        padding = _lifts(pad_rep, P, taken, need)
        taken |= set(padding)
    f = f_counts(F + padding)
    total = sum(f)
    assert (k - total) % (s - 1) == 0
    g = [(k + (s - 1) * fi - total) // (s - 1) for fi in f]
    if min(g) < 0:
        raise Infeasible(f"negative filler count g={g} for h={h}, k={k}")
    fillers = []
    for i in range(s):
        drawn = _lifts(reps[i], P, taken, g[i])
        taken |= set(drawn)
        fillers.append(drawn)
    return Section3Plan(h, k, s, P, primes, F, dropped, padding, tuple(f), tuple(g), tuple(fillers))


def build_section3(h: int, k: int) -> tuple[Section3Plan, StructuredIntegerBasis]:
    """Plan and verified basis; raises Infeasible if any check fails."""
    plan = plan_section3(h, k)
    basis = StructuredIntegerBasis(plan.P, plan.elements)
    order = basis_order(basis)
    if order != h:
        raise Infeasible(f"assembled basis has order {order}, wanted {h}")
    found = enumerate_essential(basis)
    if len(found) != plan.s or any(e.size != k for e in found):
        raise Infeasible(
            f"expected {plan.s} essential subsets of size {k}, found sizes {[e.size for e in found]}"
        )
    return plan, basis
