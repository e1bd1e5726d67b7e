"""Quick oracle-equivalence and invariant checks, runnable without pytest.

Each check returns (name, ok, detail). The grid sizes are small enough for
the whole run to take a few seconds; the pytest suite covers larger grids.
"""
from __future__ import annotations

import math

from . import oracles
from .cyclic import big_n, cyclic_order, digit_basis, h_of
from .construct.section3 import build_section3
from .construct.section4 import build_section4, crt_check
from .intbasis import StructuredIntegerBasis, basis_order, enumerate_essential
from .primes import floor_kth_root, sieve
from .segment import SegmentBasis, n_exact, reach


def _cyclic_oracle():
    bad = []
    for N in range(3, 21):
        for k in (1, 2, 3):
            if k + 1 > N:
                continue
            rec = h_of(N, k)
            ref, wit = oracles.naive_h(N, k)
            if (rec.value, rec.witness) != (ref, wit):
                bad.append((N, k, rec.value, ref))
    return not bad, f"h(N,k) vs naive for N <= 20, k <= 3; mismatches {bad}"


def _big_n_oracle():
    bad = []
    for k in (1, 2):
        for h in range(1, 5):
            if math.comb(h + k, k) > 20:
                continue
            if big_n(h, k).value != oracles.naive_big_n(h, k):
                bad.append((h, k))
    return not bad, f"N(h,k) vs naive where C(h+k,k) <= 20; mismatches {bad}"


def _segment_oracle():
    bad = []
    for h in range(1, 6):
        for k in range(1, 7 - h):
            rec = n_exact(h, k)
            ref, wit = oracles.chain_n(h, k)
            if (rec.value, rec.witness) != (ref, wit):
                bad.append((h, k, rec.value, ref))
    return not bad, f"n(h,k) vs unpruned chain search for h+k <= 6; mismatches {bad}"


def _reach_oracle():
    cases = [((1, 3, 4), 2), ((1, 2, 3, 6), 2), ((1, 2, 4), 3), ((1, 5, 7), 4)]
    bad = [(s, h) for s, h in cases if reach(SegmentBasis(s, h)).reach != oracles.naive_reach(s, h)]
    return not bad, f"reach vs plain DP on fixtures; mismatches {bad}"


def _digit_upper_bound():
    bad = []
    for N in range(2, 60):
        for k in (1, 2, 3):
            if k + 1 > N:
                continue
            order = cyclic_order(N, digit_basis(N, k))
            m = floor_kth_root(N - 1, k) + 1
            if order is None or order > k * (m - 1):
                bad.append((N, k))
    return not bad, f"digit basis order <= k(ceil(N^(1/k)) - 1) for N < 60; failures {bad}"


def _fixture():
    A = StructuredIntegerBasis(6, (1, 2, 3, 4, 5))
    found = [e.members for e in enumerate_essential(A)]
    ok = basis_order(A) == 2 and found == [(1, 3, 5), (1, 2, 4, 5)]
    return ok, f"P=6, E={{1..5}}: order {basis_order(A)}, essential {found}"


def _essential_oracle():
    bad = []
    for P in (4, 6, 10, 12, 30):
        for E in ((1, 2, 3), tuple(range(1, min(P, 9))), (2, 3, 4), (1, 5, 7), (3, 4, 9)):
            E = tuple(e for e in E if e % P)
            B = StructuredIntegerBasis(P, E)
            if basis_order(B) is None:
                continue
            fast = sorted(e.members for e in enumerate_essential(B) if e.size <= 4)
            if fast != sorted(oracles.brute_essential(P, E)):
                bad.append((P, E))
    return not bad, f"essential subsets vs brute-force removal; mismatches {bad}"


def _sieve():
    table = sieve(10**5)
    trial = [n for n in range(2, 10**5 + 1) if all(n % d for d in range(2, math.isqrt(n) + 1))]
    return list(table.primes) == trial, f"sieve(1e5) vs trial division: {len(table.primes)} primes"


def _section3():
    out = []
    for h, k in ((2, 24), (3, 30)):
        plan, basis = build_section3(h, k)
        out.append((h, k, basis_order(basis), plan.s))
    return True, f"builds (h, k, order, s): {out}"


def _section4():
    plan, basis = build_section4(10, 2, [5, 7, 11])
    chk = crt_check(plan)
    return chk.holds and basis_order(basis) == 10, f"primes (5,7,11): order 10, CRT {chk.order_mod_P} = {sum(chk.per_prime)}"


CHECKS = [
    ("cyclic-oracle", _cyclic_oracle),
    ("big-n-oracle", _big_n_oracle),
    ("segment-oracle", _segment_oracle),
    ("reach-oracle", _reach_oracle),
    ("digit-upper-bound", _digit_upper_bound),
    ("df-fixture", _fixture),
    ("essential-oracle", _essential_oracle),
    ("sieve", _sieve),
    ("section3", _section3),
    ("section4", _section4),
]


def run_selftest():
    results = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed runner
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, ok, detail))
    return results
