import math
from itertools import combinations

import pytest

from stampbasis.construct.section3 import build_section3, choose_s, digit_seed, plan_section3
from stampbasis.errors import Infeasible
from stampbasis.intbasis import basis_order, difference_gcd, enumerate_essential, verify_essential
from stampbasis.primes import primorial


@pytest.mark.parametrize("h,k,s", [(2, 24, 2), (3, 30, 2)])
def test_examples(h, k, s):
    plan, basis = build_section3(h, k)
    assert plan.s == s and plan.P == 6
    assert basis_order(basis) == h
    found = enumerate_essential(basis)
    assert len(found) == s and all(e.size == k for e in found)
    assert all(verify_essential(basis, e.members).is_essential for e in found)
    gcds = [e.induced_gcd for e in found]
    assert all(math.gcd(a, b) == 1 for a, b in combinations(gcds, 2))


def test_hand_computed_plans():
    p = plan_section3(3, 30)
    assert (p.F, p.f, p.g) == ((1, 2, 3), (2, 2), (28, 28))
    p = plan_section3(2, 24)
    assert (p.F, p.f, p.g) == ((1, 2, 3, 4, 5), (3, 4), (20, 21))


def test_infeasible_small_k():
    with pytest.raises(Infeasible):
        build_section3(3, 2)


def test_choose_s_is_maximal():
    for h in (2, 3, 4):
        for k in (10, 50, 200, 1000):
            s = choose_s(h, k)
            ok = lambda t: t == 0 or (h * t) ** (h - 1) * primorial(t) <= k ** (h - 1)
            assert ok(s) and not ok(s + 1)


def test_digit_seed_order():
    from stampbasis.cyclic import cyclic_order
    for P, h in [(30, 3), (210, 3), (2310, 4), (30, 2)]:
        F = digit_seed(P, h)
        assert cyclic_order(P, F) <= h - 1
        assert len(F) <= (h - 1) * math.ceil(P ** (1 / (h - 1)))


def test_grid_of_builds():
    built = 0
    for h in (2, 3, 4):
        for k in range(10, 200, 7):
            try:
                plan, basis = build_section3(h, k)
            except Infeasible:
                continue
            built += 1
            found = enumerate_essential(basis)
            assert basis_order(basis) == h
            assert len(found) == plan.s and {e.size for e in found} == {k}
            assert sorted(e.witness_prime for e in found) == list(plan.primes)
    assert built > 50


def test_larger_primorial():
    plan, basis = build_section3(3, 300)
    assert plan.s >= 3
    assert len(enumerate_essential(basis)) == plan.s
