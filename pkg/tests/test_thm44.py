import math

import pytest

from stampbasis.construct.thm44 import (
    build_thm44,
    check_precondition,
    consecutive_run,
    f_prime,
    f_real,
    family_elements,
    formula_offset,
    sweep,
)
from stampbasis.cyclic import cyclic_order
from stampbasis.errors import PreconditionFailed, TargetNotReached
from stampbasis.primes import floor_kth_root, is_prime


def test_build_examples():
    b0 = build_thm44(1009, 2, 0)
    assert b0.x == 31 and b0.order == 62 and b0.elements == (1, 31 - b0.t)
    assert cyclic_order(1009, b0.elements) == 62
    b1 = build_thm44(1009, 2, 1)
    assert b1.order == 63 and cyclic_order(1009, b1.elements) == 63
    assert 0 < b0.epsilon < 1


def test_precondition():
    with pytest.raises(PreconditionFailed):
        check_precondition(1000, 2)
    with pytest.raises(PreconditionFailed):
        check_precondition(1009, 1)
    with pytest.raises(PreconditionFailed):
        check_precondition(5, 3)  # x = 1
    check_precondition(1009, 3)


def test_target_not_reached_reports_run():
    with pytest.raises(TargetNotReached) as err:
        build_thm44(1009, 2, 50)
    assert err.value.run and min(err.value.run) >= 0


def test_v0_in_range():
    for p in (1009, 2003, 5003, 9973):
        for k in (2, 3):
            pts = sweep(p, k)
            assert 0 <= pts[0].formula_offset <= k
            if k == 2:
                assert 0 <= pts[0].verified_offset <= k
            else:
                # wraparound can push the true order below kx - k
                assert pts[0].verified_offset <= pts[0].formula_offset


def test_formula_offset_is_exact_ceiling():
    for p in (1009, 7919):
        for k in (2, 3):
            x = floor_kth_root(p, k)
            for t in range(0, x // 3):
                assert formula_offset(p, k, t) == math.ceil(f_real(t, p, k) - 1e-12)


def test_k2_formula_matches_bfs():
    for p in (1009, 2003, 4001, 8009):
        assert all(pt.agrees for pt in sweep(p, 2))


def test_formula_upper_bounds_bfs_for_k3():
    # wraparound can only shorten representations
    for p in (1009, 3001, 9001):
        assert all(pt.verified_offset <= pt.formula_offset for pt in sweep(p, 3))


def test_derivative_matches_finite_difference():
    for p, k in [(1009, 2), (7919, 3), (10007, 2)]:
        x = floor_kth_root(p, k)
        for xi in (0.0, x / 8, x / 4, x / 2):
            h = 1e-3
            fd = (f_real(xi + h, p, k) - f_real(xi - h, p, k)) / (2 * h)
            assert abs(fd - f_prime(xi, p, k)) < 1e-6


def test_runs():
    for p in (1009, 4001, 9973):
        b = build_thm44(p, 2)
        assert b.run_length() >= 2
    assert consecutive_run([]) == 0


def test_family_validity():
    assert family_elements(1009, 2, 0) == (1, 31)
    assert family_elements(7, 2, 2) is None  # x - t = 0
