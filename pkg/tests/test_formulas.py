import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from stampbasis.construct.formulas import (
    formula_e_upper,
    formula_f,
    formula_f_k1,
    kth_root_partial_sum,
    primorial_lower_bound,
)
from stampbasis.primes import primorial


@given(st.floats(2, 1e6))
def test_f_k1_identity(h):
    assert formula_f(h, 1) == pytest.approx(formula_f_k1(h), rel=1e-12)


def test_f_values():
    assert formula_f(4, 1) == pytest.approx(3.397, abs=1e-3)
    for k in (1, 2, 5):
        expected = (k + 1) / k**2 * k ** (1 / (k + 1)) * math.e ** (k / (k + 1))
        assert formula_f(math.e, k) == pytest.approx(expected)
    with pytest.raises(ValueError):
        formula_f(1.5, 2)


def test_e_upper():
    assert formula_e_upper(2, math.e**math.e) == pytest.approx(math.e)
    assert formula_e_upper(1, 50) == 0
    assert formula_e_upper(3, 100) == pytest.approx(2 * math.log(100) / math.log(math.log(100)))
    assert formula_e_upper(3, 100) == pytest.approx(6.031, abs=1e-3)
    with pytest.raises(ValueError):
        formula_e_upper(3, 2)


def test_primorial_bound():
    assert primorial_lower_bound(3)[0] == 30
    assert primorial_lower_bound(5)[0] == 2310
    ratios = [primorial_lower_bound(s)[2] for s in range(2, 26)]
    assert min(ratios) > 0.3
    assert all(primorial_lower_bound(s)[0] == primorial(s) for s in range(2, 26))


def test_root_partial_sum():
    exact, _ = kth_root_partial_sum(2, 1)
    assert exact == 5
    exact, comp = kth_root_partial_sum(10**4, 1)
    assert abs(exact / comp - 1) < 0.25


def test_root_partial_sum_k2_drift():
    # the ratio stays within a few percent of 1; at these n it still creeps upward
    ratios = [np.divide(*kth_root_partial_sum(n, 2)) for n in (10**3, 10**4, 10**5)]
    assert all(abs(r - 1) < 0.05 for r in ratios)
    assert ratios[0] < ratios[1] < ratios[2]
