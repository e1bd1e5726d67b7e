"""Near-extremal (k+1)-element bases of Z_p of prescribed order.

With x = floor(p^(1/k)) the family is

    A_t = {1, x, x^2, ..., x^(k-2), x^(k-2) (x - t)}   (mod p).

A mixed-radix (greedy) representation of every residue gives an order of
(kx - k) + v_t with v_t = ceil(f(t)),

    f(xi) = (S + xi x^(k-1)) / (x^(k-2) (x - xi)) - (xi + 1),   S = p + 1 - x^k.

That value is an upper bound. For k = 2 it matches the breadth-first order on
every prime we have tried; for k >= 3, sums that wrap around p sometimes give
shorter representations and the true order is smaller. The BFS order is
therefore authoritative and the formula value is carried alongside it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..cyclic import cyclic_order
from ..errors import PreconditionFailed, TargetNotReached
from ..primes import floor_kth_root, is_prime


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def sigma(p: int, k: int) -> int:
    """S = p + 1 - x^k, the t-independent right-hand side of the greedy bound."""
    return p + 1 - floor_kth_root(p, k) ** k


def f_real(xi: float, p: int, k: int) -> float:
    x = floor_kth_root(p, k)
    return (sigma(p, k) + xi * x ** (k - 1)) / (x ** (k - 2) * (x - xi)) - (xi + 1)


def f_prime(xi: float, p: int, k: int) -> float:
    """Closed-form derivative (p + 1) / (x^(k-2) (x - xi)^2) - 1."""
    x = floor_kth_root(p, k)
    return (p + 1) / (x ** (k - 2) * (x - xi) ** 2) - 1


def formula_offset(p: int, k: int, t: int) -> int:
    """v_t = ceil(f(t)), computed in exact integer arithmetic."""
    x = floor_kth_root(p, k)
    return _ceil_div(sigma(p, k) + t * x ** (k - 1), x ** (k - 2) * (x - t)) - (t + 1)


def family_elements(p: int, k: int, t: int) -> tuple[int, ...] | None:
    """A_t reduced mod p, or None when the k residues are not distinct and nonzero."""
    x = floor_kth_root(p, k)
    raw = [x**j for j in range(k - 1)] + [x ** (k - 2) * (x - t)]
    residues = [a % p for a in raw]
    if 0 in residues or len(set(residues)) != k:
        return None
    return tuple(residues)


def default_t_max(x: int) -> int:
    """floor(x (1 - 1/sqrt 2)): where f' stays below about 1."""
    return math.floor(x * (1 - 1 / math.sqrt(2)))


def check_precondition(p: int, k: int) -> None:
    if k < 2:
        raise PreconditionFailed(f"need k >= 2, got {k}")
    if not is_prime(p):
        raise PreconditionFailed(f"{p} is not prime")
    x = floor_kth_root(p, k)
    if not (p - (k + 1) * x ** (k - 1) < x**k < p) or x < 2:
        raise PreconditionFailed(f"p={p} too small for k={k}: need p - (k+1)x^(k-1) < x^k < p")


@dataclass(frozen=True)
class SweepPoint:
    t: int
    elements: tuple[int, ...]
    formula_offset: int
    verified_offset: int  # BFS order minus (kx - k)

    @property
    def agrees(self) -> bool:
        return self.formula_offset == self.verified_offset


@dataclass(frozen=True)
class Thm44Basis:
    p: int
    k: int
    x: int
    epsilon: float
    t: int
    elements: tuple[int, ...]
    v_t: int
    order: int
    sweep: tuple[SweepPoint, ...] = field(repr=False, default=())

    @property
    def target_offset(self) -> int:
        """s in order = kx + s."""
        return self.order - self.k * self.x

    def run_length(self, verified: bool = True) -> int:
        return consecutive_run(self.sweep, verified)


def consecutive_run(points, verified: bool = True) -> int:
    """Largest L with {v_0, v_0 + 1, ..., v_0 + L - 1} among the swept offsets."""
    points = list(points)
    if not points:
        return 0
    key = (lambda pt: pt.verified_offset) if verified else (lambda pt: pt.formula_offset)
    seen = {key(pt) for pt in points}
    start = key(points[0])
    length = 0
    while start + length in seen:
        length += 1
    return length


def iter_sweep(p: int, k: int, t_max: int | None = None):
    x = floor_kth_root(p, k)
    if t_max is None:
        t_max = default_t_max(x)
    for t in range(0, min(t_max, x - 1) + 1):
        elems = family_elements(p, k, t)
        if elems is None:
            break
        order = cyclic_order(p, elems)
        yield SweepPoint(t, elems, formula_offset(p, k, t), order - (k * x - k))


def sweep(p: int, k: int, t_max: int | None = None) -> list[SweepPoint]:
    check_precondition(p, k)
    return list(iter_sweep(p, k, t_max))


def build_thm44(p: int, k: int, target_s: int = 0, t_max: int | None = None) -> Thm44Basis:
    """First A_t in the sweep whose BFS-verified order is kx + target_s."""
    check_precondition(p, k)
    x = floor_kth_root(p, k)
    eps = p ** (1.0 / k) - x
    points = []
    for pt in iter_sweep(p, k, t_max):
        points.append(pt)
        if pt.verified_offset == k + target_s:
            return Thm44Basis(p, k, x, eps, pt.t, pt.elements, pt.formula_offset,
                              k * x - k + pt.verified_offset, tuple(points))
    run = sorted({pt.verified_offset for pt in points})
    raise TargetNotReached(
        f"p={p}, k={k}: order {k * x + target_s} not reached for t <= "
        f"{points[-1].t if points else 0}; offsets seen {run}",
        run=run,
    )
