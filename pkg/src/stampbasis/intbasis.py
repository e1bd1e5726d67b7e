"""Eventually periodic integer bases A = {P, 2P, 3P, ...} + E.

E is a finite set of positive integers, none divisible by P. Elements may
exceed P: lifting a residue by multiples of P keeps its divisibility by every
prime factor of P, which is what the constructions need when an essential
subset must be larger than P - 1.

Order: write l_E(r) for the least number of elements of E summing to r mod P.
A large x = r (mod P) is a sum of l_E(r) elements of E plus multiples of P
(split into as many parts as needed), while any sum of l_E(r) elements of A
hitting that class uses E only and is bounded. So A has order exactly
1 + max_r l_E(r), and is no basis at all when some class is unreachable.

Essential subsets: removing C from E leaves P*N + (E - C), a basis iff
gcd(P, E - C) = 1. So A - C fails exactly when some prime q | P divides every
remaining element, i.e. C contains C_q = {e in E : q does not divide e}.
The essential subsets are the inclusion-minimal C_q.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .cyclic import cyclic_order
from .errors import NotABasis
from .primes import prime_factors


@dataclass(frozen=True)
class StructuredIntegerBasis:
    period: int
    finite_part: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(int(e) for e in self.finite_part))
        object.__setattr__(self, "finite_part", elems)
        if self.period < 2:
            raise ValueError(f"period must be >= 2, got {self.period}")
        if len(set(elems)) != len(elems):
            raise ValueError("finite part has repeated elements")
        for e in elems:
            if e < 1:
                raise ValueError(f"finite part must be positive, got {e}")
            if e % self.period == 0:
                raise ValueError(f"{e} is a multiple of the period {self.period}")

    def residues(self) -> tuple[int, ...]:
        return tuple(sorted({e % self.period for e in self.finite_part}))

    def contains(self, x: int) -> bool:
        return x > 0 and (x % self.period == 0 or x in self.finite_part)


@dataclass(frozen=True)
class EssentialSubset:
    members: tuple[int, ...]
    witness_prime: int
    induced_gcd: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class EssentialCertificate:
    """``removal_gcd`` is the gcd after removing the whole candidate;
    ``minus_one`` maps each member e to the gcd after removing candidate - {e}."""

    candidate: tuple[int, ...]
    removal_gcd: int
    minus_one: dict = field(default_factory=dict)

    @property
    def is_essential(self) -> bool:
        return self.removal_gcd > 1 and all(g == 1 for g in self.minus_one.values())


def basis_order(basis: StructuredIntegerBasis) -> int | None:
    """Order of A as a basis of the positive integers, or None if A is no basis."""
    residual = cyclic_order(basis.period, basis.residues())
    if residual is None:
        return None
    return 1 + residual


def difference_gcd(basis: StructuredIntegerBasis, removed: Iterable[int] = ()) -> int:
    """gcd{a - a' : a, a' in A minus removed}.

    The multiples of P contribute exactly P; each remaining e contributes e - P.
    """
    removed = set(removed)
    extra = set(removed) - set(basis.finite_part)
    if extra:
        raise ValueError(f"not in the finite part: {sorted(extra)}")
    return math.gcd(basis.period, *(e - basis.period for e in basis.finite_part if e not in removed))


def enumerate_essential(
    basis: StructuredIntegerBasis, size: int | None = None
) -> list[EssentialSubset]:
    if basis_order(basis) is None:
        raise NotABasis(f"P={basis.period}, E={list(basis.finite_part)} is not a basis")
    candidates = {}
    for q in prime_factors(basis.period):
        members = frozenset(e for e in basis.finite_part if e % q)
        # a repeated candidate keeps its smallest prime
        candidates.setdefault(members, q)
    out = []
    for members, q in sorted(candidates.items(), key=lambda kv: kv[1]):
        if any(other < members for other in candidates):
            continue
        if size is not None and len(members) != size:
            continue
        out.append(EssentialSubset(tuple(sorted(members)), q, difference_gcd(basis, members)))
    return out


def verify_essential(basis: StructuredIntegerBasis, candidate: Iterable[int]) -> EssentialCertificate:
    cand = tuple(sorted(set(candidate)))
    g = difference_gcd(basis, cand)
    minus_one = {e: difference_gcd(basis, set(cand) - {e}) for e in cand}
    return EssentialCertificate(cand, g, minus_one)
