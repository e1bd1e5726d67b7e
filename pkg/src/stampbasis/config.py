"""Global search budget.

The budget caps the raw size of every exhaustive search (number of k-subsets
for the cyclic searches, DP cell updates for the segment search). Exceeding it
raises :class:`~stampbasis.errors.SearchTooLarge`; nothing is ever approximated.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

BUDGET_ENV = "STAMPBASIS_BUDGET"
DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    value = int(float(raw))
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {raw!r}")
    return value


@dataclass(frozen=True)
class SearchConfig:
    budget: int | None = None
    workers: int = 1

    def resolved_budget(self) -> int:
        return self.budget if self.budget is not None else default_budget()
