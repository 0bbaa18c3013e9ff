"""Resource budgets for the exact counters.

Counters refuse work that would exceed a budget instead of silently swapping
or running for hours.  The memory cap applies to the dense product-count
arrays and is configurable through the INTMAT_BUDGET_MB environment variable;
the remaining caps bound enumeration sizes and counter-specific k ranges.
"""

from __future__ import annotations

import os

DEFAULT_MEMORY_MB = 1024
BRUTE_FORCE_MATRIX_CAP = 10**8
FAST_2X2_K_CAP = 10_000  # singular / real-eig / lambda-eig counters
INTEGER_EIG_K_CAP = 1500

ENV_MEMORY_MB = "INTMAT_BUDGET_MB"


class BudgetExceededError(RuntimeError):
    """A computation was refused because it would exceed a configured budget."""

    def __init__(self, budget: str, needed, allowed):
        self.budget = budget
        self.needed = needed
        self.allowed = allowed
        super().__init__(f"budget '{budget}' exceeded: needs {needed}, allowed {allowed}")


def memory_budget_bytes() -> int:
    raw = os.environ.get(ENV_MEMORY_MB)
    if raw is None:
        mb = DEFAULT_MEMORY_MB
    else:
        try:
            mb = int(raw)
        except ValueError as exc:
            raise ValueError(f"{ENV_MEMORY_MB} must be an integer, got {raw!r}") from exc
        if mb <= 0:
            raise ValueError(f"{ENV_MEMORY_MB} must be positive")
    return mb * 1024 * 1024


def check_memory(budget: str, needed_bytes: int) -> None:
    allowed = memory_budget_bytes()
    if needed_bytes > allowed:
        raise BudgetExceededError(budget, f"{needed_bytes} bytes", f"{allowed} bytes ({ENV_MEMORY_MB})")


def check_cap(budget: str, needed: int, allowed: int) -> None:
    if needed > allowed:
        raise BudgetExceededError(budget, needed, allowed)
