"""Tunable budgets. ``HOMLIE_BUDGET`` overrides the enumeration budget."""

from __future__ import annotations

import os

DEFAULT_ENUMERATION_BUDGET = 20_000
DEFAULT_ENVELOPE_TRIES = 32
DEFAULT_PS_SAMPLES = 200
DEFAULT_SEED = 0


def enumeration_budget(override: int | None = None) -> int:
    """Largest number of lines / subspaces / elements an exhaustive scan may visit."""
    if override is not None:
        return override
    env = os.environ.get("HOMLIE_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"HOMLIE_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_ENUMERATION_BUDGET
