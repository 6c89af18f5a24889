"""Default enumeration budgets, overridable via environment variables.

Each budget caps one kind of exhaustive work:

* ``enum``      -- raw color tuples in brute-force coloring counts
* ``frontier``  -- states kept per level in the frontier searches
* ``pair``      -- canonical endpoint pairs / assignment prefixes enumerated
* ``perm``      -- permutation tuples in cover enumeration

Environment overrides: ``THETACOLOR_ENUM_BUDGET``, ``THETACOLOR_FRONTIER_BUDGET``,
``THETACOLOR_PAIR_BUDGET``, ``THETACOLOR_PERM_BUDGET``.
"""

from __future__ import annotations

import os


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {raw}")
    return value


def default_enum_budget() -> int:
    return _env_int("THETACOLOR_ENUM_BUDGET", 2_000_000)


def default_frontier_budget() -> int:
    return _env_int("THETACOLOR_FRONTIER_BUDGET", 200_000)


def default_pair_budget() -> int:
    return _env_int("THETACOLOR_PAIR_BUDGET", 1_000_000)


def default_perm_budget() -> int:
    return _env_int("THETACOLOR_PERM_BUDGET", 2_000_000)
