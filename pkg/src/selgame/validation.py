"""Input validation helpers shared by the solvers and the estimator wrappers."""

from __future__ import annotations

import math
import os

from .errors import BudgetExceeded

DEFAULT_PROFILE_BUDGET = 10**7


def profile_count(move_sets) -> int:
    return math.prod(len(m) for m in move_sets)


def check_budget(move_sets, budget: int | None = None) -> int:
    """Return the number of strategy profiles, raising if it exceeds ``budget``."""
    budget = DEFAULT_PROFILE_BUDGET if budget is None else budget
    n = profile_count(move_sets)
    if n > budget:
        raise BudgetExceeded(f"game has {n} strategy profiles, budget is {budget}")
    return n


def check_profile(move_sets, profile) -> tuple:
    profile = tuple(profile)
    if len(profile) != len(move_sets):
        raise ValueError(f"profile has {len(profile)} moves, game has {len(move_sets)} players")
    for i, (x, moves) in enumerate(zip(profile, move_sets)):
        if x not in moves:
            raise ValueError(f"{x!r} is not a move of player {i + 1}")
    return profile


def check_player(n_players: int, i: int) -> int:
    if not 0 <= i < n_players:
        raise IndexError(f"player index {i} out of range for {n_players} players")
    return i


def check_jobs(jobs: int | None) -> int:
    if jobs is None:
        return os.cpu_count() or 1
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    return jobs
