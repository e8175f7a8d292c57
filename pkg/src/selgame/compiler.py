"""Lowering selection-function games to classical payoff games.

Each player gets payoff 1 at a profile where their move is one of their
agent's preferred moves in the unilateral context, and 0 where they defect.
The pure Nash equilibria of the compiled game are then exactly the
selection equilibria of the source game.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import is_vector
from .engine import Game, selection_status, solve
from .errors import ModeMismatch, TheoremViolation
from .validation import check_budget

ONE, ZERO = Fraction(1), Fraction(0)


@dataclass(frozen=True, eq=False)
class StrategicGame:
    players: tuple
    move_sets: tuple
    payoffs: Mapping  # profile -> tuple of Fraction, one per player

    def __post_init__(self):
        n = len(self.players)
        for x in itertools.product(*self.move_sets):
            if x not in self.payoffs:
                raise ValueError(f"no payoff for profile {' '.join(x)}")
            if len(self.payoffs[x]) != n:
                raise ValueError(f"payoff for {' '.join(x)} has wrong length")

    @classmethod
    def from_rows(cls, players, move_sets, rows) -> "StrategicGame":
        payoffs = {tuple(x): tuple(Fraction(v) for v in pay) for x, pay in rows}
        return cls(tuple(players), tuple(tuple(m) for m in move_sets), payoffs)

    @classmethod
    def from_game(cls, g: Game) -> "StrategicGame":
        """Reinterpret a vector-outcome game as its payoff table."""
        if not all(is_vector(r) for r in g.outcomes):
            raise ModeMismatch(f"game {g.name} does not have payoff-vector outcomes")
        payoffs = {x: g.outcome(x) for x in g.profiles()}
        return cls(g.players, g.move_sets, payoffs)

    def profiles(self):
        return itertools.product(*self.move_sets)


@dataclass(frozen=True)
class CompileCheck:
    game: str
    nash_of_compiled: tuple
    selection_of_source: tuple

    @property
    def equal(self) -> bool:
        return set(self.nash_of_compiled) == set(self.selection_of_source)


def compile_game(g: Game, budget: int | None = None) -> StrategicGame:
    check_budget(g.move_sets, budget)
    payoffs = {
        x: tuple(ONE if ok else ZERO for ok in selection_status(g, x)) for x in g.profiles()
    }
    return StrategicGame(g.players, g.move_sets, payoffs)


def classical_nash(sg: StrategicGame, budget: int | None = None) -> tuple:
    """Pure profiles where no player gains by a unilateral deviation."""
    check_budget(sg.move_sets, budget)
    found = []
    for x in sg.profiles():
        pay = sg.payoffs[x]
        stable = True
        for i, moves in enumerate(sg.move_sets):
            for alt in moves:
                y = x[:i] + (alt,) + x[i + 1 :]
                if sg.payoffs[y][i] > pay[i]:
                    stable = False
                    break
            if not stable:
                break
        if stable:
            found.append(x)
    return tuple(found)


def verify_compile(g: Game, budget: int | None = None, jobs: int = 1) -> CompileCheck:
    sg = compile_game(g, budget)
    nash = classical_nash(sg, budget)
    all_ones = tuple(x for x in sg.profiles() if all(v == ONE for v in sg.payoffs[x]))
    if set(nash) != set(all_ones):
        raise TheoremViolation(
            f"{g.name}: compiled Nash profiles differ from the all-ones profiles"
        )
    check = CompileCheck(g.name, nash, solve(g, budget, jobs).selection_profiles)
    if not check.equal:
        raise TheoremViolation(f"{g.name}: compiled Nash set differs from the selection set")
    return check
