"""General games, unilateral contexts and the two equilibrium notions.

A game is a tuple of move sets, a global outcome function over strategy
profiles and one selection function per player.  A profile is a
(generalised) Nash equilibrium when every player's current outcome is among
the outcomes their agent would bring about in the unilateral context; it is
a selection equilibrium when every player's current move is itself among
the agent's preferred moves.  The latter always implies the former.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .core import Context, Outcome, Profile, format_outcome, ordered_set
from .errors import AlphabetError, ArityError, DomainMismatch, NonTotalAgent, TheoremViolation
from .hof import SelectionFunction, induced_quantifier
from .selections import SelectionSpec, build
from .validation import check_budget, check_jobs, check_player, check_profile


def majority(profile: Sequence[str]) -> str:
    """Simple majority of three votes over a two-symbol alphabet."""
    if len(profile) != 3:
        raise ArityError(f"majority takes 3 votes, got {len(profile)}")
    a, b, c = profile
    if len({a, b, c}) > 2:
        raise AlphabetError("majority is only total over a two-symbol alphabet")
    return a if a in (b, c) else b


@dataclass(frozen=True, eq=False)
class Game:
    name: str
    players: tuple
    move_sets: tuple
    outcomes: tuple
    outcome_fn: Callable[[Profile], Outcome]
    agents: tuple

    def __post_init__(self):
        n = len(self.players)
        if len(self.move_sets) != n or len(self.agents) != n:
            raise DomainMismatch("need one move set and one agent per player")
        for player, moves, agent in zip(self.players, self.move_sets, self.agents):
            if set(agent.moves) != set(moves) or set(agent.outcomes) != set(self.outcomes):
                raise DomainMismatch(f"agent of {player} ranges over the wrong moves or outcomes")

    @classmethod
    def from_specs(
        cls,
        name: str,
        players: Sequence[str],
        move_sets: Sequence[Sequence[str]],
        outcome: Mapping[Profile, Outcome] | str,
        specs: Sequence[SelectionSpec],
        outcomes: Sequence[Outcome] | None = None,
    ) -> "Game":
        """Convenience constructor.  ``outcome`` is an explicit table or ``"majority"``."""
        move_sets = tuple(tuple(m) for m in move_sets)
        if outcome == "majority":
            fn = majority
            if outcomes is None:
                outcomes = ordered_set(itertools.chain.from_iterable(move_sets))
        else:
            table = {tuple(k): v for k, v in outcome.items()}
            fn = table.__getitem__
            if outcomes is None:
                outcomes = ordered_set(table[x] for x in itertools.product(*move_sets))
        outcomes = tuple(outcomes)
        agents = tuple(build(s, m, outcomes) for s, m in zip(specs, move_sets))
        return cls(name, tuple(players), move_sets, outcomes, fn, agents)

    @property
    def n_players(self) -> int:
        return len(self.players)

    def profiles(self):
        return itertools.product(*self.move_sets)

    def outcome(self, profile) -> Outcome:
        return self.outcome_fn(tuple(profile))


def unilateral_context(g: Game, x: Sequence[str], i: int) -> Context:
    """The context player ``i`` faces at ``x``: their moves mapped to outcomes
    with everyone else's moves frozen."""
    x = list(x)
    values = []
    for move in g.move_sets[i]:
        x[i] = move
        values.append(g.outcome_fn(tuple(x)))
    return Context(g.move_sets[i], tuple(values))


@dataclass(frozen=True)
class PlayerVerdict:
    player: str
    nash_ok: bool
    selection_ok: bool
    preferred_moves: tuple
    preferred_outcomes: tuple


@dataclass(frozen=True)
class ProfileReport:
    profile: Profile
    outcome: Outcome
    verdicts: tuple

    @property
    def is_nash(self) -> bool:
        return all(v.nash_ok for v in self.verdicts)

    @property
    def is_selection(self) -> bool:
        return all(v.selection_ok for v in self.verdicts)

    @property
    def nash_defectors(self) -> tuple:
        return tuple(v.player for v in self.verdicts if not v.nash_ok)

    @property
    def selection_defectors(self) -> tuple:
        return tuple(v.player for v in self.verdicts if not v.selection_ok)


@dataclass(frozen=True)
class SolveReport:
    game: str
    players: tuple
    rows: tuple = field(repr=False)

    @property
    def nash_profiles(self) -> tuple:
        return tuple(r.profile for r in self.rows if r.is_nash)

    @property
    def selection_profiles(self) -> tuple:
        return tuple(r.profile for r in self.rows if r.is_selection)

    @property
    def n_nash(self) -> int:
        return len(self.nash_profiles)

    @property
    def n_selection(self) -> int:
        return len(self.selection_profiles)


def player_verdict(g: Game, x: Profile, i: int, outcome: Outcome | None = None) -> PlayerVerdict:
    agent = g.agents[i]
    p = unilateral_context(g, x, i)
    if outcome is None:
        outcome = g.outcome_fn(x)
    moves = agent.ordered(p)
    good_outcomes = ordered_set(p(m) for m in moves)
    nash_ok = outcome in good_outcomes
    selection_ok = x[i] in moves
    if selection_ok and not nash_ok:
        raise TheoremViolation(
            f"{g.players[i]} at {' '.join(x)}: selection holds but Nash fails"
        )
    return PlayerVerdict(g.players[i], nash_ok, selection_ok, moves, good_outcomes)


def nash_status(g: Game, x: Sequence[str]) -> tuple:
    """Per-player flags: current outcome among the induced quantifier's outcomes."""
    x = check_profile(g.move_sets, x)
    outcome = g.outcome_fn(x)
    return tuple(
        outcome in induced_quantifier(agent)(unilateral_context(g, x, i))
        for i, agent in enumerate(g.agents)
    )


def selection_status(g: Game, x: Sequence[str]) -> tuple:
    """Per-player flags: current move among the agent's preferred moves."""
    x = check_profile(g.move_sets, x)
    return tuple(x[i] in agent(unilateral_context(g, x, i)) for i, agent in enumerate(g.agents))


def profile_report(g: Game, x: Sequence[str]) -> ProfileReport:
    x = check_profile(g.move_sets, x)
    outcome = g.outcome_fn(x)
    verdicts = tuple(player_verdict(g, x, i, outcome) for i in range(g.n_players))
    return ProfileReport(x, outcome, verdicts)


def _report_chunk(g: Game, chunk):
    return [profile_report(g, x) for x in chunk]


def solve(g: Game, budget: int | None = None, jobs: int = 1) -> SolveReport:
    """Evaluate every strategy profile, in lexicographic declared-move order."""
    check_budget(g.move_sets, budget)
    jobs = check_jobs(jobs)
    profiles = list(g.profiles())
    if jobs == 1 or len(profiles) < 2 * jobs:
        rows = _report_chunk(g, profiles)
    else:
        size = -(-len(profiles) // jobs)
        chunks = [profiles[k : k + size] for k in range(0, len(profiles), size)]
        # executor.map yields in submission order, so the merge is deterministic
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = [r for part in pool.map(lambda c: _report_chunk(g, c), chunks) for r in part]
    return SolveReport(g.name, g.players, tuple(rows))


def reachable_contexts(g: Game, i: int) -> tuple:
    check_player(g.n_players, i)
    others = [m if j != i else (g.move_sets[i][0],) for j, m in enumerate(g.move_sets)]
    return ordered_set(unilateral_context(g, x, i) for x in itertools.product(*others))


def totality_witness(g: Game, i: int) -> Context | None:
    agent: SelectionFunction = g.agents[i]
    for p in reachable_contexts(g, i):
        if not agent(p):
            return p
    return None


def validate_agents(g: Game) -> None:
    """Raise :class:`NonTotalAgent` if some agent is empty on a reachable context."""
    for i, player in enumerate(g.players):
        p = totality_witness(g, i)
        if p is not None:
            raise NonTotalAgent(
                f"agent of {player} ({g.agents[i].name}) selects no move in context {p}",
                player=player,
                context=p,
            )


def format_profile(profile: Sequence[str], compact: bool | None = None) -> str:
    if compact is None:
        compact = all(len(m) == 1 for m in profile)
    return ("" if compact else " ").join(profile)


__all__ = [
    "Game",
    "PlayerVerdict",
    "ProfileReport",
    "SolveReport",
    "format_outcome",
    "format_profile",
    "majority",
    "nash_status",
    "player_verdict",
    "profile_report",
    "reachable_contexts",
    "selection_status",
    "solve",
    "totality_witness",
    "unilateral_context",
    "validate_agents",
]
