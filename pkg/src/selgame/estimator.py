"""scikit-learn style wrappers so solvers slot into parameter sweeps and pipelines.

>>> from selgame import EquilibriumSolver, load_bundled
>>> solver = EquilibriumSolver(kind="selection").fit(load_bundled("coordination"))
>>> solver.equilibria_
(('A', 'A', 'A'), ('B', 'B', 'B'))
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .compiler import StrategicGame, classical_nash, compile_game
from .engine import Game, solve
from .validation import check_profile


def _check_game(game) -> Game:
    if not isinstance(game, Game):
        raise TypeError(f"expected a Game, got {type(game).__name__}")
    return game


class EquilibriumSolver(BaseEstimator):
    """Exhaustive equilibrium search over a finite game.

    Parameters
    ----------
    kind : {"selection", "nash"}
        Which equilibrium notion ``equilibria_`` and ``predict`` refer to.
    budget : int or None
        Maximum number of strategy profiles; None uses the library default.
    n_jobs : int
        Worker threads for the profile sweep.

    Attributes
    ----------
    report_ : SolveReport
    nash_profiles_, selection_profiles_ : tuple of profiles
    equilibria_ : the profiles for ``kind``
    """

    def __init__(self, kind="selection", budget=None, n_jobs=1):
        self.kind = kind
        self.budget = budget
        self.n_jobs = n_jobs

    def fit(self, game, y=None):
        if self.kind not in ("selection", "nash"):
            raise ValueError(f"kind must be 'selection' or 'nash', got {self.kind!r}")
        game = _check_game(game)
        self.report_ = solve(game, self.budget, self.n_jobs)
        self.move_sets_ = game.move_sets
        self.nash_profiles_ = self.report_.nash_profiles
        self.selection_profiles_ = self.report_.selection_profiles
        self.equilibria_ = (
            self.selection_profiles_ if self.kind == "selection" else self.nash_profiles_
        )
        return self

    def predict(self, profiles):
        """True for each profile that is an equilibrium of the fitted game."""
        check_is_fitted(self, "equilibria_")
        eq = set(self.equilibria_)
        return [check_profile(self.move_sets_, x) in eq for x in profiles]


class GameCompiler(TransformerMixin, BaseEstimator):
    """Turns a game into its 0/1 defection payoff game; stateless."""

    def __init__(self, budget=None):
        self.budget = budget

    def fit(self, game=None, y=None):
        return self

    def transform(self, game) -> StrategicGame:
        return compile_game(_check_game(game), self.budget)


class ClassicalNashSolver(BaseEstimator):
    """Best-response pure Nash search on a payoff game."""

    def __init__(self, budget=None):
        self.budget = budget

    def fit(self, game: StrategicGame, y=None):
        if not isinstance(game, StrategicGame):
            raise TypeError(f"expected a StrategicGame, got {type(game).__name__}")
        self.move_sets_ = game.move_sets
        self.equilibria_ = classical_nash(game, self.budget)
        return self

    def predict(self, profiles):
        check_is_fitted(self, "equilibria_")
        eq = set(self.equilibria_)
        return [check_profile(self.move_sets_, x) in eq for x in profiles]
