"""Finite games whose players are selection functions.

Typical use::

    from selgame import load_bundled, solve
    report = solve(load_bundled("keynes_max_fix_fix"))
    report.selection_profiles
"""

from .compiler import CompileCheck, StrategicGame, classical_nash, compile_game, verify_compile
from .core import Context, PartialOrder, image, maximal_elements, transitive_closure_order, vector
from .engine import (
    Game,
    majority,
    nash_status,
    profile_report,
    selection_status,
    solve,
    unilateral_context,
)
from .estimator import ClassicalNashSolver, EquilibriumSolver, GameCompiler
from .gamedef import bundled_games, bundled_path, elaborate, load, parse, render_report, serialize_strategic
from .hof import (
    Quantifier,
    SelectionFunction,
    attains,
    induced_quantifier,
    induced_selection,
    is_context_independent,
    is_realistic,
    is_total,
)
from .selections import build


def load_bundled(name: str) -> Game:
    return load(bundled_path(name))


__version__ = "0.1.0"
