"""``hog`` command line: solve, compile and check game files.

Exit codes: 0 success, 1 a ``check`` failed, 2 parse or usage error,
3 invalid game, 4 budget exceeded, 5 theorem violation.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .compiler import compile_game, verify_compile
from .engine import Game, reachable_contexts, solve, totality_witness
from .errors import BudgetExceeded, GameError, GameSyntaxError, TheoremViolation
from .gamedef import elaborate, parse, render_report, serialize_strategic
from .hof import (
    DEFAULT_CONTEXT_BUDGET,
    budget_allows,
    context_dependence_witness,
    induced_quantifier,
    induced_selection,
)
from .validation import DEFAULT_PROFILE_BUDGET

EXIT_OK, EXIT_CHECK_FAILED, EXIT_PARSE, EXIT_MODEL, EXIT_BUDGET, EXIT_THEOREM = 0, 1, 2, 3, 4, 5


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hog", description="Equilibria of games with selection-function agents."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="game definition file (.hog)")
    common.add_argument("--jobs", type=_positive_int, default=None, help="worker threads")
    common.add_argument("--budget", type=_positive_int, default=None, help="profile limit")

    p_solve = sub.add_parser("solve", parents=[common], help="tabulate both equilibrium notions")
    p_solve.add_argument("--kind", choices=["nash", "selection", "both"], default="both")
    p_solve.add_argument("--format", choices=["table", "csv", "json"], default="table")

    p_compile = sub.add_parser("compile", parents=[common], help="lower to a 0/1 payoff game")
    p_compile.add_argument("-o", "--out", default=None, help="output file (default stdout)")

    sub.add_parser("check", parents=[common], help="diagnose agents and equilibrium theorems")
    return parser


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("HOG_BUDGET")
    if not env:
        return DEFAULT_PROFILE_BUDGET
    try:
        return _positive_int(env)
    except argparse.ArgumentTypeError as exc:
        raise ValueError(f"HOG_BUDGET {env!r}: {exc}")


def _load(path: str, check_totality: bool = True) -> Game:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GameSyntaxError(f"cannot read file: {exc.strerror or exc}")
    return elaborate(parse(text), check_totality)


def cmd_solve(args) -> int:
    game = _load(args.input)
    report = solve(game, args.budget_value, args.jobs)
    sys.stdout.write(render_report(report, args.format, args.kind))
    return EXIT_OK


def _profiles(ps) -> str:
    if not ps:
        return "(none)"
    compact = all(len(m) == 1 for x in ps for m in x)
    return " ".join(("" if compact else ",").join(x) for x in ps)


def cmd_compile(args) -> int:
    game = _load(args.input)
    sg = compile_game(game, args.budget_value)
    text = serialize_strategic(sg, f"{game.name}_compiled")
    check = verify_compile(game, args.budget_value, args.jobs)
    summary = [
        f"game: {game.name}",
        f"equal: {'true' if check.equal else 'false'}",
        f"equilibria: {len(check.nash_of_compiled)}",
        f"compiled nash: {_profiles(check.nash_of_compiled)}",
        f"source selection: {_profiles(check.selection_of_source)}",
    ]
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print("\n".join(summary))
    else:
        sys.stdout.write(text)
        print("\n".join(summary), file=sys.stderr)
    return EXIT_OK if check.equal else EXIT_THEOREM


def cmd_check(args) -> int:
    game = _load(args.input, check_totality=False)
    ok = True
    out = [f"game: {game.name}"]
    for i, (player, agent) in enumerate(zip(game.players, game.agents)):
        out.append(f"agent {player}: {agent.name}")
        closure = induced_selection(induced_quantifier(agent))
        witness = totality_witness(game, i)
        n_ctx = len(reachable_contexts(game, i))
        if witness is None:
            out.append(f"  total: yes ({n_ctx} reachable contexts)")
        else:
            ok = False
            out.append(f"  total: NO, empty on context {witness}")
        if budget_allows(agent.moves, agent.outcomes, DEFAULT_CONTEXT_BUDGET):
            pair = context_dependence_witness(induced_quantifier(agent))
            if pair is None:
                out.append("  context: independent")
            else:
                out.append(f"  context: dependent, witness {pair[0]} vs {pair[1]}")
        else:
            out.append("  context: not checked (context space exceeds budget)")
        coarse = next((p for p in reachable_contexts(game, i) if agent(p) != closure(p)), None)
        if coarse is None:
            out.append("  closed: yes (selection and Nash conditions agree)")
        else:
            out.append(f"  closed: no, picks fewer moves than its outcomes allow on {coarse}")
    if ok:
        report = solve(game, args.budget_value, args.jobs)
        subset = set(report.selection_profiles) <= set(report.nash_profiles)
        ok = ok and subset
        out.append(
            f"selection within nash: {'yes' if subset else 'NO'} "
            f"({report.n_selection} selection, {report.n_nash} nash)"
        )
    else:
        out.append("selection within nash: not checked (an agent is not total)")
    out.append(f"result: {'pass' if ok else 'fail'}")
    print("\n".join(out))
    return EXIT_OK if ok else EXIT_CHECK_FAILED


COMMANDS = {"solve": cmd_solve, "compile": cmd_compile, "check": cmd_check}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.budget_value = _budget(args)
    except ValueError as exc:
        print(f"hog: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return COMMANDS[args.command](args)
    except GameError as exc:
        print(exc.diagnostic().format(args.input), file=sys.stderr)
        return _exit_code(exc)


def _exit_code(exc: GameError) -> int:
    if isinstance(exc, GameSyntaxError):
        return EXIT_PARSE
    if isinstance(exc, BudgetExceeded):
        return EXIT_BUDGET
    if isinstance(exc, TheoremViolation):
        return EXIT_THEOREM
    return EXIT_MODEL
