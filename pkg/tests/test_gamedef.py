import csv
import io
import json
import textwrap
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from selgame.compiler import StrategicGame, compile_game
from selgame.engine import solve
from selgame.errors import (
    AlphabetError,
    ArityError,
    CycleError,
    DuplicateRow,
    GameSyntaxError,
    IncompleteTable,
    MissingAgent,
    ModeMismatch,
    NonTotalAgent,
    UnknownSymbol,
)
from selgame.gamedef import (
    bundled_games,
    elaborate,
    parse,
    parse_selspec,
    render_report,
    serialize_strategic,
)

from helpers import random_spec, random_vector_setup, seeded

CONTEST = """\
game contest
players J1 J2 J3
moves J1 : A B
moves J2 : A B
moves J3 : A B
outcomes : A B
outcome builtin majority
agent J1 : argmax total(B < A)
agent J2 : fix
agent J3 : fix
"""

TABLE_GAME = """\
game tg
players J1 J2 J3
moves J1 : A B
moves J2 : A B
moves J3 : A B
outcomes : A B
outcome table
  A A A -> A
  A A B -> A
  A B A -> A
  A B B -> B
  B A A -> A
  B A B -> B
  B B B -> B
end
agent J1 : fix
agent J2 : fix
agent J3 : fix
"""


def load_text(text, **kw):
    return elaborate(parse(textwrap.dedent(text)), **kw)


def test_parse_contest():
    gd = parse(CONTEST)
    assert gd.name == "contest"
    assert gd.players == ["J1", "J2", "J3"]
    assert gd.outcome_source == "majority"
    assert str(gd.agents["J1"].spec) == "argmax total(B < A)"


def test_comments_and_blank_lines_are_ignored():
    g = load_text("# header\n\n" + CONTEST.replace("fix\n", "fix  # same\n"))
    assert g.players == ("J1", "J2", "J3")


@pytest.mark.parametrize("name", bundled_games())
def test_every_bundled_game_loads(name, bundled):
    g = bundled(name.removesuffix(".hog"))
    assert solve(g).rows


@pytest.mark.parametrize(
    "text, line",
    [
        (CONTEST.replace("outcomes : A B", "outcomes ; A B"), 6),
        (CONTEST + "frobnicate\n", 11),
        (CONTEST + "game again\n", 11),
        (CONTEST.replace("agent J2 : fix", "agent J2 : fixx"), 9),
        (CONTEST.replace("argmax total(B < A)", "argmax total(B < A"), 8),
        (TABLE_GAME.split("end\n")[0], 7),
        (TABLE_GAME.replace("end\n", ""), 7),
        (CONTEST.replace("game contest\n", ""), 9),
        (CONTEST.replace("argmax total(B < A)", "argmax order()"), 8),
    ],
)
def test_syntax_errors_carry_positions(text, line):
    with pytest.raises(GameSyntaxError) as info:
        parse(text)
    assert info.value.line == line
    assert info.value.col >= 1


def test_bad_rational_is_a_syntax_error():
    text = """\
    game v
    players a
    moves a : x
    outcomes vector 1
    outcome table
      x -> 1/0
    end
    agent a : argmax-coord 1
    """
    with pytest.raises(GameSyntaxError) as info:
        parse(textwrap.dedent(text))
    assert info.value.line == 6
    assert info.value.col == 8


def test_rationals_are_exact():
    text = """\
    game v
    players a
    moves a : x y
    outcomes vector 1
    outcome table
      x -> 1/3
      y -> -2/4
    end
    agent a : argmax-coord 1
    """
    g = load_text(text)
    assert g.outcome(("x",)) == (Fraction(1, 3),)
    assert g.outcome(("y",)) == (Fraction(-1, 2),)


def test_incomplete_table_names_missing_profile():
    with pytest.raises(IncompleteTable, match="B B A"):
        load_text(TABLE_GAME)


def test_duplicate_row():
    text = TABLE_GAME.replace("  B B B -> B", "  B B A -> B\n  B B A -> A\n  B B B -> B")
    with pytest.raises(DuplicateRow) as info:
        load_text(text)
    assert info.value.line == 15


def test_cyclic_order_points_at_agent():
    with pytest.raises(CycleError) as info:
        load_text(CONTEST.replace("argmax total(B < A)", "argmax order(A < A)"))
    assert info.value.line == 8


def test_missing_agent():
    with pytest.raises(MissingAgent):
        load_text(CONTEST.replace("agent J3 : fix\n", ""))


def test_majority_constraints():
    with pytest.raises(AlphabetError):
        load_text(CONTEST.replace("outcomes : A B", "outcomes : A B C"))
    two = CONTEST.replace("players J1 J2 J3", "players J1 J2").replace("moves J3 : A B\n", "")
    with pytest.raises(ArityError):
        load_text(two.replace("agent J3 : fix\n", ""))
    with pytest.raises(ModeMismatch):
        load_text(CONTEST.replace("outcomes : A B", "outcomes vector 3"))


def test_unknown_symbols():
    with pytest.raises(UnknownSymbol):
        load_text(CONTEST + "agent J4 : fix\n")
    with pytest.raises(UnknownSymbol):
        load_text(CONTEST.replace("argmax total(B < A)", "prefer { Z }"))


def test_non_total_agent_is_rejected_at_load_and_allowed_for_check():
    text = CONTEST.replace("argmax total(B < A)", "prefer { A }")
    with pytest.raises(NonTotalAgent) as info:
        load_text(text)
    assert info.value.player == "J1"
    assert info.value.line == 8
    assert load_text(text, check_totality=False).players[0] == "J1"


def test_diagnostic_format():
    with pytest.raises(GameSyntaxError) as info:
        parse(CONTEST + "frobnicate\n")
    assert info.value.diagnostic().format("g.hog") == "g.hog:11:1: error: unknown directive 'frobnicate'"


# -- rendering ----------------------------------------------------------------


def test_table_render_of_max_max_min(bundled):
    text = render_report(solve(bundled("keynes_max_max_min")))
    lines = text.splitlines()
    assert lines[0] == "Strategy | Outcome | Nash | Defects | Selection | Defects"
    assert "BBA | B | - | J1,J2 | - | J1,J2" in lines
    assert "AAA | A | yes |  | yes |" in lines
    assert text.endswith("\n")
    assert len(lines) == 9


def test_csv_render(bundled):
    text = render_report(solve(bundled("keynes_max_fix_fix")), fmt="csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["strategy", "outcome", "nash", "nash_defectors", "selection", "selection_defectors"]
    assert "AAB,A,yes,,no,J3" in text.splitlines()
    assert "BAB,B,no,J1,no,\"J1,J2\"" in text.splitlines()


def test_json_render_of_vector_game(bundled):
    data = json.loads(render_report(solve(bundled("bos_classic")), fmt="json"))
    assert data["game"] == "bos_classic"
    first = data["rows"][0]
    assert first == {
        "profile": ["B", "B"],
        "outcome": ["3", "2"],
        "nash": True,
        "nash_defectors": [],
        "selection": True,
        "selection_defectors": [],
    }


@pytest.mark.parametrize("kind", ["nash", "selection"])
def test_kind_drops_columns_not_rows(kind, bundled):
    report = solve(bundled("coordination"))
    lines = render_report(report, kind=kind).splitlines()
    assert len(lines) == 9
    assert all(line.count("|") <= 3 for line in lines)


def test_render_rejects_unknown_options(bundled):
    report = solve(bundled("coordination"))
    with pytest.raises(ValueError):
        render_report(report, fmt="xml")
    with pytest.raises(ValueError):
        render_report(report, kind="both-ish")


def test_long_move_names_are_space_joined(bundled):
    text = render_report(solve(bundled("wine")))
    assert "x2 | (20) | yes" in text


# -- round trips --------------------------------------------------------------


def test_compiled_game_round_trips(bundled):
    sg = compile_game(bundled("keynes_max_fix_fix"))
    g = load_text(serialize_strategic(sg, "compiled"))
    assert {x: g.outcome(x) for x in g.profiles()} == dict(sg.payoffs)
    assert set(solve(g).nash_profiles) == set(solve(bundled("keynes_max_fix_fix")).selection_profiles)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_serialize_then_parse_is_identity(seed):
    players, move_sets, payoffs = random_vector_setup(seeded(seed))
    sg = StrategicGame(tuple(players), tuple(move_sets), payoffs)
    g = load_text(serialize_strategic(sg, "rt"))
    assert g.players == sg.players
    assert g.move_sets == sg.move_sets
    assert {x: g.outcome(x) for x in g.profiles()} == dict(sg.payoffs)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_serialization_is_injective(seed_a, seed_b):
    a = StrategicGame(*map(tuple, random_vector_setup(seeded(seed_a))[:2]), random_vector_setup(seeded(seed_a))[2])
    b = StrategicGame(*map(tuple, random_vector_setup(seeded(seed_b))[:2]), random_vector_setup(seeded(seed_b))[2])
    same = a.players == b.players and a.move_sets == b.move_sets and dict(a.payoffs) == dict(b.payoffs)
    assert (serialize_strategic(a, "g") == serialize_strategic(b, "g")) == same


@settings(max_examples=100)
@given(st.integers(0, 10**6))
def test_spec_text_round_trips(seed):
    rng = seeded(seed)
    spec = random_spec(rng, ("A", "B", "C"))
    assume("order()" not in str(spec))  # the grammar has no empty order
    assert parse_selspec(str(spec)) == spec
