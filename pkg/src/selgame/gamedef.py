"""The ``.hog`` game-definition format: parser, elaborator and serializers.

Grammar (line oriented, ``#`` starts a comment)::

    game <ident>
    players <ident>+
    moves <player> : <sym>+
    outcomes : <sym>+                  # symbolic outcomes, or
    outcomes vector <n>                # payoff vectors of length n
    outcome builtin majority           # or
    outcome table
      <m1> ... <mn> -> <sym>           # symbolic
      <m1> ... <mn> -> <q1> ... <qn>   # vector, qi = int or int/int
    end
    agent <player> : <selspec>

    selspec := argmax ORDER | argmin ORDER | argmax-coord <k> | argmin-coord <k>
             | fix | nonfix | submax [ORDER] | prefer { <sym>+ }
             | lex( selspec , selspec )
    ORDER   := order( a < b [, c < d]* ) | total( a < b [< c]* )
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .compiler import StrategicGame
from .core import SYMBOL_RE, format_outcome, format_rational, is_vector, symbol
from .engine import Game, SolveReport, majority, validate_agents
from .errors import (
    AlphabetError,
    ArityError,
    DuplicateRow,
    GameError,
    GameSyntaxError,
    IncompleteTable,
    MissingAgent,
    NonTotalAgent,
    ModeMismatch,
    ModelError,
    UnknownSymbol,
)
from .selections import (
    ArgmaxCoord,
    ArgmaxOrder,
    ArgminCoord,
    ArgminOrder,
    Fix,
    Lex,
    NonFix,
    Prefer,
    SelectionSpec,
    SubMax,
    build,
)

_TOKEN = re.compile(r"\s*(?:(->)|([(){}:,<])|((?:[^\s(){}:,<>-]|-(?!>))+)|(\S))")
_RATIONAL = re.compile(r"-?\d+(?:/\d+)?\Z")
_INT = re.compile(r"\d+\Z")
_DIRECTIVES = {"game", "players", "moves", "outcomes", "outcome", "agent"}


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    col: int


@dataclass
class TableRow:
    moves: tuple
    values: tuple
    line: int
    col: int


@dataclass
class AgentDecl:
    spec: SelectionSpec
    line: int
    col: int


@dataclass
class GameDef:
    name: str | None = None
    players: list = field(default_factory=list)
    moves: dict = field(default_factory=dict)  # player -> (symbols, line, col)
    mode: str | None = None  # "symbolic" or "vector"
    outcome_symbols: list = field(default_factory=list)
    arity: int | None = None
    outcome_source: str | None = None  # "majority" or "table"
    rows: list = field(default_factory=list)
    agents: dict = field(default_factory=dict)  # player -> AgentDecl
    positions: dict = field(default_factory=dict)  # directive -> (line, col)


def _tokenize(text: str, lineno: int) -> list[Token]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(4):
            raise GameSyntaxError(f"unexpected character {m.group(4)!r}", lineno, m.start(4) + 1)
        start = next(m.start(g) for g in (1, 2, 3) if m.group(g))
        tokens.append(Token(m.group(m.lastindex), lineno, start + 1))
        pos = m.end()
    return tokens


class _Cursor:
    def __init__(self, tokens: list[Token], line: int):
        self.tokens = tokens
        self.i = 0
        self.line = line

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self, what: str = "token") -> Token:
        tok = self.peek()
        if tok is None:
            end = self.tokens[-1].col + len(self.tokens[-1].text) if self.tokens else 1
            raise GameSyntaxError(f"expected {what} at end of line", self.line, end)
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next(f"'{text}'")
        if tok.text != text:
            raise GameSyntaxError(f"expected '{text}', found '{tok.text}'", tok.line, tok.col)
        return tok

    def symbol(self, what: str = "symbol") -> Token:
        tok = self.next(what)
        if not SYMBOL_RE.match(tok.text):
            raise GameSyntaxError(f"expected {what}, found '{tok.text}'", tok.line, tok.col)
        return tok

    def done(self):
        tok = self.peek()
        if tok is not None:
            raise GameSyntaxError(f"unexpected '{tok.text}'", tok.line, tok.col)


def _parse_order(cur: _Cursor):
    head = cur.next("'order' or 'total'")
    if head.text not in ("order", "total"):
        raise GameSyntaxError(f"expected an order, found '{head.text}'", head.line, head.col)
    cur.expect("(")
    pairs = []
    if head.text == "order":
        while True:
            a = symbol(cur.symbol().text)
            cur.expect("<")
            b = symbol(cur.symbol().text)
            pairs.append((a, b))
            sep = cur.next("',' or ')'")
            if sep.text == ")":
                break
            if sep.text != ",":
                raise GameSyntaxError(f"expected ',' or ')', found '{sep.text}'", sep.line, sep.col)
    else:
        chain = [symbol(cur.symbol().text)]
        cur.expect("<")
        chain.append(symbol(cur.symbol().text))
        while True:
            sep = cur.next("'<' or ')'")
            if sep.text == ")":
                break
            if sep.text != "<":
                raise GameSyntaxError(f"expected '<' or ')', found '{sep.text}'", sep.line, sep.col)
            chain.append(symbol(cur.symbol().text))
        pairs = list(zip(chain, chain[1:]))
    return tuple(pairs), head.text == "total"


def _parse_selspec(cur: _Cursor) -> SelectionSpec:
    tok = cur.next("selection spec")
    kind = tok.text
    if kind in ("argmax", "argmin"):
        pairs, chain = _parse_order(cur)
        return (ArgmaxOrder if kind == "argmax" else ArgminOrder)(pairs, chain)
    if kind in ("argmax-coord", "argmin-coord"):
        k = cur.next("coordinate")
        if not _INT.match(k.text):
            raise GameSyntaxError(f"expected a coordinate, found '{k.text}'", k.line, k.col)
        return (ArgmaxCoord if kind == "argmax-coord" else ArgminCoord)(int(k.text))
    if kind == "fix":
        return Fix()
    if kind == "nonfix":
        return NonFix()
    if kind == "submax":
        nxt = cur.peek()
        if nxt is not None and nxt.text in ("order", "total"):
            pairs, chain = _parse_order(cur)
            return SubMax(pairs, chain)
        return SubMax()
    if kind == "prefer":
        cur.expect("{")
        targets = [symbol(cur.symbol("outcome").text)]
        while cur.peek() is not None and cur.peek().text != "}":
            targets.append(symbol(cur.symbol("outcome").text))
        cur.expect("}")
        return Prefer(tuple(targets))
    if kind == "lex":
        cur.expect("(")
        first = _parse_selspec(cur)
        cur.expect(",")
        second = _parse_selspec(cur)
        cur.expect(")")
        return Lex(first, second)
    raise GameSyntaxError(f"unknown selection spec '{kind}'", tok.line, tok.col)


def parse_selspec(text: str) -> SelectionSpec:
    cur = _Cursor(_tokenize(text, 1), 1)
    spec = _parse_selspec(cur)
    cur.done()
    return spec


def _once(gd: GameDef, key: str, tok: Token):
    if key in gd.positions:
        line = gd.positions[key][0]
        raise GameSyntaxError(f"duplicate '{key}' directive (first on line {line})", tok.line, tok.col)
    gd.positions[key] = (tok.line, tok.col)


def parse(text: str) -> GameDef:
    gd = GameDef()
    in_table = False
    table_start = None
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        tokens = _tokenize(raw.split("#", 1)[0], lineno)
        if not tokens:
            continue
        cur = _Cursor(tokens, lineno)
        head = cur.next()

        if in_table:
            if head.text == "end" and len(tokens) == 1:
                in_table = False
                continue
            if head.text in _DIRECTIVES and all(t.text != "->" for t in tokens):
                raise GameSyntaxError("outcome table is missing 'end'", table_start.line, table_start.col)
            moves = [head]
            while cur.peek() is not None and cur.peek().text != "->":
                moves.append(cur.next())
            cur.expect("->")
            values = []
            while cur.peek() is not None:
                values.append(cur.next())
            if not values:
                raise GameSyntaxError("table row has no outcome", lineno, tokens[-1].col)
            for t in moves:
                if not SYMBOL_RE.match(t.text):
                    raise GameSyntaxError(f"bad move '{t.text}'", t.line, t.col)
            gd.rows.append(
                TableRow(tuple(symbol(t.text) for t in moves), tuple(values), lineno, head.col)
            )
            continue

        d = head.text
        if d == "game":
            _once(gd, "game", head)
            gd.name = cur.symbol("game name").text
            cur.done()
        elif d == "players":
            _once(gd, "players", head)
            gd.players = [symbol(cur.symbol("player").text)]
            while cur.peek() is not None:
                gd.players.append(symbol(cur.symbol("player").text))
        elif d == "moves":
            player = cur.symbol("player")
            cur.expect(":")
            syms = [symbol(cur.symbol("move").text)]
            while cur.peek() is not None:
                syms.append(symbol(cur.symbol("move").text))
            if player.text in gd.moves:
                raise GameSyntaxError(f"moves of {player.text} declared twice", head.line, head.col)
            gd.moves[symbol(player.text)] = (syms, head.line, head.col)
        elif d == "outcomes":
            _once(gd, "outcomes", head)
            nxt = cur.next("':' or 'vector'")
            if nxt.text == ":":
                gd.mode = "symbolic"
                gd.outcome_symbols = [symbol(cur.symbol("outcome").text)]
                while cur.peek() is not None:
                    gd.outcome_symbols.append(symbol(cur.symbol("outcome").text))
            elif nxt.text == "vector":
                gd.mode = "vector"
                n = cur.peek()
                if n is not None:
                    cur.next()
                    if not _INT.match(n.text) or int(n.text) < 1:
                        raise GameSyntaxError(f"bad vector length '{n.text}'", n.line, n.col)
                    gd.arity = int(n.text)
                cur.done()
            else:
                raise GameSyntaxError(f"expected ':' or 'vector', found '{nxt.text}'", nxt.line, nxt.col)
        elif d == "outcome":
            _once(gd, "outcome", head)
            kind = cur.next("'builtin' or 'table'")
            if kind.text == "builtin":
                which = cur.next("builtin name")
                if which.text != "majority":
                    raise GameSyntaxError(f"unknown builtin '{which.text}'", which.line, which.col)
                gd.outcome_source = "majority"
            elif kind.text == "table":
                gd.outcome_source = "table"
                in_table = True
                table_start = head
            else:
                raise GameSyntaxError(f"expected 'builtin' or 'table', found '{kind.text}'", kind.line, kind.col)
            cur.done()
        elif d == "agent":
            player = cur.symbol("player")
            cur.expect(":")
            spec = _parse_selspec(cur)
            cur.done()
            if player.text in gd.agents:
                raise GameSyntaxError(f"agent of {player.text} declared twice", head.line, head.col)
            gd.agents[symbol(player.text)] = AgentDecl(spec, head.line, head.col)
        else:
            raise GameSyntaxError(f"unknown directive '{d}'", head.line, head.col)

    if in_table:
        raise GameSyntaxError("outcome table is missing 'end'", table_start.line, table_start.col)
    for key in ("game", "players", "outcomes", "outcome"):
        if key not in gd.positions:
            raise GameSyntaxError(f"missing '{key}' directive", last_line or 1, 1)

    if gd.mode == "vector":
        for row in gd.rows:
            converted = []
            for t in row.values:
                if not _RATIONAL.match(t.text) or t.text.endswith("/0"):
                    raise GameSyntaxError(f"bad rational '{t.text}'", t.line, t.col)
                converted.append(Fraction(t.text))
            row.values = tuple(converted)
    else:
        for row in gd.rows:
            for t in row.values:
                if not SYMBOL_RE.match(t.text):
                    raise GameSyntaxError(f"bad outcome '{t.text}'", t.line, t.col)
            row.values = tuple(symbol(t.text) for t in row.values)
    return gd


def _here(gd: GameDef, key: str):
    return gd.positions.get(key, (None, None))


def elaborate(gd: GameDef, check_totality: bool = True) -> Game:
    players = gd.players
    if len(set(players)) != len(players):
        raise ModelError("duplicate player name", *_here(gd, "players"))
    for p, (_, line, col) in gd.moves.items():
        if p not in players:
            raise UnknownSymbol(f"moves declared for unknown player {p}", line, col)
    move_sets = []
    for p in players:
        if p not in gd.moves:
            raise ModelError(f"no moves declared for player {p}", *_here(gd, "players"))
        syms, line, col = gd.moves[p]
        if len(set(syms)) != len(syms):
            raise ModelError(f"duplicate move for player {p}", line, col)
        move_sets.append(tuple(syms))
    move_sets = tuple(move_sets)
    n = len(players)

    if gd.mode == "symbolic" and len(set(gd.outcome_symbols)) != len(gd.outcome_symbols):
        raise ModelError("duplicate outcome symbol", *_here(gd, "outcomes"))
    arity = gd.arity if gd.arity is not None else n

    if gd.outcome_source == "majority":
        line, col = _here(gd, "outcome")
        if gd.mode != "symbolic":
            raise ModeMismatch("builtin majority needs symbolic outcomes", line, col)
        if n != 3:
            raise ArityError(f"builtin majority needs 3 players, game has {n}", line, col)
        alphabet = set(gd.outcome_symbols)
        if len(alphabet) != 2 or any(set(m) != alphabet for m in move_sets):
            raise AlphabetError(
                "builtin majority needs every move set to equal a two-symbol outcome set", line, col
            )
        outcome_fn = majority
        outcomes = tuple(gd.outcome_symbols)
    else:
        table = {}
        known = set(gd.outcome_symbols)
        for row in gd.rows:
            if len(row.moves) != n:
                raise ArityError(f"row has {len(row.moves)} moves, game has {n} players", row.line, row.col)
            for i, m in enumerate(row.moves):
                if m not in move_sets[i]:
                    raise UnknownSymbol(f"{m} is not a move of {players[i]}", row.line, row.col)
            if row.moves in table:
                raise DuplicateRow(f"profile {' '.join(row.moves)} listed twice", row.line, row.col)
            if gd.mode == "vector":
                if len(row.values) != arity:
                    raise ArityError(
                        f"row has {len(row.values)} payoffs, expected {arity}", row.line, row.col
                    )
                table[row.moves] = tuple(row.values)
            else:
                if len(row.values) != 1:
                    raise ArityError("symbolic row needs exactly one outcome", row.line, row.col)
                if row.values[0] not in known:
                    raise UnknownSymbol(f"{row.values[0]} is not a declared outcome", row.line, row.col)
                table[row.moves] = row.values[0]
        for x in itertools.product(*move_sets):
            if x not in table:
                raise IncompleteTable(f"outcome table has no row for {' '.join(x)}", *_here(gd, "outcome"))
        outcome_fn = table.__getitem__
        if gd.mode == "vector":
            outcomes = tuple(dict.fromkeys(table[x] for x in itertools.product(*move_sets)))
        else:
            outcomes = tuple(gd.outcome_symbols)

    for p, decl in gd.agents.items():
        if p not in players:
            raise UnknownSymbol(f"agent declared for unknown player {p}", decl.line, decl.col)
    agents = []
    for i, p in enumerate(players):
        decl = gd.agents.get(p)
        if decl is None:
            raise MissingAgent(f"no agent declared for player {p}", *_here(gd, "players"))
        try:
            agents.append(build(decl.spec, move_sets[i], outcomes))
        except GameError as exc:
            raise exc.at(decl.line, decl.col)

    game = Game(gd.name, tuple(players), move_sets, outcomes, outcome_fn, tuple(agents))
    if check_totality:
        try:
            validate_agents(game)
        except NonTotalAgent as exc:
            decl = gd.agents[exc.player]
            raise exc.at(decl.line, decl.col)
    return game


def load(path, check_totality: bool = True) -> Game:
    return elaborate(parse(Path(path).read_text(encoding="utf-8")), check_totality)


def bundled_games() -> list[str]:
    root = resources.files("selgame") / "games"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".hog"))


def bundled_path(name: str) -> Path:
    if not name.endswith(".hog"):
        name += ".hog"
    return Path(str(resources.files("selgame") / "games" / name))


# -- output ------------------------------------------------------------------

TABLE_HEADERS = {
    "both": ["Strategy", "Outcome", "Nash", "Defects", "Selection", "Defects"],
    "nash": ["Strategy", "Outcome", "Nash", "Defects"],
    "selection": ["Strategy", "Outcome", "Selection", "Defects"],
}
CSV_HEADERS = {
    "both": ["strategy", "outcome", "nash", "nash_defectors", "selection", "selection_defectors"],
    "nash": ["strategy", "outcome", "nash", "nash_defectors"],
    "selection": ["strategy", "outcome", "selection", "selection_defectors"],
}


def _strategy(profile, compact: bool) -> str:
    return ("" if compact else " ").join(profile)


def _cells(report: SolveReport, kind: str, yes: str, no: str):
    compact = all(len(m) == 1 for row in report.rows for m in row.profile)
    for row in report.rows:
        cells = [_strategy(row.profile, compact), format_outcome(row.outcome)]
        if kind in ("both", "nash"):
            cells += [yes if row.is_nash else no, ",".join(row.nash_defectors)]
        if kind in ("both", "selection"):
            cells += [yes if row.is_selection else no, ",".join(row.selection_defectors)]
        yield cells


def _json_outcome(value):
    if is_vector(value):
        return [format_rational(c) for c in value]
    return value


def render_report(report: SolveReport, fmt: str = "table", kind: str = "both") -> str:
    if kind not in TABLE_HEADERS:
        raise ValueError(f"unknown kind {kind!r}")
    if fmt == "table":
        lines = [" | ".join(TABLE_HEADERS[kind])]
        lines += [" | ".join(c).rstrip() for c in _cells(report, kind, "yes", "-")]
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADERS[kind])
        writer.writerows(_cells(report, kind, "yes", "no"))
        return buf.getvalue()
    if fmt == "json":
        rows = []
        for row in report.rows:
            entry = {"profile": list(row.profile), "outcome": _json_outcome(row.outcome)}
            if kind in ("both", "nash"):
                entry["nash"] = row.is_nash
                entry["nash_defectors"] = list(row.nash_defectors)
            if kind in ("both", "selection"):
                entry["selection"] = row.is_selection
                entry["selection_defectors"] = list(row.selection_defectors)
            rows.append(entry)
        return json.dumps({"game": report.game, "rows": rows}, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def serialize_strategic(sg: StrategicGame, name: str) -> str:
    name = re.sub(r"[^A-Za-z0-9_]", "_", name) or "compiled"
    lines = [f"game {name}", "players " + " ".join(sg.players)]
    for p, moves in zip(sg.players, sg.move_sets):
        lines.append(f"moves {p} : " + " ".join(moves))
    lines.append(f"outcomes vector {len(sg.players)}")
    lines.append("outcome table")
    for x in sg.profiles():
        payoff = " ".join(format_rational(Fraction(v)) for v in sg.payoffs[x])
        lines.append("  " + " ".join(x) + " -> " + payoff)
    lines.append("end")
    for k, p in enumerate(sg.players, start=1):
        lines.append(f"agent {p} : argmax-coord {k}")
    return "\n".join(lines) + "\n"
