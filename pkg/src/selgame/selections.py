"""Builtin agent descriptions and their elaboration into selection functions.

The spec classes mirror the ``selspec`` grammar of game files one to one;
``str(spec)`` prints the concrete syntax back.  :func:`build` checks a spec
against a player's moves and the game's outcomes and returns a
:class:`~selgame.hof.SelectionFunction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .core import Context, PartialOrder, format_outcome, image, is_vector, transitive_closure_order
from .errors import (
    BadCoordinate,
    DomainMismatch,
    FixDomainMismatch,
    ModeMismatch,
    OrderNotTotal,
    UnknownSymbol,
)
from .hof import SelectionFunction

Pairs = Tuple[Tuple[str, str], ...]


def _format_order(pairs: Pairs, chain: bool) -> str:
    if chain and pairs:
        syms = [pairs[0][0]] + [b for _, b in pairs]
        return "total(" + " < ".join(syms) + ")"
    return "order(" + ", ".join(f"{a} < {b}" for a, b in pairs) + ")"


@dataclass(frozen=True)
class ArgmaxOrder:
    pairs: Pairs
    chain: bool = False

    def __str__(self):
        return "argmax " + _format_order(self.pairs, self.chain)


@dataclass(frozen=True)
class ArgminOrder:
    pairs: Pairs
    chain: bool = False

    def __str__(self):
        return "argmin " + _format_order(self.pairs, self.chain)


@dataclass(frozen=True)
class ArgmaxCoord:
    k: int

    def __str__(self):
        return f"argmax-coord {self.k}"


@dataclass(frozen=True)
class ArgminCoord:
    k: int

    def __str__(self):
        return f"argmin-coord {self.k}"


@dataclass(frozen=True)
class Fix:
    def __str__(self):
        return "fix"


@dataclass(frozen=True)
class NonFix:
    def __str__(self):
        return "nonfix"


@dataclass(frozen=True)
class SubMax:
    """Second-best heuristic.  ``pairs`` is a declared total order in symbolic
    mode; ``None`` ranks vector outcomes by their first coordinate."""

    pairs: Optional[Pairs] = None
    chain: bool = False

    def __str__(self):
        if self.pairs is None:
            return "submax"
        return "submax " + _format_order(self.pairs, self.chain)


@dataclass(frozen=True)
class Prefer:
    targets: Tuple[str, ...]

    def __str__(self):
        return "prefer { " + " ".join(self.targets) + " }"


@dataclass(frozen=True)
class Lex:
    first: "SelectionSpec"
    second: "SelectionSpec"

    def __str__(self):
        return f"lex({self.first}, {self.second})"


SelectionSpec = Union[
    ArgmaxOrder, ArgminOrder, ArgmaxCoord, ArgminCoord, Fix, NonFix, SubMax, Prefer, Lex
]


# -- evaluation --------------------------------------------------------------


def eval_argmax_order(order: PartialOrder, p: Context) -> tuple:
    """Moves whose outcome is not strictly below any attainable outcome."""
    attainable = image(p)
    carrier = set(order.carrier)
    for r in attainable:
        if r not in carrier:
            raise UnknownSymbol(f"{format_outcome(r)} is not ordered by this agent")
    return tuple(x for x, r in p.items() if not any(order.less(r, s) for s in attainable))


def eval_argmin_order(order: PartialOrder, p: Context) -> tuple:
    return eval_argmax_order(order.dual(), p)


def _coordinate(k: int, p: Context) -> list:
    if not all(is_vector(r) for r in p.values):
        raise ModeMismatch("coordinate selection needs vector outcomes")
    if not all(1 <= k <= len(r) for r in p.values):
        raise BadCoordinate(f"coordinate {k} out of range")
    return [r[k - 1] for r in p.values]


def eval_argmax_coord(k: int, p: Context) -> tuple:
    coords = _coordinate(k, p)
    best = max(coords)
    return tuple(x for x, c in zip(p.domain, coords) if c == best)


def eval_argmin_coord(k: int, p: Context) -> tuple:
    coords = _coordinate(k, p)
    best = min(coords)
    return tuple(x for x, c in zip(p.domain, coords) if c == best)


def _require_endomap(p: Context):
    if not set(p.values) <= set(p.domain):
        raise FixDomainMismatch("fixpoint agents need moves and outcomes to coincide")


def eval_fix(p: Context) -> tuple:
    _require_endomap(p)
    fixed = tuple(x for x, r in p.items() if r == x)
    return fixed or p.domain


def eval_nonfix(p: Context) -> tuple:
    _require_endomap(p)
    moving = tuple(x for x, r in p.items() if r != x)
    return moving or p.domain


def eval_submax(p: Context, order: PartialOrder | None = None) -> tuple:
    if order is None:
        keys = _coordinate(1, p)
    else:
        attainable = image(p)
        if not order.is_total_on(attainable):
            raise OrderNotTotal("submax needs a total order on the attainable outcomes")
        rank = order.sort_key(attainable)
        keys = [rank[r] for r in p.values]
    distinct = sorted(set(keys), reverse=True)
    if len(distinct) < 2:
        return p.domain
    return tuple(x for x, key in zip(p.domain, keys) if key == distinct[1])


def eval_prefer(targets, p: Context) -> tuple:
    return p.preimage(targets)


def eval_lex(first: SelectionFunction, second: SelectionFunction, p: Context) -> tuple:
    if set(first.moves) != set(second.moves) or set(first.outcomes) != set(second.outcomes):
        raise DomainMismatch("lex operands range over different moves or outcomes")
    a = first.ordered(p)
    b = second(p)
    both = tuple(x for x in a if x in b)
    return both or a


# -- elaboration -------------------------------------------------------------


def _vector_arity(outcomes) -> int | None:
    if outcomes and all(is_vector(r) for r in outcomes):
        return len(outcomes[0])
    return None


def _symbolic_only(spec, arity):
    if arity is not None:
        raise ModeMismatch(f"'{spec}' needs symbolic outcomes, this game has payoff vectors")


def build(spec: SelectionSpec, moves, outcomes) -> SelectionFunction:
    moves = tuple(moves)
    outcomes = tuple(outcomes)
    arity = _vector_arity(outcomes)
    name = str(spec)

    if isinstance(spec, (ArgmaxOrder, ArgminOrder)):
        _symbolic_only(spec, arity)
        order = transitive_closure_order(outcomes, spec.pairs)
        if isinstance(spec, ArgminOrder):
            order = order.dual()
        return SelectionFunction(moves, outcomes, lambda p: eval_argmax_order(order, p), name)

    if isinstance(spec, (ArgmaxCoord, ArgminCoord)):
        if arity is None:
            raise ModeMismatch(f"'{spec}' needs vector outcomes")
        if not 1 <= spec.k <= arity:
            raise BadCoordinate(f"coordinate {spec.k} out of range 1..{arity}")
        k = spec.k
        fn = eval_argmax_coord if isinstance(spec, ArgmaxCoord) else eval_argmin_coord
        return SelectionFunction(moves, outcomes, lambda p: fn(k, p), name)

    if isinstance(spec, (Fix, NonFix)):
        if arity is not None or set(moves) != set(outcomes):
            raise FixDomainMismatch(f"'{spec}' needs the player's moves to equal the outcomes")
        fn = eval_fix if isinstance(spec, Fix) else eval_nonfix
        return SelectionFunction(moves, outcomes, fn, name)

    if isinstance(spec, SubMax):
        if spec.pairs is None:
            if arity is None:
                raise ModeMismatch("bare 'submax' ranks payoff vectors; give an order for symbols")
            return SelectionFunction(moves, outcomes, eval_submax, name)
        _symbolic_only(spec, arity)
        order = transitive_closure_order(outcomes, spec.pairs)
        if not order.is_total_on(outcomes):
            raise OrderNotTotal(f"'{spec}' does not totally order the outcomes")
        return SelectionFunction(moves, outcomes, lambda p: eval_submax(p, order), name)

    if isinstance(spec, Prefer):
        _symbolic_only(spec, arity)
        known = set(outcomes)
        for t in spec.targets:
            if t not in known:
                raise UnknownSymbol(f"prefer target {t} is not an outcome")
        targets = frozenset(spec.targets)
        return SelectionFunction(moves, outcomes, lambda p: eval_prefer(targets, p), name)

    if isinstance(spec, Lex):
        first = build(spec.first, moves, outcomes)
        second = build(spec.second, moves, outcomes)
        return SelectionFunction(moves, outcomes, lambda p: eval_lex(first, second, p), name)

    raise TypeError(f"not a selection spec: {spec!r}")
