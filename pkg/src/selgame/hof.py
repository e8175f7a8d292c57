"""Quantifiers, selection functions and the decidable checks between them.

A selection function maps a context ``p: X -> R`` to a set of moves, a
quantifier maps it to a set of outcomes.  Both carry their move and
outcome sets so the checkers below can enumerate the full context space
``R ** X``.  All checks are exhaustive and guarded by a context budget.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterator

from .core import Context, image
from .errors import BudgetExceeded, DomainMismatch

DEFAULT_CONTEXT_BUDGET = 10**6


class _HigherOrder:
    def __init__(self, moves, outcomes, fn: Callable[[Context], object], name: str = ""):
        self.moves = tuple(moves)
        self.outcomes = tuple(outcomes)
        self.fn = fn
        self.name = name or getattr(fn, "__name__", type(self).__name__)

    def __call__(self, p: Context) -> frozenset:
        return frozenset(self.fn(p))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"


class SelectionFunction(_HigherOrder):
    """Context -> set of preferred moves."""

    def ordered(self, p: Context) -> tuple:
        chosen = self(p)
        return tuple(x for x in self.moves if x in chosen)


class Quantifier(_HigherOrder):
    """Context -> set of preferred outcomes."""

    def ordered(self, p: Context) -> tuple:
        # outcomes outside the declared set (unrealistic quantifiers) go last
        chosen = self(p)
        declared = [r for r in self.outcomes if r in chosen]
        return tuple(declared) + tuple(sorted(chosen.difference(declared), key=repr))


def context_space_size(moves, outcomes) -> int:
    return len(outcomes) ** len(moves)


def all_contexts(moves, outcomes, budget: int = DEFAULT_CONTEXT_BUDGET) -> Iterator[Context]:
    size = context_space_size(moves, outcomes)
    if size > budget:
        raise BudgetExceeded(
            f"context space has {size} elements (|R|^|X| = {len(outcomes)}^{len(moves)}), "
            f"budget is {budget}"
        )
    moves = tuple(moves)
    for values in itertools.product(outcomes, repeat=len(moves)):
        yield Context(moves, values)


def induced_quantifier(e: SelectionFunction) -> Quantifier:
    def quantifier(p):
        return {p(x) for x in e(p)}

    return Quantifier(e.moves, e.outcomes, quantifier, f"bar({e.name})")


def induced_selection(q: Quantifier) -> SelectionFunction:
    def selection(p):
        good = q(p)
        return {x for x, r in p.items() if r in good}

    return SelectionFunction(q.moves, q.outcomes, selection, f"bar({q.name})")


def image_quantifier(moves, outcomes) -> Quantifier:
    return Quantifier(moves, outcomes, image, "Im")


def nonempty_witness(f, budget: int = DEFAULT_CONTEXT_BUDGET) -> Context | None:
    """First context on which ``f`` is empty, or None when ``f`` is total."""
    for p in all_contexts(f.moves, f.outcomes, budget):
        if not f(p):
            return p
    return None


def is_total(f, budget: int = DEFAULT_CONTEXT_BUDGET) -> bool:
    return nonempty_witness(f, budget) is None


def _check_same_domains(a, b):
    if set(a.moves) != set(b.moves) or set(a.outcomes) != set(b.outcomes):
        raise DomainMismatch(f"{a.name} and {b.name} range over different moves or outcomes")


def attainment_witness(e: SelectionFunction, q: Quantifier, budget=DEFAULT_CONTEXT_BUDGET):
    """First context where a preferred move of ``e`` yields a non-preferred outcome of ``q``,
    or where ``e`` is empty.  None means ``e`` attains ``q``."""
    _check_same_domains(e, q)
    for p in all_contexts(e.moves, e.outcomes, budget):
        moves = e(p)
        if not moves:
            return p
        good = q(p)
        if any(p(x) not in good for x in moves):
            return p
    return None


def attains(e: SelectionFunction, q: Quantifier, budget: int = DEFAULT_CONTEXT_BUDGET) -> bool:
    """Attainment in the strict sense: ``e`` is total and every good move has a good outcome."""
    return attainment_witness(e, q, budget) is None


def is_realistic(q: Quantifier, budget: int = DEFAULT_CONTEXT_BUDGET) -> bool:
    for p in all_contexts(q.moves, q.outcomes, budget):
        good = q(p)
        if good and not good.intersection(p.values):
            return False
    return True


def context_dependence_witness(q: Quantifier, budget=DEFAULT_CONTEXT_BUDGET):
    """Pair of contexts with equal images but different values, or None."""
    seen: dict[frozenset, tuple[Context, frozenset]] = {}
    for p in all_contexts(q.moves, q.outcomes, budget):
        key = frozenset(p.values)
        value = q(p)
        if key in seen:
            first, first_value = seen[key]
            if first_value != value:
                return first, p
        else:
            seen[key] = (p, value)
    return None


def is_context_independent(q: Quantifier, budget: int = DEFAULT_CONTEXT_BUDGET) -> bool:
    return context_dependence_witness(q, budget) is None


def budget_allows(moves, outcomes, budget: int = DEFAULT_CONTEXT_BUDGET) -> bool:
    return context_space_size(moves, outcomes) <= budget


__all__ = [
    "DEFAULT_CONTEXT_BUDGET",
    "Quantifier",
    "SelectionFunction",
    "all_contexts",
    "attainment_witness",
    "attains",
    "budget_allows",
    "context_dependence_witness",
    "context_space_size",
    "image_quantifier",
    "induced_quantifier",
    "induced_selection",
    "is_context_independent",
    "is_realistic",
    "is_total",
    "nonempty_witness",
]
