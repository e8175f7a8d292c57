"""Ground types: symbols, outcomes, strict partial orders and contexts.

Symbols are plain interned ``str``.  An outcome is either a symbol or a
tuple of :class:`fractions.Fraction` (one payoff per player).  Finite sets
are tuples in declaration order, so everything downstream iterates
deterministically.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Sequence, Tuple, Union

from .errors import CycleError, UnknownSymbol

Symbol = str
Vector = Tuple[Fraction, ...]
Outcome = Union[Symbol, Vector]
Profile = Tuple[Symbol, ...]

SYMBOL_RE = re.compile(r"[A-Za-z0-9_]+\Z")


def symbol(name: str) -> Symbol:
    if not SYMBOL_RE.match(name):
        raise ValueError(f"invalid symbol {name!r}")
    return sys.intern(name)


def ordered_set(items: Iterable[Hashable]) -> tuple:
    """Distinct elements of ``items`` in first-occurrence order."""
    return tuple(dict.fromkeys(items))


def vector(*coords) -> Vector:
    return tuple(Fraction(c) for c in coords)


def is_vector(value: Outcome) -> bool:
    return isinstance(value, tuple)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_outcome(value: Outcome) -> str:
    if is_vector(value):
        return "(" + ",".join(format_rational(c) for c in value) + ")"
    return value


@dataclass(frozen=True)
class PartialOrder:
    """Strict partial order; ``(a, b)`` in ``strict`` means a is below b."""

    carrier: tuple
    strict: frozenset = field(default_factory=frozenset)

    def less(self, a, b) -> bool:
        return (a, b) in self.strict

    def dual(self) -> "PartialOrder":
        return PartialOrder(self.carrier, frozenset((b, a) for a, b in self.strict))

    def is_total_on(self, elems: Sequence) -> bool:
        return all(
            a == b or self.less(a, b) or self.less(b, a) for a in elems for b in elems
        )

    def sort_key(self, elems: Sequence):
        # chain position; only meaningful when the order is total on elems
        return {e: sum(self.less(o, e) for o in elems) for e in elems}


def transitive_closure_order(carrier: Sequence, pairs: Iterable[tuple]) -> PartialOrder:
    carrier = ordered_set(carrier)
    members = set(carrier)
    strict = set()
    for a, b in pairs:
        for e in (a, b):
            if e not in members:
                raise UnknownSymbol(f"order element {format_outcome(e)} is not an outcome")
        strict.add((a, b))
    # Warshall over the carrier in declaration order
    for k in carrier:
        below_k = [a for a in carrier if (a, k) in strict]
        above_k = [b for b in carrier if (k, b) in strict]
        for a in below_k:
            for b in above_k:
                strict.add((a, b))
    loops = [a for a in carrier if (a, a) in strict]
    if loops:
        raise CycleError(f"order is cyclic through {format_outcome(loops[0])}")
    return PartialOrder(carrier, frozenset(strict))


def maximal_elements(order: PartialOrder, s: Sequence) -> tuple:
    members = set(order.carrier)
    for r in s:
        if r not in members:
            raise UnknownSymbol(f"{format_outcome(r)} is not in the order's carrier")
    s = ordered_set(s)
    return tuple(r for r in s if not any(order.less(r, other) for other in s))


@dataclass(frozen=True)
class Context:
    """A total map from a player's moves to outcomes, stored as parallel tuples."""

    domain: tuple
    values: tuple

    def __post_init__(self):
        if len(self.domain) != len(self.values):
            raise ValueError("context table must cover exactly its domain")

    @classmethod
    def from_mapping(cls, mapping: dict) -> "Context":
        return cls(tuple(mapping), tuple(mapping.values()))

    def __call__(self, move):
        return self.values[self.domain.index(move)]

    def items(self):
        return zip(self.domain, self.values)

    def preimage(self, targets) -> tuple:
        targets = set(targets)
        return tuple(x for x, r in self.items() if r in targets)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{x}->{format_outcome(r)}" for x, r in self.items()) + "}"


def image(p: Context) -> tuple:
    return ordered_set(p.values)
