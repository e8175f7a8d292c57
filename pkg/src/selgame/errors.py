"""Exception hierarchy and positioned diagnostics.

Every error raised by the library derives from :class:`GameError`.  The
CLI maps the four top-level families onto exit codes:

* :class:`GameSyntaxError` -> 2
* :class:`ModelError` (anything semantically wrong with a game) -> 3
* :class:`BudgetExceeded` -> 4
* :class:`TheoremViolation` -> 5
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    message: str
    line: int | None = None
    col: int | None = None

    def format(self, source: str | None = None) -> str:
        where = source or "<input>"
        if self.line is not None:
            where += f":{self.line}"
            if self.col is not None:
                where += f":{self.col}"
        return f"{where}: {self.severity}: {self.message}"


class GameError(Exception):
    """Base class; carries an optional source position."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def at(self, line: int | None, col: int | None = None) -> "GameError":
        # keep the innermost position if one is already attached
        if self.line is None:
            self.line, self.col = line, col
        return self

    def diagnostic(self) -> Diagnostic:
        return Diagnostic("error", self.message, self.line, self.col)


class GameSyntaxError(GameError):
    pass


class ModelError(GameError):
    """A game, order or agent description that is well-formed text but invalid."""


class CycleError(ModelError):
    pass


class UnknownSymbol(ModelError):
    pass


class DomainMismatch(ModelError):
    pass


class ModeMismatch(ModelError):
    pass


class FixDomainMismatch(ModelError):
    pass


class BadCoordinate(ModelError):
    pass


class OrderNotTotal(ModelError):
    pass


class ArityError(ModelError):
    pass


class AlphabetError(ModelError):
    pass


class IncompleteTable(ModelError):
    pass


class DuplicateRow(ModelError):
    pass


class MissingAgent(ModelError):
    pass


class NonTotalAgent(ModelError):
    def __init__(self, message, player=None, context=None, line=None, col=None):
        super().__init__(message, line, col)
        self.player = player
        self.context = context


class BudgetExceeded(GameError):
    pass


class TheoremViolation(GameError):
    pass
