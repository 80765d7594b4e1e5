"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class GraphFormulaError(Exception):
    """Base class for errors raised by this package."""


class GraphTypeError(GraphFormulaError, TypeError):
    """Interface lengths, ranks or expression types do not fit together."""


class ContractError(GraphFormulaError, ValueError):
    """An operation was called outside its precondition."""


class SpecSyntaxError(GraphFormulaError):
    """A spec file could not be parsed; carries the source location."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line else ""
        super().__init__(where + message)
