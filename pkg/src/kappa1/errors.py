"""Exception types raised across the package."""

from __future__ import annotations


class Kappa1Error(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(Kappa1Error, ValueError):
    """Arguments violate an operation's preconditions."""


class GraphFormatError(InvalidInput):
    """A graph text file could not be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(InvalidInput):
    """Generating the requested graph would exceed the vertex-count cap."""


class DomainError(InvalidInput):
    """A formula was evaluated outside its domain."""


class LabelOutOfRange(InvalidInput):
    pass


class DuplicateVertex(InvalidInput):
    pass


class UnclassifiedTriple(InvalidInput):
    pass


class EmptyTerminal(InvalidInput):
    pass


class Inseparable(InvalidInput):
    """The two terminal sets touch, so no vertex set can separate them."""


class TooSmall(InvalidInput):
    pass


class Disconnected(InvalidInput):
    pass


class NotAnEdge(InvalidInput):
    pass


class NotASuperCut(Kappa1Error):
    """A candidate cut failed validation; ``reason`` names the broken invariant."""

    def __init__(self, reason: str) -> None:
        self.reason = reason
        super().__init__(reason)


class CannotAugment(Kappa1Error):
    pass


class BudgetExceeded(Kappa1Error):
    pass


class Undecided(Kappa1Error):
    """The certified interval for the super-connectivity straddles the connectivity."""
