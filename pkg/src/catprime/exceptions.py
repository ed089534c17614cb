"""Exception hierarchy."""

__all__ = ["CatPrimeError", "InputError", "NotApplicable"]


class CatPrimeError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CatPrimeError, ValueError):
    """Malformed input: bad file contents, unknown vertices, invalid witnesses."""


class NotApplicable(CatPrimeError):
    """An operation's precondition on the graph structure does not hold."""
