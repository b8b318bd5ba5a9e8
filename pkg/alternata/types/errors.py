"""Exception hierarchy for alternata."""

from typing import Optional


class AlternataError(Exception):
    """Base class for every error raised by alternata."""


class DomainError(AlternataError, ValueError):
    """An input violates a precondition (carrier, closure, alphabet)."""


class CapacityError(AlternataError):
    """A configured bound was exceeded.

    Attributes:
        cap: The bound that was hit
    """

    def __init__(self, message: str, cap: Optional[int] = None):
        super().__init__(message)
        self.cap = cap


class ParseError(AlternataError):
    """An automaton document could not be parsed.

    Attributes:
        line: 1-based line number, or None for whole-document problems
    """

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
