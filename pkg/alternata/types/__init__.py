"""Type definitions for alternata."""

from .base import AutomatonKind, CheckMode, ExitCode, SuiteScope
from .errors import AlternataError, CapacityError, DomainError, ParseError

__all__ = [
    'AutomatonKind',
    'CheckMode',
    'ExitCode',
    'SuiteScope',
    'AlternataError',
    'CapacityError',
    'DomainError',
    'ParseError',
]
