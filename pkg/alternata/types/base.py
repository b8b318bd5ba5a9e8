"""Base type definitions for alternata."""

from enum import Enum


class AutomatonKind(str, Enum):
    """Kinds of automata a document can describe."""
    DFA = "dfa"
    NFA = "nfa"
    AFA = "afa"


class CheckMode(str, Enum):
    """How a diagram's inputs were covered."""
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


class SuiteScope(str, Enum):
    """Which law suites a check-laws run covers."""
    ALL = "all"
    MONAD = "monad"
    DISTLAW = "distlaw"
    NEGATIVE = "negative"
    SEMANTICS = "semantics"


class ExitCode(int, Enum):
    """Process exit codes of the CLI."""
    OK = 0
    REJECT = 1
    USAGE = 2
    CAPACITY = 3
