"""alternata: alternating automata, their determinization, and the monad laws behind it."""

__version__ = "0.1.0"
