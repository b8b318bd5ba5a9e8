"""Automaton documents and the command-line surface."""

from .document import (
    AutomatonDocument,
    TransitionClause,
    automaton_to_document,
    document_to_automaton,
    load_document,
    parse_document,
    print_document,
)

__all__ = [
    'AutomatonDocument',
    'TransitionClause',
    'automaton_to_document',
    'document_to_automaton',
    'load_document',
    'parse_document',
    'print_document',
]
