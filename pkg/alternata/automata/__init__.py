"""Automata as coalgebras and their inductive acceptance semantics."""

from .acceptance import (
    afa_accepts,
    afa_accepts_naive,
    dfa_accepts,
    dfa_equiv,
    dfa_run,
    lang_derivative,
    nfa_accepts_existential,
    nfa_accepts_universal,
)
from .constructions import parity_afa, parity_predicate, random_afa, random_nfa, subset_construction
from .dot import export_dot
from .machines import Afa, Alphabet, Automaton, Dfa, Nfa, Word, dfa_as_nfa, make_afa, nfa_as_afa

__all__ = [
    'Afa',
    'Alphabet',
    'Automaton',
    'Dfa',
    'Nfa',
    'Word',
    'afa_accepts',
    'afa_accepts_naive',
    'dfa_accepts',
    'dfa_as_nfa',
    'dfa_equiv',
    'dfa_run',
    'export_dot',
    'lang_derivative',
    'make_afa',
    'nfa_accepts_existential',
    'nfa_accepts_universal',
    'nfa_as_afa',
    'parity_afa',
    'parity_predicate',
    'random_afa',
    'random_nfa',
    'subset_construction',
]
