"""Inductive acceptance, derivatives and DFA equivalence.

Every query validates its state and word, then evaluates the inductive
definition: ε is decided by the output of the state, a·w by the
successors on a. The acceptance bits of every state are computed one
suffix at a time, from the end of the word, so long words need no
recursion.
"""

import logging
from collections import deque
from typing import Dict, Optional, Sequence, Tuple, Union

from ..types import DomainError
from .machines import Afa, Dfa, Nfa, Word

logger = logging.getLogger(__name__)


def _symbol(alphabet, symbol: Union[int, str]) -> int:
    if isinstance(symbol, str):
        return alphabet.index(symbol)
    alphabet.check_word((symbol,))
    return symbol


def dfa_run(d: Dfa, q: int, w: Sequence[int]) -> int:
    """The state reached from q after reading w."""
    d.check_state(q)
    for a in d.alphabet.check_word(w):
        q = d.next[q][a]
    return q


def dfa_accepts(d: Dfa, q: int, w: Sequence[int]) -> int:
    return d.output[dfa_run(d, q, w)]


def lang_derivative(d: Dfa, q: int, symbol: Union[int, str]) -> int:
    """The state accepting {w | a·w accepted from q}."""
    d.check_state(q)
    return d.next[q][_symbol(d.alphabet, symbol)]


def _nfa_accepts(n: Nfa, q: int, w: Sequence[int], universal: bool) -> int:
    n.check_state(q)
    word = n.alphabet.check_word(w)
    combine = all if universal else any
    values = list(n.output)
    for symbol in reversed(word):
        values = [
            int(combine(values[p] for p in n.next[state][symbol]))
            for state in range(n.state_count)
        ]
    return values[q]


def nfa_accepts_existential(n: Nfa, q: int, w: Sequence[int]) -> int:
    """Some run on w ends in an accepting state."""
    return _nfa_accepts(n, q, w, universal=False)


def nfa_accepts_universal(n: Nfa, q: int, w: Sequence[int]) -> int:
    """Every run on w ends in an accepting state; a missing transition accepts."""
    return _nfa_accepts(n, q, w, universal=True)


def afa_accepts(a: Afa, q: int, w: Sequence[int]) -> int:
    """Some fork on the next symbol has every member accepting the rest of w.

    Raises:
        DomainError: if q or a symbol of w is invalid
    """
    a.check_state(q)
    word = a.alphabet.check_word(w)
    values = list(a.output)
    for symbol in reversed(word):
        values = [
            int(any(all(values[p] for p in fork) for fork in a.forks(state, symbol)))
            for state in range(a.state_count)
        ]
    return values[q]


def afa_accepts_naive(a: Afa, q: int, w: Sequence[int]) -> int:
    """The recursive definition evaluated directly, with no sharing between branches."""
    a.check_state(q)
    word = a.alphabet.check_word(w)
    if not word:
        return a.output[q]
    head, rest = word[0], word[1:]
    return int(any(
        all(afa_accepts_naive(a, p, rest) for p in fork)
        for fork in a.forks(q, head)
    ))


def dfa_equiv(d1: Dfa, q1: int, d2: Dfa, q2: int) -> Tuple[bool, Optional[Word]]:
    """Language equality of two DFA states by breadth-first search of the product.

    Returns:
        (True, None) when equivalent, else (False, a shortest distinguishing word)

    Raises:
        DomainError: if the alphabets differ
    """
    if d1.alphabet != d2.alphabet:
        raise DomainError(
            f"alphabets differ: {' '.join(d1.alphabet)} vs {' '.join(d2.alphabet)}"
        )
    d1.check_state(q1)
    d2.check_state(q2)
    start = (q1, q2)
    parent: Dict[Tuple[int, int], Optional[Tuple[Tuple[int, int], int]]] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, r = pair
        if d1.output[p] != d2.output[r]:
            word = []
            while parent[pair] is not None:
                pair, symbol = parent[pair]
                word.append(symbol)
            witness = tuple(reversed(word))
            logger.debug(f"States differ on a word of length {len(witness)}")
            return False, witness
        for a in range(len(d1.alphabet)):
            successor = (d1.next[p][a], d2.next[r][a])
            if successor not in parent:
                parent[successor] = (pair, a)
                queue.append(successor)
    return True, None
