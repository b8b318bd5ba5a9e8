"""Ready-made automata: the textbook subset construction, random machines, fixtures."""

import logging
from collections import deque
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..config.constants import DETERMINIZE_STATE_CAP, MAX_SAMPLED_FORKS
from ..monads import AltElement, random_subset
from ..order import StateSet, minimal_elements
from ..types import CapacityError
from .machines import Afa, Alphabet, Dfa, Nfa, make_afa

logger = logging.getLogger(__name__)


def subset_construction(
    nfa: Nfa,
    start: int,
    state_cap: int = DETERMINIZE_STATE_CAP
) -> Tuple[Dfa, List[StateSet]]:
    """Reachable subsets from {start}: a subset accepts iff it holds an accepting
    state, and moves to the union of its members' successors.

    Returns:
        The DFA (state 0 is {start}) and the subset behind each DFA state
    """
    nfa.check_state(start)
    n = nfa.state_count
    initial = StateSet.singleton(n, start)
    index: Dict[StateSet, int] = {initial: 0}
    subsets = [initial]
    rows: List[List[int]] = []
    queue = deque([initial])
    while queue:
        current = queue.popleft()
        row = []
        for a in range(len(nfa.alphabet)):
            bits = 0
            for q in current:
                bits |= nfa.next[q][a].bits
            target = StateSet(bits, n)
            if target not in index:
                if len(subsets) >= state_cap:
                    raise CapacityError(f"subset construction exceeds {state_cap} states", cap=state_cap)
                index[target] = len(subsets)
                subsets.append(target)
                queue.append(target)
            row.append(index[target])
        rows.append(row)
    output = tuple(int(any(nfa.output[q] for q in s)) for s in subsets)
    dfa = Dfa(
        nfa.alphabet,
        output,
        next=tuple(tuple(r) for r in rows),
        names=tuple(f"s{i}" for i in range(len(subsets))),
    )
    return dfa, subsets


def random_nfa(rng: np.random.Generator, max_states: int, alphabet: Alphabet) -> Nfa:
    """1..max_states states, random outputs, uniform random successor sets."""
    n = int(rng.integers(1, max_states + 1))
    output = tuple(int(b) for b in rng.integers(0, 2, size=n))
    rows = tuple(
        tuple(random_subset(rng, n) for _ in alphabet)
        for _ in range(n)
    )
    return Nfa(alphabet, output, next=rows)


def random_afa(rng: np.random.Generator, max_states: int, alphabet: Alphabet) -> Afa:
    """1..max_states states; each transition gets 0..MAX_SAMPLED_FORKS random forks."""
    n = int(rng.integers(1, max_states + 1))
    output = tuple(int(b) for b in rng.integers(0, 2, size=n))
    rows = []
    for _ in range(n):
        row = []
        for _ in alphabet:
            count = int(rng.integers(0, MAX_SAMPLED_FORKS + 1))
            row.append(AltElement(n, minimal_elements(random_subset(rng, n) for _ in range(count))))
        rows.append(tuple(row))
    return Afa(alphabet, output, next=tuple(rows))


def parity_afa() -> Afa:
    """Five states; from q0 a word is accepted when it is nonempty and its
    numbers of a and of b are both even or both odd.

    q1/q2 track the parity of b (q2 odd), q3/q4 the parity of a (q3 even).
    q0 forks into {q1, q3} or {q2, q4} on either letter.
    """
    alphabet = Alphabet(("a", "b"))
    start_forks = [[1, 3], [2, 4]]
    forks: Sequence[Sequence[Sequence[Sequence[int]]]] = [
        [start_forks, start_forks],   # q0
        [[[1]], [[2]]],               # q1: a loops, b to q2
        [[[2]], [[1]]],               # q2: a loops, b to q1
        [[[4]], [[3]]],               # q3: b loops, a to q4
        [[[3]], [[4]]],               # q4: b loops, a to q3
    ]
    return make_afa(alphabet, (0, 0, 1, 1, 0), forks, names=("q0", "q1", "q2", "q3", "q4"))


def parity_predicate(word: Sequence[int]) -> int:
    """Nonempty, with #a and #b of equal parity."""
    if not word:
        return 0
    a_count = sum(1 for s in word if s == 0)
    b_count = len(word) - a_count
    return int(a_count % 2 == b_count % 2)
