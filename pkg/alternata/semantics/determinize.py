"""The generalized powerset construction.

A T-automaton f = ⟨o, δ⟩ : Q → 2 × T(Q)^A becomes a deterministic
automaton on T(Q) with F(f) = G(μ) ∘ λ ∘ T(f): push the state bundle
through f, let the algebraic law split it into an output bit and one
bundle of bundles per symbol, and flatten each with μ. Only the part
reachable from η(start) is built.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Hashable, List, Tuple, Union

from ..automata import Afa, Dfa, Nfa, dfa_as_nfa
from ..config.constants import DETERMINIZE_STATE_CAP
from ..monads import ALT, POWERSET, FiniteFunction, FiniteMonad, Layer, format_element
from ..types import CapacityError, DomainError
from .algebras import AlgebraOnTwo
from .strength import AlgebraicDistLaw, restricted_pairs

logger = logging.getLogger(__name__)

TAutomaton = Union[Nfa, Afa]


def monad_of(automaton: TAutomaton) -> FiniteMonad:
    return ALT if isinstance(automaton, Afa) else POWERSET


def as_t_automaton(automaton: Union[Dfa, Nfa, Afa]) -> TAutomaton:
    """DFAs are read as NFAs with singleton successors."""
    return dfa_as_nfa(automaton) if isinstance(automaton, Dfa) else automaton


class GeneralizedPowerset:
    """F(f) : T(Q) → 2 × T(Q)^A for one T-automaton and one algebra.

    Raises:
        DomainError: if the algebra belongs to a different monad than the automaton
    """

    def __init__(self, automaton: Union[Dfa, Nfa, Afa], algebra: AlgebraOnTwo):
        self.automaton = as_t_automaton(automaton)
        self.monad = monad_of(self.automaton)
        if algebra.monad_name != self.monad.name:
            raise DomainError(
                f"algebra {algebra.name} is for {algebra.monad_name}, "
                f"a {self.automaton.kind.value} needs one for {self.monad.name}"
            )
        self.algebra = algebra
        a = self.automaton
        self.states = Layer.discrete(a.state_count, name="Q")
        # Successor bundles that occur in δ: the carrier λ distributes over.
        self.successors = Layer(
            dict.fromkeys(t for row in a.next for t in row),
            name="T(Q)",
        )
        coalgebra = [
            (a.output[q], tuple(self.successors.index(t) for t in a.next[q]))
            for q in range(a.state_count)
        ]
        self.pairs = restricted_pairs(coalgebra, name="2xT(Q)^A")
        self.coalgebra = FiniteFunction.of(self.pairs.size, [self.pairs.index(p) for p in coalgebra])
        self.law = AlgebraicDistLaw(self.monad, algebra, self.pairs, self.successors, len(a.alphabet))

    def unit(self, q: int) -> Hashable:
        self.automaton.check_state(q)
        return self.monad.unit(self.states, q)

    def step(self, element: Hashable) -> Tuple[int, Tuple[Hashable, ...]]:
        """Output bit and per-symbol successor of a T(Q) state."""
        bit, rows = self.law(self.monad.fmap(self.coalgebra, self.pairs, element))
        return bit, tuple(self.monad.mult(self.states, self.successors, r) for r in rows)


@dataclass(frozen=True)
class DeterminizedMachine:
    """A DFA whose state i stands for the T(Q) element ``decode[i]``."""
    dfa: Dfa
    decode: Tuple[Hashable, ...]
    engine: GeneralizedPowerset

    @property
    def source(self) -> TAutomaton:
        return self.engine.automaton

    @property
    def algebra(self) -> AlgebraOnTwo:
        return self.engine.algebra

    @cached_property
    def _index(self) -> Dict[Hashable, int]:
        return {e: i for i, e in enumerate(self.decode)}

    def state_of(self, element: Hashable) -> int:
        """The DFA state decoding to ``element``.

        Raises:
            DomainError: if the element was not reached
        """
        try:
            return self._index[element]
        except KeyError:
            raise DomainError(f"{format_element(element)} is not a reachable state") from None

    def describe(self, i: int) -> str:
        """The decoded bundle of state i with source state names."""
        names = self.source.names
        element = self.decode[i]
        if self.engine.monad is ALT:
            forks = ["{" + " ".join(names[q] for q in fork) + "}" for fork in element]
            return " ".join(forks) if forks else "(no fork)"
        return "{" + " ".join(names[q] for q in element) + "}"


def determinize(
    automaton: Union[Dfa, Nfa, Afa],
    algebra: AlgebraOnTwo,
    start: int,
    state_cap: int = DETERMINIZE_STATE_CAP
) -> DeterminizedMachine:
    """Breadth-first construction of the reachable part of F(f) from η(start).

    Args:
        automaton: NFA (with max or min) or AFA (with beta_alt); a DFA counts as an NFA
        algebra: Aggregates acceptance bits
        start: Source state whose unit becomes DFA state s0
        state_cap: Largest number of DFA states built

    Returns:
        The DFA with states s0..sN and the bundle each one stands for

    Raises:
        DomainError: on an algebra of the wrong monad or an invalid start
        CapacityError: if more than state_cap states are reachable
    """
    engine = GeneralizedPowerset(automaton, algebra)
    initial = engine.unit(start)
    index: Dict[Hashable, int] = {initial: 0}
    decode: List[Hashable] = [initial]
    outputs: List[int] = []
    rows: List[Tuple[int, ...]] = []

    queue = deque([initial])
    while queue:
        bit, successors = engine.step(queue.popleft())
        row = []
        for target in successors:
            if target not in index:
                if len(decode) >= state_cap:
                    raise CapacityError(f"determinization exceeds {state_cap} states", cap=state_cap)
                index[target] = len(decode)
                decode.append(target)
                queue.append(target)
            row.append(index[target])
        outputs.append(bit)
        rows.append(tuple(row))

    logger.info(
        f"Determinized a {engine.automaton.kind.value} of {engine.automaton.state_count} states "
        f"with {algebra.name}: {len(decode)} reachable states"
    )
    dfa = Dfa(
        engine.automaton.alphabet,
        tuple(outputs),
        next=tuple(rows),
        names=tuple(f"s{i}" for i in range(len(decode))),
    )
    return DeterminizedMachine(dfa, tuple(decode), engine)
