"""The bialgebraic semantics beh₁ of a T-automaton, by direct induction.

beh₁(q)(ε) = o(q) and beh₁(q)(a·w) = β(T(p ↦ beh₁(p)(w))(δ(q)(a))).
"""

from typing import Dict, Hashable, Sequence, Union

from ..automata import Afa, Dfa, Nfa
from ..monads import AltElement, FiniteFunction
from ..order import StateSet, union_all
from ..types import DomainError
from .algebras import AlgebraOnTwo
from .determinize import GeneralizedPowerset, as_t_automaton, monad_of
from .strength import TWO


def support(element: Hashable) -> StateSet:
    """States a P- or Alt-bundle mentions."""
    if isinstance(element, StateSet):
        return element
    if isinstance(element, AltElement):
        return union_all(element.forks, element.carrier_size)
    raise DomainError(f"no support for {type(element).__name__}")


def _checked(automaton, algebra: AlgebraOnTwo, q: int, w: Sequence[int]):
    a = as_t_automaton(automaton)
    monad = monad_of(a)
    if algebra.monad_name != monad.name:
        raise DomainError(f"algebra {algebra.name} is not an algebra for {monad.name}")
    a.check_state(q)
    return a, monad, a.alphabet.check_word(w)


def _aggregate(monad, algebra: AlgebraOnTwo, bundle: Hashable, values: Dict[int, int], n: int) -> int:
    table = FiniteFunction.of(2, [values.get(p, 0) for p in range(n)])
    return algebra(monad.fmap(table, TWO, bundle))


def beh1(automaton: Union[Dfa, Nfa, Afa], algebra: AlgebraOnTwo, q: int, w: Sequence[int]) -> int:
    """Acceptance of w from q under the algebra.

    The bits of every state are computed for each suffix of w, from the
    end of the word.
    """
    a, monad, word = _checked(automaton, algebra, q, w)
    values = dict(enumerate(a.output))
    for symbol in reversed(word):
        values = {
            state: _aggregate(monad, algebra, a.next[state][symbol], values, a.state_count)
            for state in range(a.state_count)
        }
    return values[q]


def beh1_naive(automaton: Union[Dfa, Nfa, Afa], algebra: AlgebraOnTwo, q: int, w: Sequence[int]) -> int:
    """The same induction with no sharing between branches."""
    a, monad, word = _checked(automaton, algebra, q, w)
    if not word:
        return a.output[q]
    bundle = a.next[q][word[0]]
    values = {p: beh1_naive(a, algebra, p, word[1:]) for p in support(bundle)}
    return _aggregate(monad, algebra, bundle, values, a.state_count)


def beh2(engine: GeneralizedPowerset, element: Hashable, w: Sequence[int]) -> int:
    """Acceptance of w by the determinized state ``element``, stepping F(f) on the fly."""
    word = engine.automaton.alphabet.check_word(w)
    for symbol in word:
        _, successors = engine.step(element)
        element = successors[symbol]
    bit, _ = engine.step(element)
    return bit
