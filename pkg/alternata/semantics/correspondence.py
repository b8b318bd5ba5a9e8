"""Cross-checks between the semantics: determinized vs inductive, vs concrete, vs textbook."""

import itertools
import logging
from typing import Any, Callable, Hashable, Iterator, List, Optional, Sequence, Union

from ..automata import (
    Afa,
    Alphabet,
    Dfa,
    Nfa,
    Word,
    afa_accepts,
    dfa_accepts,
    dfa_equiv,
    nfa_accepts_existential,
    nfa_accepts_universal,
    subset_construction,
)
from ..config import CliConfig
from ..harness import LawReport, check_diagram, check_predicate, exhaustive, exhaustive_or_sampled
from ..monads import ALT, FiniteFunction, FiniteMonad, Layer
from ..types import DomainError
from .algebras import MAX, MIN, AlgebraOnTwo
from .behaviour import beh1, beh1_naive
from .determinize import DeterminizedMachine, determinize
from .strength import TWO, PointwiseAlgebra

logger = logging.getLogger(__name__)


def all_words(alphabet_size: int, max_len: int) -> Iterator[Word]:
    """Every word of length 0..max_len, shorter words first."""
    for length in range(max_len + 1):
        yield from itertools.product(range(alphabet_size), repeat=length)


class _Rendered:
    """A diagram input shown through a custom rendering."""
    __slots__ = ('value', '_text')

    def __init__(self, value: Any, text: str):
        self.value = value
        self._text = text

    def __str__(self) -> str:
        return self._text


def _word_cases(alphabet: Alphabet, max_len: int) -> List[_Rendered]:
    return [_Rendered(w, alphabet.render_word(w)) for w in all_words(len(alphabet), max_len)]


def _label(automaton: Union[Dfa, Nfa, Afa], q: int) -> str:
    return f"{automaton.kind.value}:{automaton.names[q]}"


def check_semantics_correspondence(
    automaton: Union[Dfa, Nfa, Afa],
    algebra: AlgebraOnTwo,
    q: int,
    max_len: int,
    machine: Optional[DeterminizedMachine] = None,
    diagram_id: Optional[str] = None
) -> LawReport:
    """beh₂ ∘ η = beh₁: the determinized state of η(q) accepts exactly what beh₁ accepts from q.

    Args:
        machine: A determinization of the same automaton and algebra; built from q when omitted
    """
    machine = machine or determinize(automaton, algebra, q)
    start = machine.state_of(machine.engine.unit(q))
    diagram_id = diagram_id or f"correspondence[{_label(automaton, q)},{algebra.name}]"
    return check_diagram(
        diagram_id,
        lambda w: dfa_accepts(machine.dfa, start, w.value),
        lambda w: beh1(automaton, algebra, q, w.value),
        exhaustive(_word_cases(automaton.alphabet, max_len)),
    )


def _concrete(automaton: Union[Dfa, Nfa, Afa], algebra: AlgebraOnTwo) -> Callable[[int, Sequence[int]], int]:
    if isinstance(automaton, Afa):
        return lambda q, w: afa_accepts(automaton, q, w)
    if isinstance(automaton, Dfa):
        return lambda q, w: dfa_accepts(automaton, q, w)
    if algebra is MIN:
        return lambda q, w: nfa_accepts_universal(automaton, q, w)
    return lambda q, w: nfa_accepts_existential(automaton, q, w)


def check_concrete_agreement(
    automaton: Union[Dfa, Nfa, Afa],
    algebra: AlgebraOnTwo,
    q: int,
    max_len: int
) -> LawReport:
    """beh₁ matches the kind's concrete acceptance condition (∃/∀ runs, forks)."""
    concrete = _concrete(automaton, algebra)
    return check_diagram(
        f"concrete[{_label(automaton, q)},{algebra.name}]",
        lambda w: beh1(automaton, algebra, q, w.value),
        lambda w: concrete(q, w.value),
        exhaustive(_word_cases(automaton.alphabet, max_len)),
    )


def check_beh1_agreement(
    automaton: Union[Dfa, Nfa, Afa],
    algebra: AlgebraOnTwo,
    q: int,
    max_len: int
) -> LawReport:
    """The memoized and the naive induction agree."""
    return check_diagram(
        f"beh1-unique[{_label(automaton, q)},{algebra.name}]",
        lambda w: beh1(automaton, algebra, q, w.value),
        lambda w: beh1_naive(automaton, algebra, q, w.value),
        exhaustive(_word_cases(automaton.alphabet, max_len)),
    )


def _check_em(
    monad: FiniteMonad,
    evaluate: Callable[[Hashable], int],
    carrier: Layer,
    prefix: str,
    config: CliConfig
) -> List[LawReport]:
    lifted = monad.lift(carrier, config.enumeration_bound, config.layer_cap)
    structure = FiniteFunction.of(carrier.size, [evaluate(e) for e in lifted.elements])

    unit = check_diagram(
        f"{prefix}.unit",
        lambda x: evaluate(monad.unit(carrier, x)),
        lambda x: x,
        exhaustive(list(range(carrier.size))),
    )
    mult = check_diagram(
        f"{prefix}.mult",
        lambda e: evaluate(monad.mult(carrier, lifted, e)),
        lambda e: evaluate(monad.fmap(structure, carrier, e)),
        exhaustive_or_sampled(
            lambda: monad.lift(lifted, config.enumeration_bound, config.layer_cap).elements,
            lambda rng: monad.sample(lifted, rng),
            config,
            f"{prefix}.mult",
        ),
    )
    return [unit, mult]


def check_em_laws(
    monad: FiniteMonad,
    algebra: AlgebraOnTwo,
    config: Optional[CliConfig] = None
) -> List[LawReport]:
    """β ∘ η = id and β ∘ μ = β ∘ T(β) on the carrier {0, 1}.

    The multiplication law runs over all of T²(2) when it enumerates
    (16 elements for P) and is sampled otherwise (Alt).
    """
    if algebra.monad_name != monad.name:
        raise DomainError(f"algebra {algebra.name} is not an algebra for {monad.name}")
    return _check_em(monad, algebra.evaluate, TWO, f"em[{algebra.name}]", config or CliConfig())


def check_pointwise_em_laws(
    pointwise: PointwiseAlgebra,
    config: Optional[CliConfig] = None
) -> List[LawReport]:
    """EM laws of β̂ on the function space 2^Y."""
    space = pointwise.space
    return _check_em(
        pointwise.monad,
        lambda e: space.index(pointwise(e)),
        space,
        f"em[{pointwise.algebra.name}^{pointwise.points}]",
        config or CliConfig(),
    )


def check_powerset_triangle(machine: DeterminizedMachine) -> LawReport:
    """F(f) ∘ η = ⟨o, δ⟩ on every source state."""
    engine = machine.engine
    source = engine.automaton
    return check_diagram(
        f"triangle[{source.kind.value},{engine.algebra.name}]",
        lambda q: engine.step(engine.unit(q)),
        lambda q: (source.output[q], source.next[q]),
        exhaustive(list(range(source.state_count))),
    )


def check_subset_agreement(nfa: Nfa, start: int, machine: Optional[DeterminizedMachine] = None) -> List[LawReport]:
    """determinize(·, max) against the textbook subset construction.

    ``states`` compares every textbook state with the determinized state
    holding the same subset: output and decoded successors must match.
    ``language`` runs dfa_equiv on the two start states.
    """
    machine = machine or determinize(nfa, MAX, start)
    textbook, subsets = subset_construction(nfa, start)
    label = _label(nfa, start)

    def generalized(i: int):
        j = machine.state_of(subsets[i])
        return machine.dfa.output[j], tuple(machine.decode[t] for t in machine.dfa.next[j])

    def classical(i: int):
        return textbook.output[i], tuple(subsets[t] for t in textbook.next[i])

    states = check_diagram(
        f"subset-construction[{label}].states",
        generalized,
        classical,
        exhaustive(list(range(textbook.state_count))),
    )
    equivalent, _ = dfa_equiv(machine.dfa, machine.state_of(subsets[0]), textbook, 0)
    language = check_predicate(
        f"subset-construction[{label}].language",
        lambda _: equivalent,
        exhaustive([start]),
    )
    return [states, language]


def check_determinized_language(machine: DeterminizedMachine, max_len: int) -> LawReport:
    """Every reachable Alt state Φ accepts w iff some member F of the family of Φ
    has beh₁(q)(w) = 1 for all q ∈ F.
    """
    if machine.engine.monad is not ALT:
        raise DomainError("the fork characterization applies to determinized AFAs")
    source = machine.source
    algebra = machine.algebra
    words = list(all_words(len(source.alphabet), max_len))
    cases = [
        _Rendered((i, w), f"{machine.dfa.names[i]}/{source.alphabet.render_word(w)}")
        for i in range(machine.dfa.state_count)
        for w in words
    ]

    def by_family(case: _Rendered) -> int:
        i, w = case.value
        return int(any(
            all(beh1(source, algebra, q, w) for q in member)
            for member in machine.decode[i].expanded()
        ))

    return check_diagram(
        f"determinized-language[{source.kind.value},{algebra.name}]",
        lambda case: dfa_accepts(machine.dfa, case.value[0], case.value[1]),
        by_family,
        exhaustive(cases),
    )


def check_predicate_language(
    automaton: Union[Dfa, Nfa, Afa],
    q: int,
    predicate: Callable[[Word], int],
    max_len: int,
    diagram_id: str
) -> LawReport:
    """The concrete acceptance from q equals a reference predicate on all short words."""
    concrete = _concrete(automaton, MAX)
    return check_diagram(
        diagram_id,
        lambda w: concrete(q, w.value),
        lambda w: predicate(w.value),
        exhaustive(_word_cases(automaton.alphabet, max_len)),
    )

