import pytest

from alternata.automata import dfa_accepts, dfa_equiv
from alternata.monads import AltElement, alt_unit
from alternata.order import StateSet
from alternata.semantics import ALT_BETA, MAX, MIN, GeneralizedPowerset, determinize
from alternata.types import CapacityError, DomainError


def test_parity_determinizes_to_three_states(parity):
    machine = determinize(parity, ALT_BETA, 0)
    dfa = machine.dfa
    assert dfa.names == ("s0", "s1", "s2")
    assert dfa.output == (0, 0, 1)
    assert dfa.next == ((1, 1), (2, 2), (1, 1))
    assert machine.decode[0] == alt_unit(5, 0)
    assert machine.decode[1] == AltElement.of(5, [[1, 3], [2, 4]])
    assert [machine.describe(i) for i in range(3)] == ["{q0}", "{q1 q3} {q2 q4}", "{q2 q3} {q1 q4}"]


def test_parity_machine_accepts_the_parity_language(parity, even_length):
    machine = determinize(parity, ALT_BETA, 0)
    assert dfa_equiv(machine.dfa, 0, even_length, 0) == (True, None)
    assert dfa_accepts(machine.dfa, 0, (0, 1)) == 1


def test_nfa_with_max_is_the_subset_construction(ends_in_a):
    machine = determinize(ends_in_a, MAX, 0)
    assert machine.decode == (StateSet.of(2, [0]), StateSet.of(2, [0, 1]))
    assert machine.dfa.output == (0, 1)
    assert machine.dfa.next == ((1, 0), (1, 0))
    assert machine.describe(1) == "{p q}"
    assert machine.state_of(StateSet.of(2, [0, 1])) == 1


def test_nfa_with_min_aggregates_universally(ends_in_a):
    machine = determinize(ends_in_a, MIN, 1)
    # q has no successors: its determinized successor is the empty set, which accepts everything
    assert machine.decode == (StateSet.of(2, [1]), StateSet.empty(2))
    assert machine.dfa.output == (1, 1)


def test_dfa_is_read_as_singleton_nfa(even_length):
    machine = determinize(even_length, MAX, 0)
    assert machine.dfa.state_count == 3
    assert machine.source.kind.value == "nfa"
    assert dfa_equiv(machine.dfa, 0, even_length, 0) == (True, None)


def test_unreached_element(ends_in_a):
    machine = determinize(ends_in_a, MAX, 0)
    with pytest.raises(DomainError, match="not a reachable state"):
        machine.state_of(StateSet.of(2, [1]))


def test_rejects_algebra_of_the_other_monad(parity, ends_in_a):
    with pytest.raises(DomainError):
        determinize(parity, MAX, 0)
    with pytest.raises(DomainError):
        GeneralizedPowerset(ends_in_a, ALT_BETA)


def test_rejects_unknown_start(parity):
    with pytest.raises(DomainError):
        determinize(parity, ALT_BETA, 9)


def test_state_cap(parity):
    with pytest.raises(CapacityError):
        determinize(parity, ALT_BETA, 0, state_cap=2)


def test_step_of_a_unit_is_the_transition(parity):
    engine = GeneralizedPowerset(parity, ALT_BETA)
    for q in range(parity.state_count):
        assert engine.step(engine.unit(q)) == (parity.output[q], parity.next[q])
