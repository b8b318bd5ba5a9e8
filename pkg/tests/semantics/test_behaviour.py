import itertools

import pytest

from alternata.automata import parity_predicate
from alternata.monads import AltElement
from alternata.order import StateSet
from alternata.semantics import ALT_BETA, MAX, MIN, GeneralizedPowerset, beh1, beh1_naive, beh2, support
from alternata.types import DomainError


def words(max_len):
    for n in range(max_len + 1):
        yield from itertools.product(range(2), repeat=n)


def test_parity_behaviour(parity):
    for w in words(7):
        assert beh1(parity, ALT_BETA, 0, w) == parity_predicate(w)


def test_naive_and_memoized_agree(parity, ends_in_a):
    for w in words(5):
        for q in range(parity.state_count):
            assert beh1_naive(parity, ALT_BETA, q, w) == beh1(parity, ALT_BETA, q, w)
        for algebra in (MAX, MIN):
            for q in range(2):
                assert beh1_naive(ends_in_a, algebra, q, w) == beh1(ends_in_a, algebra, q, w)


def test_nfa_behaviour(ends_in_a):
    assert beh1(ends_in_a, MAX, 0, (1, 0)) == 1
    assert beh1(ends_in_a, MAX, 0, (0, 1)) == 0
    assert beh1(ends_in_a, MIN, 0, (0,)) == 0
    assert beh1(ends_in_a, MIN, 1, (0, 1)) == 1
    assert beh1(ends_in_a, MIN, 1, ()) == 1


def test_determinized_behaviour_on_units(parity):
    engine = GeneralizedPowerset(parity, ALT_BETA)
    for q in range(parity.state_count):
        for w in words(5):
            assert beh2(engine, engine.unit(q), w) == beh1(parity, ALT_BETA, q, w)


def test_determinized_behaviour_on_a_fork(parity):
    """A bundle accepts w when some fork has all of its states accepting w."""
    engine = GeneralizedPowerset(parity, ALT_BETA)
    bundle = AltElement.of(5, [[1, 3], [2, 4]])
    for w in words(5):
        expected = int(
            all(beh1(parity, ALT_BETA, q, w) for q in (1, 3))
            or all(beh1(parity, ALT_BETA, q, w) for q in (2, 4))
        )
        assert beh2(engine, bundle, w) == expected


def test_support():
    assert support(StateSet.of(3, [0, 2])) == StateSet.of(3, [0, 2])
    assert support(AltElement.of(3, [[0], [1, 2]])) == StateSet.of(3, [0, 1, 2])
    with pytest.raises(DomainError):
        support((0, 1))


def test_rejects_mismatched_inputs(parity):
    with pytest.raises(DomainError):
        beh1(parity, MAX, 0, ())
    with pytest.raises(DomainError):
        beh1(parity, ALT_BETA, 0, (3,))
    with pytest.raises(DomainError):
        beh1(parity, ALT_BETA, 7, ())


def test_long_words(parity, ends_in_a):
    even = (0, 1) * 1500
    assert beh1(parity, ALT_BETA, 0, even) == 1
    assert beh1(parity, ALT_BETA, 0, even + (0,)) == 0
    assert beh1(ends_in_a, MAX, 0, (1,) * 3000 + (0,)) == 1
    assert beh1(ends_in_a, MIN, 1, (1,) * 3000) == 1
