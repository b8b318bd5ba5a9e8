import pytest

from alternata.monads import ALT, POWERSET, AltElement, Layer
from alternata.order import StateSet
from alternata.semantics import (
    ALT_BETA,
    MAX,
    MIN,
    TWO,
    AlgebraicDistLaw,
    dist_from_algebra,
    function_space,
    pair_layer,
    pointwise_algebra,
    restricted_pairs,
    strength,
)
from alternata.types import CapacityError, DomainError


def test_function_space_order():
    space = function_space(TWO, 2)
    assert space.elements == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert space.name == "2^2"
    with pytest.raises(CapacityError):
        function_space(TWO, 5, cap=16)


def test_strength_evaluates_pointwise():
    space = function_space(TWO, 2)
    e = StateSet.of(space.size, [space.index((0, 1)), space.index((1, 1))])
    assert strength(POWERSET, space, e, 0, TWO) == StateSet.of(2, [0, 1])
    assert strength(POWERSET, space, e, 1, TWO) == StateSet.of(2, [1])
    with pytest.raises(DomainError):
        strength(POWERSET, space, e, 2, TWO)


def test_pointwise_algebras():
    hat_max = pointwise_algebra(POWERSET, MAX, 2)
    hat_min = pointwise_algebra(POWERSET, MIN, 2)
    space = hat_max.space
    e = StateSet.of(space.size, [space.index((0, 1)), space.index((1, 0))])
    assert hat_max(e) == (1, 1)
    assert hat_min(e) == (0, 0)
    assert hat_min(StateSet.empty(space.size)) == (1, 1)
    assert hat_max.points == 2
    with pytest.raises(DomainError):
        pointwise_algebra(ALT, MAX, 1)


def test_law_built_from_max():
    x = Layer.discrete(2, name="X")
    law = dist_from_algebra(POWERSET, MAX, x, 1)
    pairs = law.pairs
    assert pairs.size == 4
    e = StateSet.of(pairs.size, [pairs.index((0, (0,))), pairs.index((1, (1,)))])
    assert law(e) == (1, (StateSet.of(2, [0, 1]),))
    assert law(StateSet.empty(pairs.size)) == (0, (StateSet.empty(2),))


def test_law_built_from_min_on_empty_bundle():
    x = Layer.discrete(2, name="X")
    law = dist_from_algebra(POWERSET, MIN, x, 2)
    assert law(StateSet.empty(law.pairs.size)) == (1, (StateSet.empty(2), StateSet.empty(2)))


@pytest.mark.parametrize("monad,algebra", [(POWERSET, MAX), (POWERSET, MIN), (ALT, ALT_BETA)])
def test_law_commutes_with_units(monad, algebra):
    x = Layer.discrete(2, name="X")
    law = dist_from_algebra(monad, algebra, x, 2)
    for i, (o, h) in enumerate(law.pairs.elements):
        assert law(monad.unit(law.pairs, i)) == (o, tuple(monad.unit(x, h[a]) for a in range(2)))


def test_alt_law_on_a_fork():
    x = Layer.discrete(2, name="X")
    law = dist_from_algebra(ALT, ALT_BETA, x, 1)
    i, j = law.pairs.index((1, (0,))), law.pairs.index((0, (1,)))
    bit, (successor,) = law(AltElement.of(law.pairs.size, [[i, j]]))
    assert bit == 0
    assert successor == AltElement.of(2, [[0, 1]])


def test_law_validation():
    x = Layer.discrete(2, name="X")
    with pytest.raises(DomainError):
        dist_from_algebra(POWERSET, ALT_BETA, x, 1)
    with pytest.raises(DomainError):
        AlgebraicDistLaw(POWERSET, MAX, restricted_pairs([(2, (0,))], "bad"), x, 1)
    with pytest.raises(DomainError):
        AlgebraicDistLaw(POWERSET, MAX, restricted_pairs([(1, (0, 1))], "bad"), x, 1)


def test_pair_layer():
    layer = pair_layer(Layer.discrete(3, name="X"), 2)
    assert layer.size == 2 * 9
    assert layer.elements[0] == (0, (0, 0))
