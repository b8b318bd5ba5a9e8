import pytest

from alternata.monads import POWERSET, FiniteFunction, Layer, format_element
from alternata.order import StateSet, chain
from alternata.types import CapacityError, DomainError


def test_function_composition():
    f = FiniteFunction.of(2, [0, 1, 1])
    g = FiniteFunction.of(3, [2, 0])
    assert f.then(g).table == (2, 0, 0)
    assert FiniteFunction.identity(3).then(f) == f
    with pytest.raises(DomainError):
        g.then(g)


def test_function_validation():
    with pytest.raises(DomainError):
        FiniteFunction(2, 2, (0,))
    with pytest.raises(DomainError):
        FiniteFunction.of(2, [0, 2])


def test_layer_index():
    layer = Layer(["a", "b"], name="L")
    assert layer.index("b") == 1
    assert "a" in layer
    with pytest.raises(DomainError, match="layer L"):
        layer.index("c")
    with pytest.raises(DomainError):
        Layer(["a", "a"])


def test_layer_poset_from_order():
    layer = Layer.of_poset(chain(2), name="C")
    assert layer.poset == chain(2)
    assert Layer.discrete(3).poset.is_discrete()


def test_lift_is_cached_on_the_layer():
    layer = Layer.discrete(2, name="X2")
    lifted = POWERSET.lift(layer)
    assert POWERSET.lift(layer) is lifted
    assert layer.lifts["powerset"] is lifted


def test_lift_respects_the_cap():
    with pytest.raises(CapacityError):
        POWERSET.lift(Layer.discrete(4, name="X4"), cap=8)


def test_arrow_tables():
    layer = Layer.discrete(2, name="X2")
    lifted = POWERSET.lift(layer)
    eta = POWERSET.unit_arrow(layer, lifted)
    assert [lifted.elements[i] for i in eta.table] == [StateSet.of(2, [0]), StateSet.of(2, [1])]
    swap = FiniteFunction.of(2, [1, 0])
    lifted_swap = POWERSET.lift_arrow(swap, layer, layer)
    assert lifted.elements[lifted_swap(lifted.index(StateSet.of(2, [0])))] == StateSet.of(2, [1])


def test_format_element_has_no_spaces():
    assert format_element(frozenset({StateSet.of(2, [0]), StateSet.of(2, [0, 1])})) == "{{0,1},{0}}"
    assert format_element((1, (0, 1))) == "(1,(0,1))"
