import pytest

from alternata.config import CliConfig
from alternata.harness import check_functor_laws, check_monad_laws
from alternata.monads import DOWN, UP, Layer, dn_map, dn_mult, dn_unit, up_map, up_mult, up_unit
from alternata.order import MonotoneMap, StateSet, chain, diamond, discrete, small_posets, vee
from alternata.types import DomainError


def test_units_are_principal_closures():
    assert up_unit(chain(3), 1) == StateSet.of(3, [1, 2])
    assert dn_unit(chain(3), 1) == StateSet.of(3, [0, 1])
    assert up_unit(vee(), 0) == StateSet.of(3, [0, 1, 2])


def test_maps_close_the_image():
    f = MonotoneMap(discrete(2), chain(3), (1, 1))
    assert up_map(f, StateSet.of(2, [0])) == StateSet.of(3, [1, 2])
    assert dn_map(f, StateSet.of(2, [0])) == StateSet.of(3, [0, 1])
    g = MonotoneMap(chain(2), chain(2), (0, 1))
    with pytest.raises(DomainError):
        up_map(g, StateSet.of(2, [0]))
    with pytest.raises(DomainError):
        dn_map(g, StateSet.of(2, [1]))


def test_multiplication_is_union():
    c = chain(3)
    ups = [StateSet.empty(3), StateSet.of(3, [2]), StateSet.of(3, [1, 2])]
    assert up_mult(c, ups) == StateSet.of(3, [1, 2])
    assert up_mult(c, []) == StateSet.empty(3)
    downs = [StateSet.empty(3), StateSet.of(3, [0]), StateSet.of(3, [0, 1])]
    assert dn_mult(c, downs) == StateSet.of(3, [0, 1])


def test_multiplication_rejects_unclosed_members():
    with pytest.raises(DomainError):
        up_mult(chain(2), [StateSet.of(2, [0])])
    with pytest.raises(DomainError):
        dn_mult(chain(2), [StateSet.of(2, [1])])


def test_multiplication_rejects_unclosed_families():
    c = chain(3)
    # the empty up-set lies above {2} in Up(X) and is missing
    with pytest.raises(DomainError):
        up_mult(c, [StateSet.of(3, [2]), StateSet.of(3, [1, 2])])
    with pytest.raises(DomainError):
        dn_mult(c, [StateSet.of(3, [0, 1])])
    with pytest.raises(DomainError):
        dn_mult(c, [StateSet.of(3, [0]), StateSet.of(3, [0, 1])])


def test_lifted_orders():
    base = Layer.of_poset(chain(2), name="C2")
    ups = UP.lift(base)
    downs = DOWN.lift(base)
    full, top = StateSet.of(2, [0, 1]), StateSet.of(2, [1])
    assert ups.poset.leq(ups.index(full), ups.index(top))
    assert downs.poset.leq(downs.index(StateSet.of(2, [0])), downs.index(full))


@pytest.mark.parametrize("monad", [UP, DOWN], ids=["up", "down"])
@pytest.mark.parametrize("name,poset", small_posets(3) + [("diamond", diamond())])
def test_monad_laws(monad, name, poset):
    reports = check_monad_laws(monad, Layer.of_poset(poset, name=name), CliConfig(sample_count=20))
    failed = [r.to_line() for r in reports if not r.passed]
    assert not failed


@pytest.mark.parametrize("monad", [UP, DOWN], ids=["up", "down"])
def test_functor_laws_across_shapes(monad):
    source = Layer.of_poset(chain(2), name="chain-2")
    middle = Layer.of_poset(discrete(2), name="discrete-2")
    target = Layer.of_poset(chain(3), name="chain-3")
    assert all(r.passed for r in check_functor_laws(monad, middle, source, target))
