import numpy as np
import pytest

from alternata.order import (
    FinitePoset,
    MonotoneMap,
    StateSet,
    boolean_lattice,
    chain,
    diamond,
    down_closure,
    is_down_closed,
    is_up_closed,
    small_posets,
    up_closure,
    vee,
)
from alternata.types import DomainError


def test_from_pairs_closes_transitively():
    p = FinitePoset.from_pairs(3, [(0, 1), (1, 2)])
    assert p.leq(0, 2)
    assert not p.leq(2, 0)
    assert p == chain(3)


def test_rejects_non_orders():
    with pytest.raises(DomainError, match="antisymmetric"):
        FinitePoset.from_pairs(2, [(0, 1), (1, 0)])
    with pytest.raises(DomainError, match="reflexive"):
        FinitePoset(np.zeros((2, 2), dtype=bool))
    with pytest.raises(DomainError, match="transitive"):
        FinitePoset([[True, True, False], [False, True, True], [False, False, True]])
    with pytest.raises(DomainError):
        FinitePoset([[True, False]])


def test_relation_is_read_only():
    p = chain(2)
    with pytest.raises(ValueError):
        p.relation[1, 0] = True


def test_poset_hashing():
    assert hash(chain(3)) == hash(FinitePoset.from_pairs(3, [(0, 1), (1, 2)]))
    assert len({chain(2), chain(2), FinitePoset.discrete(2)}) == 2


def test_closures_on_diamond():
    d = diamond()
    assert up_closure(d, StateSet.of(4, [1])) == StateSet.of(4, [1, 3])
    assert down_closure(d, StateSet.of(4, [1])) == StateSet.of(4, [0, 1])
    assert down_closure(d, StateSet.of(4, [1, 2])) == StateSet.of(4, [0, 1, 2])
    assert is_up_closed(d, StateSet.of(4, [1, 2, 3]))
    assert not is_down_closed(d, StateSet.of(4, [3]))


def test_closure_carrier_mismatch():
    with pytest.raises(DomainError):
        up_closure(vee(), StateSet.of(2, [0]))


def test_monotone_map_validation():
    MonotoneMap(chain(2), chain(3), (0, 2))
    with pytest.raises(DomainError, match="monotone"):
        MonotoneMap(chain(2), chain(2), (1, 0))
    with pytest.raises(DomainError):
        MonotoneMap(chain(2), chain(2), (0,))
    with pytest.raises(DomainError):
        MonotoneMap(chain(2), chain(2), (0, 5))


def test_monotone_image():
    f = MonotoneMap(vee(), chain(2), (0, 1, 1))
    assert f.image(StateSet.of(3, [1, 2])) == StateSet.of(2, [1])
    assert f(0) == 0


def test_boolean_lattice():
    lattice = boolean_lattice(2)
    assert lattice.size == 4
    assert lattice.leq(0b01, 0b11)
    assert not lattice.leq(0b01, 0b10)


def test_small_posets_catalog():
    names = [name for name, _ in small_posets(3)]
    assert names == ["discrete-1", "discrete-2", "chain-2", "discrete-3", "chain-3", "vee", "wedge", "chain-2+1"]
    assert [name for name, _ in small_posets(2)] == ["discrete-1", "discrete-2", "chain-2"]
