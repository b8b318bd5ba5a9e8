import pytest

from alternata.order import (
    StateSet,
    boolean_lattice,
    chain,
    diamond,
    discrete,
    enumerate_down_sets,
    enumerate_monotone_maps,
    enumerate_posets,
    enumerate_up_sets,
    is_down_closed,
    is_up_closed,
    small_posets,
    vee,
)
from alternata.types import CapacityError


@pytest.mark.parametrize("poset,count", [
    (discrete(0), 1),
    (discrete(3), 8),
    (chain(3), 4),
    (vee(), 5),
    (diamond(), 6),
    (boolean_lattice(2), 6),
    (boolean_lattice(3), 20),
])
def test_up_set_counts(poset, count):
    assert len(enumerate_up_sets(poset)) == count


def test_up_sets_of_chain_in_canonical_order():
    assert enumerate_up_sets(chain(3)) == [
        StateSet.empty(3),
        StateSet.of(3, [2]),
        StateSet.of(3, [1, 2]),
        StateSet.of(3, [0, 1, 2]),
    ]


@pytest.mark.parametrize("name,poset", small_posets(3) + [("diamond", diamond())])
def test_enumeration_is_complete_and_closed(name, poset):
    ups = enumerate_up_sets(poset)
    downs = enumerate_down_sets(poset)
    assert len(set(ups)) == len(ups)
    assert all(is_up_closed(poset, u) for u in ups)
    assert all(is_down_closed(poset, d) for d in downs)
    brute = [
        StateSet(bits, poset.size) for bits in range(1 << poset.size)
        if is_up_closed(poset, StateSet(bits, poset.size))
    ]
    assert set(ups) == set(brute)


def test_bounds():
    with pytest.raises(CapacityError):
        enumerate_up_sets(discrete(5), bound=4)
    with pytest.raises(CapacityError):
        enumerate_up_sets(discrete(4), cap=10)


@pytest.mark.parametrize("size,count", [(1, 1), (2, 3), (3, 19)])
def test_labelled_poset_counts(size, count):
    assert sum(1 for _ in enumerate_posets(size)) == count


def test_monotone_maps():
    maps = list(enumerate_monotone_maps(chain(2), chain(2)))
    assert sorted(f.table for f in maps) == [(0, 0), (0, 1), (1, 1)]
    assert sum(1 for _ in enumerate_monotone_maps(discrete(2), chain(2))) == 4
