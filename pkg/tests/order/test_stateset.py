import pytest
from hypothesis import given
from hypothesis import strategies as st

from alternata.order import StateSet, all_subsets, submasks, union_all
from alternata.types import CapacityError, DomainError


def subsets(size):
    return st.integers(min_value=0, max_value=(1 << size) - 1).map(lambda bits: StateSet(bits, size))


def test_members_and_rendering():
    """Test membership, iteration order and text form."""
    s = StateSet.of(4, [3, 0, 2])
    assert list(s) == [0, 2, 3]
    assert len(s) == 3
    assert 2 in s and 1 not in s
    assert 7 not in s
    assert str(s) == "{0,2,3}"
    assert str(StateSet.empty(3)) == "{}"


def test_extensional_equality():
    assert StateSet.of(3, [0, 1]) == StateSet.of(3, [1, 0, 1])
    assert hash(StateSet.of(3, [0, 1])) == hash(StateSet(0b011, 3))
    assert StateSet.of(3, [0]) != StateSet.of(4, [0])


def test_rejects_out_of_carrier_members():
    with pytest.raises(DomainError):
        StateSet.of(2, [2])
    with pytest.raises(DomainError):
        StateSet(0b100, 2)
    with pytest.raises(DomainError):
        StateSet.of(2, [0]).union(StateSet.of(3, [0]))


def test_width_bound():
    with pytest.raises(CapacityError):
        StateSet.empty(257)


def test_set_operations():
    a, b = StateSet.of(4, [0, 1]), StateSet.of(4, [1, 2])
    assert a.union(b) == StateSet.of(4, [0, 1, 2])
    assert a.intersection(b) == StateSet.of(4, [1])
    assert a.complement() == StateSet.of(4, [2, 3])
    assert a.meets(b)
    assert not a.meets(StateSet.of(4, [3]))
    assert StateSet.of(4, [1]).issubset(a)
    assert a.issuperset(StateSet.empty(4))


def test_image():
    s = StateSet.of(3, [0, 2])
    assert s.image((1, 1, 0), 2) == StateSet.of(2, [0, 1])
    with pytest.raises(DomainError):
        s.image((0, 0), 2)


def test_canonical_order():
    ordered = sorted(all_subsets(3), key=StateSet.sort_key)
    assert [len(s) for s in ordered] == [0, 1, 1, 1, 2, 2, 2, 3]
    assert ordered[4] == StateSet.of(3, [0, 1])


def test_union_all():
    assert union_all([StateSet.of(3, [0]), StateSet.of(3, [2])], 3) == StateSet.of(3, [0, 2])
    assert union_all([], 3) == StateSet.empty(3)


@given(subsets(5), subsets(5))
def test_de_morgan(a, b):
    assert a.union(b).complement() == a.complement().intersection(b.complement())


@given(subsets(5), subsets(5))
def test_subset_iff_union_absorbs(a, b):
    assert a.issubset(b) == (a.union(b) == b)


def test_submasks():
    assert list(submasks(0b101)) == [0b101, 0b100, 0b001, 0]
    assert list(submasks(0)) == [0]
    assert len(set(submasks(0b1111))) == 16
