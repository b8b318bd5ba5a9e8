import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alternata.config import CliConfig
from alternata.harness import check_monad_laws
from alternata.monads import (
    ALT,
    AltElement,
    FiniteFunction,
    Layer,
    alt_bind,
    alt_bottom,
    alt_from_up_set,
    alt_join,
    alt_map,
    alt_meet,
    alt_mult,
    alt_mult_by_formula,
    alt_to_up_set,
    alt_top,
    alt_unit,
    composite_mult_via_pipeline,
    enumerate_alt,
    random_alt,
)
from alternata.order import StateSet
from alternata.types import CapacityError, DomainError


@pytest.mark.parametrize("size,count", [(0, 2), (1, 3), (2, 6), (3, 20), (4, 168)])
def test_carrier_sizes(size, count):
    assert len(enumerate_alt(size)) == count


def test_empty_carrier_is_bottom_then_top():
    assert enumerate_alt(0) == [alt_bottom(0), alt_top(0)]
    assert enumerate_alt(1) == [alt_bottom(1), alt_top(1), alt_unit(1, 0)]


def test_enumeration_bound():
    with pytest.raises(CapacityError):
        enumerate_alt(5)


def test_elements_are_canonical():
    e = AltElement.of(3, [[0, 1], [0], [1, 2], [0, 2]])
    assert e.forks.sets == (StateSet.of(3, [0]), StateSet.of(3, [1, 2]))
    assert e == AltElement.of(3, [[1, 2], [0]])
    assert str(e) == "[{0},{1,2}]"
    with pytest.raises(DomainError):
        AltElement(2, AltElement.of(3, [[0]]).forks)


def test_lattice_operations():
    a, b = alt_unit(2, 0), alt_unit(2, 1)
    assert alt_join(a, b) == AltElement.of(2, [[0], [1]])
    assert alt_meet(a, b) == AltElement.of(2, [[0, 1]])
    assert alt_join(a, alt_bottom(2)) == a
    assert alt_meet(a, alt_top(2)) == a
    assert alt_meet(a, alt_bottom(2)) == alt_bottom(2)
    with pytest.raises(DomainError):
        alt_join()
    with pytest.raises(DomainError):
        alt_meet(a, alt_unit(3, 0))


def test_expanded_family():
    assert alt_unit(2, 0).expanded() == frozenset({StateSet.of(2, [0]), StateSet.of(2, [0, 1])})
    assert alt_bottom(2).expanded() == frozenset()
    assert len(alt_top(2).expanded()) == 4


def test_map_takes_fork_images():
    f = FiniteFunction.of(2, [0, 0, 1])
    assert alt_map(f, AltElement.of(3, [[0], [1, 2]])) == AltElement.of(2, [[0]])
    with pytest.raises(DomainError):
        alt_map(f, alt_unit(2, 0))


def test_mult_evaluates_disjunctive_normal_form():
    table = enumerate_alt(2)
    i, j = table.index(alt_unit(2, 0)), table.index(AltElement.of(2, [[1]]))
    meet = AltElement.of(len(table), [[i, j]])
    join = AltElement.of(len(table), [[i], [j]])
    assert alt_mult(meet, table) == AltElement.of(2, [[0, 1]])
    assert alt_mult(join, table) == AltElement.of(2, [[0], [1]])
    assert alt_mult(alt_bottom(len(table)), table, 2) == alt_bottom(2)
    assert alt_mult(alt_top(len(table)), table, 2) == alt_top(2)
    with pytest.raises(DomainError):
        alt_mult(alt_unit(3, 0), table)
    with pytest.raises(DomainError):
        alt_mult(alt_bottom(0), [])


def test_bind_substitutes_per_index():
    kleisli = [AltElement.of(2, [[0], [1]]), AltElement.of(2, [[1]])]
    e = AltElement.of(2, [[0, 1]])
    assert alt_bind(e, kleisli, 2) == AltElement.of(2, [[1]])


@pytest.mark.parametrize("size", [0, 1])
def test_mult_agrees_with_formula_and_pipeline(size):
    table = enumerate_alt(size)
    for e in enumerate_alt(len(table)):
        expected = alt_mult(e, table, size)
        assert alt_mult_by_formula(e, table, size) == expected
        assert composite_mult_via_pipeline(e, size) == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_mult_agrees_on_random_elements_over_two(seed):
    table = enumerate_alt(2)
    e = random_alt(np.random.default_rng(seed), len(table))
    expected = alt_mult(e, table, 2)
    assert alt_mult_by_formula(e, table, 2) == expected
    assert composite_mult_via_pipeline(e, 2) == expected


def test_up_set_view_round_trip():
    for e in enumerate_alt(2):
        assert alt_from_up_set(2, alt_to_up_set(e)) == e


def test_pipeline_rejects_foreign_elements():
    with pytest.raises(DomainError):
        composite_mult_via_pipeline(alt_unit(4, 0), 1)


@pytest.mark.parametrize("size", [0, 1])
def test_monad_laws(size):
    reports = check_monad_laws(ALT, Layer.discrete(size, name=f"X{size}"), CliConfig(sample_count=40))
    assert all(r.passed for r in reports)
