import pytest

from alternata.harness import check_adjunction, check_down_of_discrete
from alternata.monads import adjunction_counit, adjunction_unit, discrete_order, down_of_discrete_is_powerset, triangle_identities_hold
from alternata.order import diamond, small_posets


def test_unit_and_counit_are_identities():
    assert adjunction_unit(3).table == (0, 1, 2)
    counit = adjunction_counit(diamond())
    assert counit.table == (0, 1, 2, 3)
    assert counit.domain == discrete_order(4)


@pytest.mark.parametrize("name,poset", small_posets(3) + [("diamond", diamond())])
def test_triangle_identities(name, poset):
    assert triangle_identities_hold(poset)
    assert check_adjunction(poset, name).passed


@pytest.mark.parametrize("size", [0, 1, 2, 3])
def test_down_sets_of_discrete_order_are_all_subsets(size):
    assert down_of_discrete_is_powerset(size)


def test_down_of_discrete_report():
    report = check_down_of_discrete(3)
    assert report.diagram_id == "dn-do-is-powerset[X<=3]"
    assert report.passed
    assert report.cases_checked == 4
