import pytest

from alternata.config import CliConfig
from alternata.harness import DIST_DN_UP, check_dist_law, monotone_instances, search_naturality_counterexample
from alternata.monads import DOWN, UP, Layer, dist_arrow, dist_component, dist_dn_up
from alternata.order import StateSet, chain, diamond, discrete, is_up_closed
from alternata.types import DomainError


def test_exchange_on_discrete_pair():
    family = [StateSet.of(2, [0]), StateSet.of(2, [0, 1])]
    assert dist_dn_up(discrete(2), family) == frozenset({StateSet.of(2, [0]), StateSet.of(2, [0, 1])})


def test_empty_family_goes_to_every_down_set():
    assert dist_dn_up(chain(2), []) == frozenset({
        StateSet.empty(2), StateSet.of(2, [0]), StateSet.of(2, [0, 1])
    })


def test_family_holding_the_empty_up_set_goes_nowhere():
    ups = [StateSet.empty(2), StateSet.of(2, [1]), StateSet.of(2, [0, 1])]
    assert dist_dn_up(chain(2), ups) == frozenset()


def test_rejects_non_elements():
    with pytest.raises(DomainError):
        dist_dn_up(chain(2), [StateSet.of(2, [0])])
    base = Layer.discrete(1, name="X1")
    ups = UP.lift(base)
    with pytest.raises(DomainError):
        dist_component(base, StateSet.of(ups.size, [ups.index(StateSet.empty(1))]))


def test_result_is_up_closed_in_down_sets():
    base = Layer.of_poset(diamond(), name="diamond")
    downs = DOWN.lift(base)
    for s in DOWN.lift(UP.lift(base)).elements:
        assert is_up_closed(downs.poset, dist_component(base, s))


def test_tabulated_law():
    base = Layer.of_poset(chain(2), name="C2")
    table = dist_arrow(base)
    assert table.domain_size == DOWN.lift(UP.lift(base)).size
    assert table.codomain_size == UP.lift(DOWN.lift(base)).size


@pytest.mark.parametrize("poset,name", [(discrete(1), "discrete-1"), (discrete(2), "discrete-2"), (chain(2), "chain-2")])
def test_compatibility_diagrams(poset, name):
    reports = check_dist_law(poset, CliConfig(sample_count=40), name=name)
    assert [r.diagram_id.split(".")[-1] for r in reports] == ["unit-dn", "unit-up", "mult-dn", "mult-up"]
    assert all(r.passed for r in reports)


def test_compatibility_sampled_on_diamond():
    reports = check_dist_law(diamond(), CliConfig(sample_count=25), name="diamond", sample=True)
    assert all(r.passed for r in reports)
    assert reports[2].mode.value == "sampled"


def test_naturality_on_small_posets():
    report = search_naturality_counterexample(DIST_DN_UP, monotone_instances(2), "dist-dn-up.naturality[n<=2]")
    assert report.passed
    assert report.cases_checked > 0
