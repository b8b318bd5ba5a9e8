from alternata.config import CliConfig
from alternata.harness import (
    CNF_ATLEAST,
    CNF_EXACT,
    check_monad_laws,
    check_naturality,
    function_instances,
    search_naturality_counterexample,
)
from alternata.monads import PP_ATLEAST, FiniteFunction, Layer, choice_sets, cnf_atleast, cnf_exact, pp_elements, pp_map
from alternata.order import StateSet


def sets(size, *members):
    return frozenset(StateSet.of(size, m) for m in members)


def test_choice_sets():
    family = [frozenset({"x", "y"}), frozenset({"y", "z"})]
    exact = choice_sets(family, exact=True)
    assert set(exact) == {frozenset({"y"}), frozenset({"x", "z"})}
    atleast = choice_sets(family, exact=False)
    assert len(atleast) == 5
    assert choice_sets([], exact=True) == [frozenset()]


def test_exchanges_on_small_family():
    s = sets(3, [0, 1], [2])
    assert cnf_exact(s, 3) == sets(3, [0, 2], [1, 2])
    assert cnf_atleast(s, 3) == sets(3, [0, 2], [1, 2], [0, 1, 2])
    assert cnf_exact(sets(2, []), 2) == frozenset()


def test_documented_exact_counterexample():
    """f = (0,1,1) merges 1 and 2, and S = {{0,1},{2}} separates them."""
    f = FiniteFunction.of(2, (0, 1, 1))
    source, target = Layer.discrete(3, name="X3"), Layer.discrete(2, name="X2")
    s = sets(3, [0, 1], [2])
    assert cnf_exact(pp_map(f, s), 2) == sets(2, [1])
    assert pp_map(f, cnf_exact(s, 3)) == sets(2, [0, 1], [1])
    report = check_naturality(CNF_EXACT, f, source, target, negative=True)
    assert not report.passed
    assert report.negative


def test_exact_search_finds_a_witness():
    report = search_naturality_counterexample(
        CNF_EXACT, function_instances(3), "cnf-exact.naturality[n<=3]", negative=True
    )
    assert not report.passed
    assert report.witness is not None
    assert report.witness.input.startswith("(X=")


def test_atleast_is_natural():
    report = search_naturality_counterexample(CNF_ATLEAST, function_instances(2), "cnf-atleast.naturality[n<=2]")
    assert report.passed


def test_pp_elements():
    assert sum(1 for _ in pp_elements(2)) == 16
    assert frozenset() in set(pp_elements(1))


def test_atleast_monad_left_unit_fails_on_two_points():
    reports = check_monad_laws(PP_ATLEAST, Layer.discrete(2, name="X2"), CliConfig(sample_count=20), negative=True, associativity=False)
    left_unit = reports[0]
    assert left_unit.diagram_id == "pp-atleast[X2].left-unit"
    assert not left_unit.passed
    assert left_unit.negative


def test_atleast_monad_holds_on_one_point():
    reports = check_monad_laws(PP_ATLEAST, Layer.discrete(1, name="X1"), CliConfig(sample_count=20), associativity=False)
    assert [r.diagram_id for r in reports] == ["pp-atleast[X1].left-unit", "pp-atleast[X1].right-unit"]
    assert all(r.passed for r in reports)
