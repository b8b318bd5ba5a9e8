"""Executable law diagrams and their reports.

The suite runner lives in :mod:`alternata.harness.workflow`; it is not
imported here because the suites depend on :mod:`alternata.semantics`,
which itself builds on these checks.
"""

from .laws import (
    CNF_ATLEAST,
    CNF_EXACT,
    DIST_DN_UP,
    NaturalTransformation,
    check_adjunction,
    check_diagram,
    check_dist_law,
    check_down_of_discrete,
    check_functor_laws,
    check_monad_laws,
    check_naturality,
    check_predicate,
    function_instances,
    identity_transformation,
    monotone_instances,
    search_naturality_counterexample,
)
from .reports import LawReport, Witness, merge_reports, suite_succeeded, summary_line
from .sampling import CaseSource, exhaustive, exhaustive_or_sampled, make_rng, sampled

__all__ = [
    'CNF_ATLEAST',
    'CNF_EXACT',
    'DIST_DN_UP',
    'CaseSource',
    'LawReport',
    'NaturalTransformation',
    'Witness',
    'check_adjunction',
    'check_diagram',
    'check_dist_law',
    'check_down_of_discrete',
    'check_functor_laws',
    'check_monad_laws',
    'check_naturality',
    'check_predicate',
    'exhaustive',
    'exhaustive_or_sampled',
    'function_instances',
    'identity_transformation',
    'make_rng',
    'merge_reports',
    'monotone_instances',
    'sampled',
    'search_naturality_counterexample',
    'suite_succeeded',
    'summary_line',
]
