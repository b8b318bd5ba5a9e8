"""Algebras, the generalized powerset construction and the semantics it preserves."""

from .algebras import (
    ALGEBRAS,
    ALT_BETA,
    MAX,
    MIN,
    AlgebraOnTwo,
    beta_alt,
    beta_alt_shortcut,
    beta_pow_max,
    beta_pow_min,
    check_beta_alt_shortcut,
    check_free_algebra_identity,
)
from .behaviour import beh1, beh1_naive, beh2, support
from .correspondence import (
    all_words,
    check_beh1_agreement,
    check_concrete_agreement,
    check_determinized_language,
    check_em_laws,
    check_pointwise_em_laws,
    check_powerset_triangle,
    check_predicate_language,
    check_semantics_correspondence,
    check_subset_agreement,
)
from .determinize import DeterminizedMachine, GeneralizedPowerset, as_t_automaton, determinize, monad_of
from .strength import (
    TWO,
    AlgebraicDistLaw,
    PointwiseAlgebra,
    dist_from_algebra,
    function_space,
    pair_layer,
    pointwise_algebra,
    restricted_pairs,
    strength,
)

__all__ = [
    'ALGEBRAS',
    'ALT_BETA',
    'MAX',
    'MIN',
    'TWO',
    'AlgebraOnTwo',
    'AlgebraicDistLaw',
    'DeterminizedMachine',
    'GeneralizedPowerset',
    'PointwiseAlgebra',
    'all_words',
    'as_t_automaton',
    'beh1',
    'beh1_naive',
    'beh2',
    'beta_alt',
    'beta_alt_shortcut',
    'beta_pow_max',
    'beta_pow_min',
    'check_beh1_agreement',
    'check_beta_alt_shortcut',
    'check_concrete_agreement',
    'check_determinized_language',
    'check_em_laws',
    'check_free_algebra_identity',
    'check_pointwise_em_laws',
    'check_powerset_triangle',
    'check_predicate_language',
    'check_semantics_correspondence',
    'check_subset_agreement',
    'determinize',
    'dist_from_algebra',
    'function_space',
    'monad_of',
    'pair_layer',
    'pointwise_algebra',
    'restricted_pairs',
    'strength',
    'support',
]
