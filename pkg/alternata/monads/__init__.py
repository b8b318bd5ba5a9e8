"""Monads on finite carriers: P, Up, Dn, their distributive law and Alt."""

from .adjunction import (
    adjunction_counit,
    adjunction_unit,
    discrete_order,
    down_of_discrete_is_powerset,
    triangle_identities_hold,
)
from .alt import (
    ALT,
    AltElement,
    AltMonad,
    alt_bind,
    alt_bottom,
    alt_join,
    alt_map,
    alt_meet,
    alt_mult,
    alt_mult_by_formula,
    alt_top,
    alt_unit,
    enumerate_alt,
    random_alt,
)
from .base import FiniteFunction, FiniteMonad, Layer, format_element, random_subset
from .candidates import PP_ATLEAST, AtLeastOneMonad, choice_sets, cnf_atleast, cnf_exact, pp_elements, pp_map
from .composite import alt_from_up_set, alt_to_up_set, composite_mult_via_pipeline
from .distributive import dist_arrow, dist_component, dist_dn_up
from .powerset import POWERSET, PowersetMonad, pow_map, pow_mult, pow_unit
from .updown import (
    DOWN,
    UP,
    DownMonad,
    UpMonad,
    dn_map,
    dn_mult,
    dn_unit,
    poset_layer,
    up_map,
    up_mult,
    up_unit,
)

MONADS = {
    POWERSET.name: POWERSET,
    UP.name: UP,
    DOWN.name: DOWN,
    ALT.name: ALT,
}

__all__ = [
    'ALT',
    'DOWN',
    'MONADS',
    'POWERSET',
    'PP_ATLEAST',
    'UP',
    'AltElement',
    'AltMonad',
    'AtLeastOneMonad',
    'DownMonad',
    'FiniteFunction',
    'FiniteMonad',
    'Layer',
    'PowersetMonad',
    'UpMonad',
    'adjunction_counit',
    'adjunction_unit',
    'alt_bind',
    'alt_bottom',
    'alt_from_up_set',
    'alt_join',
    'alt_map',
    'alt_meet',
    'alt_mult',
    'alt_mult_by_formula',
    'alt_to_up_set',
    'alt_top',
    'alt_unit',
    'choice_sets',
    'cnf_atleast',
    'cnf_exact',
    'composite_mult_via_pipeline',
    'discrete_order',
    'dist_arrow',
    'dist_component',
    'dist_dn_up',
    'dn_map',
    'dn_mult',
    'dn_unit',
    'down_of_discrete_is_powerset',
    'enumerate_alt',
    'format_element',
    'poset_layer',
    'pow_map',
    'pow_mult',
    'pow_unit',
    'pp_elements',
    'pp_map',
    'random_alt',
    'random_subset',
    'triangle_identities_hold',
    'up_map',
    'up_mult',
    'up_unit',
]
