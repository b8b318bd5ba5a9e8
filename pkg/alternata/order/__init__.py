"""Finite order structures: subsets, posets, closures and antichains."""

from .antichain import (
    Antichain,
    antichain_join,
    antichain_meet,
    expand_antichain,
    minimal_elements,
)
from .catalog import (
    boolean_lattice,
    chain,
    chain_plus_point,
    diamond,
    discrete,
    small_posets,
    vee,
    wedge,
)
from .enumeration import (
    enumerate_down_sets,
    enumerate_monotone_maps,
    enumerate_posets,
    enumerate_up_sets,
)
from .lemmas import closure_image_holds, closure_intersection_holds, closure_union_holds
from .poset import (
    FinitePoset,
    MonotoneMap,
    down_closure,
    is_down_closed,
    is_up_closed,
    up_closure,
)
from .stateset import StateSet, all_subsets, submasks, union_all

__all__ = [
    'Antichain',
    'FinitePoset',
    'MonotoneMap',
    'StateSet',
    'all_subsets',
    'antichain_join',
    'antichain_meet',
    'boolean_lattice',
    'chain',
    'chain_plus_point',
    'closure_image_holds',
    'closure_intersection_holds',
    'closure_union_holds',
    'diamond',
    'discrete',
    'down_closure',
    'enumerate_down_sets',
    'enumerate_monotone_maps',
    'enumerate_posets',
    'enumerate_up_sets',
    'expand_antichain',
    'is_down_closed',
    'is_up_closed',
    'minimal_elements',
    'small_posets',
    'submasks',
    'union_all',
    'up_closure',
    'vee',
    'wedge',
]
