"""The discrete-order functor Do and its right adjoint U (forget the order).

Both the unit S → U(Do S) and the counit Do(U P) → P are identities on
elements; only the order changes.
"""

from ..order import FinitePoset, MonotoneMap, all_subsets, enumerate_down_sets
from .base import FiniteFunction


def discrete_order(size: int) -> FinitePoset:
    """Do on objects."""
    return FinitePoset.discrete(size)


def adjunction_unit(size: int) -> FiniteFunction:
    """η_S : S → U(Do S)."""
    return FiniteFunction.identity(size)


def adjunction_counit(poset: FinitePoset) -> MonotoneMap:
    """ε_P : Do(U P) → P, monotone because the source order is discrete."""
    return MonotoneMap(discrete_order(poset.size), poset, tuple(range(poset.size)))


def triangle_identities_hold(poset: FinitePoset) -> bool:
    """U(ε_P) ∘ η_{U P} = id and ε_{Do S} ∘ Do(η_S) = id, as tables."""
    identity = tuple(range(poset.size))
    unit = adjunction_unit(poset.size).table
    counit = adjunction_counit(poset).table
    discrete_counit = adjunction_counit(discrete_order(poset.size)).table
    forgetful_side = tuple(counit[x] for x in unit)
    discrete_side = tuple(discrete_counit[x] for x in unit)
    return forgetful_side == identity and discrete_side == identity


def down_of_discrete_is_powerset(size: int) -> bool:
    """Dn ∘ Do = P on a size-element set."""
    return set(enumerate_down_sets(discrete_order(size))) == set(all_subsets(size))
