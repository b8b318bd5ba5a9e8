"""The distributive law λ : Dn∘Up ⇒ Up∘Dn.

λ_L(S) = {T ∈ Dn(L) | ∀s ∈ S, s ∩ T ≠ ∅}: an element of Dn(Up L) is sent to
the down-sets of L that meet every up-set it contains.
"""

import logging
from typing import FrozenSet, Iterable

from ..order import FinitePoset, StateSet, is_down_closed, is_up_closed
from ..types import DomainError
from .base import FiniteFunction, Layer
from .updown import DOWN, UP, poset_layer

logger = logging.getLogger(__name__)


def dist_component(base: Layer, s: StateSet) -> StateSet:
    """λ at ``base``: Dn(Up base) → Up(Dn base), on layer indices.

    Args:
        base: The layer L
        s: Indices into Up(L), down-closed in Up(L)

    Returns:
        Indices into Dn(L); the result is up-closed in Dn(L)

    Raises:
        DomainError: if ``s`` is not an element of Dn(Up L)
    """
    ups = UP.lift(base)
    downs = DOWN.lift(base)
    if s.size != ups.size:
        raise DomainError(f"element over {s.size} indices given to λ at {ups.name} of size {ups.size}")
    if not is_down_closed(ups.poset, s):
        raise DomainError(f"{s} is not down-closed in {ups.name}")
    members = [ups.elements[i] for i in s]
    return StateSet.of(
        downs.size,
        (j for j, t in enumerate(downs.elements) if all(u.meets(t) for u in members))
    )


def dist_arrow(base: Layer) -> FiniteFunction:
    """λ at ``base`` tabulated from Dn(Up base) to Up(Dn base)."""
    source = DOWN.lift(UP.lift(base))
    target = UP.lift(DOWN.lift(base))
    return FiniteFunction.of(
        target.size,
        [target.index(dist_component(base, s)) for s in source.elements]
    )


def dist_dn_up(poset: FinitePoset, s: Iterable[StateSet]) -> FrozenSet[StateSet]:
    """λ on explicit families: up-sets of ``poset`` in, down-sets out.

    Args:
        poset: The poset X
        s: A ⊆-upward-closed family of up-sets of X

    Returns:
        Every down-set of X meeting each member of ``s``

    Raises:
        DomainError: if a member is not up-closed or the family is not closed
    """
    base = poset_layer(poset)
    ups = UP.lift(base)
    family = list(s)
    for u in family:
        if u.size != poset.size or not is_up_closed(poset, u):
            raise DomainError(f"{u} is not an up-set of the poset")
    indices = StateSet.of(ups.size, (ups.index(u) for u in family))
    downs = DOWN.lift(base)
    result = dist_component(base, indices)
    return frozenset(downs.elements[j] for j in result)
