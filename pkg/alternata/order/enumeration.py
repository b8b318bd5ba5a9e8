"""Exhaustive enumeration of closed sets, posets and monotone maps."""

import itertools
import logging
from typing import Iterator, List, Optional

from ..config.constants import ENUMERATION_BOUND
from ..types import CapacityError, DomainError
from .poset import FinitePoset, MonotoneMap
from .stateset import StateSet

logger = logging.getLogger(__name__)


def enumerate_up_sets(
    poset: FinitePoset,
    bound: int = ENUMERATION_BOUND,
    cap: Optional[int] = None
) -> List[StateSet]:
    """Every up-closed subset of a poset, sorted by (cardinality, bits).

    Elements are decided along a linear extension read from the top, so an
    element may join only once everything strictly above it has joined.
    Every branch ends in an up-set and none is produced twice.

    Args:
        poset: Poset to enumerate
        bound: Largest poset size accepted
        cap: Optional largest number of up-sets accepted

    Returns:
        All up-sets, without duplicates

    Raises:
        CapacityError: if the poset is larger than ``bound`` or the count exceeds ``cap``
    """
    if poset.size > bound:
        raise CapacityError(
            f"poset of size {poset.size} exceeds the enumeration bound {bound}", cap=bound
        )
    masks = poset.up_masks
    order = sorted(range(poset.size), key=lambda x: (masks[x].bit_count(), x))
    strictly_above = [masks[x] & ~(1 << x) for x in range(poset.size)]
    found: List[int] = []

    def walk(i: int, bits: int) -> None:
        if i == len(order):
            found.append(bits)
            if cap is not None and len(found) > cap:
                raise CapacityError(f"more than {cap} up-sets in a poset of size {poset.size}", cap=cap)
            return
        x = order[i]
        walk(i + 1, bits)
        if strictly_above[x] & ~bits == 0:
            walk(i + 1, bits | 1 << x)

    walk(0, 0)
    logger.debug(f"Enumerated {len(found)} up-sets of a poset of size {poset.size}")
    result = [StateSet(bits, poset.size) for bits in found]
    return sorted(result, key=StateSet.sort_key)


def enumerate_down_sets(
    poset: FinitePoset,
    bound: int = ENUMERATION_BOUND,
    cap: Optional[int] = None
) -> List[StateSet]:
    """Every down-closed subset of a poset; the complements of its up-sets."""
    downs = [u.complement() for u in enumerate_up_sets(poset, bound, cap)]
    return sorted(downs, key=StateSet.sort_key)


def enumerate_posets(size: int) -> Iterator[FinitePoset]:
    """Every partial order on ``size`` labelled elements."""
    if size > 4:
        raise CapacityError(f"labelled posets of size {size} are not enumerated", cap=4)
    pairs = [(i, j) for i in range(size) for j in range(size) if i != j]
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        relation = [[i == j for j in range(size)] for i in range(size)]
        for (i, j), on in zip(pairs, chosen):
            relation[i][j] = on
        try:
            yield FinitePoset(relation)
        except DomainError:
            continue


def enumerate_monotone_maps(domain: FinitePoset, codomain: FinitePoset) -> Iterator[MonotoneMap]:
    """Every monotone map from ``domain`` to ``codomain``."""
    for table in itertools.product(range(codomain.size), repeat=domain.size):
        if all(
            codomain.leq(table[x], table[y])
            for x in range(domain.size)
            for y in range(domain.size)
            if domain.leq(x, y)
        ):
            yield MonotoneMap(domain, codomain, tuple(table))
