"""Antichains of subsets and the upward-closed families they generate."""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Tuple

from ..types import DomainError
from .stateset import StateSet, submasks


@dataclass(frozen=True)
class Antichain:
    """Pairwise ⊆-incomparable StateSets in canonical (cardinality, bits) order.

    Build through :func:`minimal_elements`; the constructor only accepts an
    already canonical tuple.
    """
    sets: Tuple[StateSet, ...] = ()

    def __post_init__(self):
        keys = [s.sort_key() for s in self.sets]
        if keys != sorted(set(keys)):
            raise DomainError("antichain members are not in canonical order")
        for i, a in enumerate(self.sets):
            for b in self.sets[i + 1:]:
                if a.issubset(b):
                    raise DomainError(f"antichain members {a} and {b} are comparable")

    def __iter__(self) -> Iterator[StateSet]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, s: StateSet) -> bool:
        return s in self.sets

    def __str__(self) -> str:
        return "[" + ",".join(str(s) for s in self.sets) + "]"

    def sort_key(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(s.sort_key() for s in self.sets)


def minimal_elements(family: Iterable[StateSet]) -> Antichain:
    """Keep exactly the ⊆-minimal members of a family, canonically ordered."""
    ordered = sorted(set(family), key=StateSet.sort_key)
    kept: list[StateSet] = []
    for s in ordered:
        if not any(k.issubset(s) for k in kept):
            kept.append(s)
    return Antichain(tuple(kept))


def expand_antichain(carrier_size: int, a: Antichain) -> FrozenSet[StateSet]:
    """The ⊆-upward closure of an antichain inside the carrier's powerset."""
    full = (1 << carrier_size) - 1
    family = set()
    for m in a:
        if m.size != carrier_size:
            raise DomainError(f"fork {m} is not over a carrier of size {carrier_size}")
        for extra in submasks(full & ~m.bits):
            family.add(StateSet(m.bits | extra, carrier_size))
    return frozenset(family)


def antichain_join(*chains: Antichain) -> Antichain:
    """Antichain of the union of the generated families."""
    return minimal_elements(s for chain in chains for s in chain)


def antichain_meet(a: Antichain, b: Antichain) -> Antichain:
    """Antichain of the intersection of the generated families."""
    return minimal_elements(x.union(y) for x in a for y in b)
