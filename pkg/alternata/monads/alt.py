"""The alternation monad Alt = Up∘Dn on finite sets.

An element of Alt(X) is an upward-closed family of subsets of X, stored as
the antichain of its minimal members (its forks). Alt(X) is the free
bounded distributive lattice on X: join is union of families, meet is
pairwise union of forks, and multiplication reads an element of Alt(Alt X)
as a formula in disjunctive normal form and evaluates it.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..config.constants import ENUMERATION_BOUND, LAYER_CAP, MAX_SAMPLED_FORKS
from ..order import (
    Antichain,
    StateSet,
    antichain_join,
    antichain_meet,
    boolean_lattice,
    enumerate_up_sets,
    expand_antichain,
    minimal_elements,
)
from ..types import CapacityError, DomainError
from .base import FiniteFunction, FiniteMonad, Layer, random_subset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AltElement:
    """An upward-closed family of subsets of a carrier, kept as its forks."""
    carrier_size: int
    forks: Antichain

    def __post_init__(self):
        for fork in self.forks:
            if fork.size != self.carrier_size:
                raise DomainError(f"fork {fork} is not over a carrier of size {self.carrier_size}")

    @classmethod
    def of(cls, carrier_size: int, forks: Iterable[Iterable[int]]) -> 'AltElement':
        """Normalize any family of forks (StateSets or index collections)."""
        sets = [
            f if isinstance(f, StateSet) else StateSet.of(carrier_size, f)
            for f in forks
        ]
        return cls(carrier_size, minimal_elements(sets))

    def expanded(self) -> FrozenSet[StateSet]:
        """The full upward-closed family."""
        return expand_antichain(self.carrier_size, self.forks)

    def __iter__(self):
        return iter(self.forks)

    def __len__(self) -> int:
        return len(self.forks)

    def __str__(self) -> str:
        return str(self.forks)

    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        return (len(self.forks), self.forks.sort_key())


def alt_bottom(carrier_size: int) -> AltElement:
    """The empty family: no fork, rejects everything."""
    return AltElement(carrier_size, Antichain())


def alt_top(carrier_size: int) -> AltElement:
    """The family of all subsets: the empty fork."""
    return AltElement(carrier_size, Antichain((StateSet.empty(carrier_size),)))


def alt_unit(carrier_size: int, x: int) -> AltElement:
    """η(x) = ↑{x}: every subset containing x."""
    if not 0 <= x < carrier_size:
        raise DomainError(f"index {x} outside carrier of size {carrier_size}")
    return AltElement(carrier_size, Antichain((StateSet.singleton(carrier_size, x),)))


def alt_join(*elements: AltElement) -> AltElement:
    if not elements:
        raise DomainError("alt_join needs at least one element")
    size = _common_carrier(elements)
    return AltElement(size, antichain_join(*(e.forks for e in elements)))


def alt_meet(a: AltElement, b: AltElement) -> AltElement:
    size = _common_carrier((a, b))
    return AltElement(size, antichain_meet(a.forks, b.forks))


def _common_carrier(elements: Sequence[AltElement]) -> int:
    sizes = {e.carrier_size for e in elements}
    if len(sizes) != 1:
        raise DomainError(f"carrier mismatch: {sorted(sizes)}")
    return sizes.pop()


def alt_map(f: FiniteFunction, e: AltElement) -> AltElement:
    """Alt(f): take the image of every fork, then minimize."""
    if e.carrier_size != f.domain_size:
        raise DomainError(f"element over {e.carrier_size} states given to a map with domain {f.domain_size}")
    return AltElement(
        f.codomain_size,
        minimal_elements(fork.image(f.table, f.codomain_size) for fork in e.forks)
    )


def alt_bind(e: AltElement, kleisli: Sequence[AltElement], carrier_size: int) -> AltElement:
    """Substitute ``kleisli[q]`` for every q and evaluate: ⋁_forks ⋀_{q ∈ fork} kleisli[q].

    Args:
        e: Element over indices 0..len(kleisli)-1
        kleisli: One Alt element over ``carrier_size`` per index
        carrier_size: Carrier of the result
    """
    if e.carrier_size != len(kleisli):
        raise DomainError(
            f"element over {e.carrier_size} indices bound with a table of {len(kleisli)} entries"
        )
    result = alt_bottom(carrier_size).forks
    for fork in e.forks:
        acc = alt_top(carrier_size).forks
        for q in fork:
            k = kleisli[q]
            if k.carrier_size != carrier_size:
                raise DomainError(f"table entry {q} is over {k.carrier_size} elements, expected {carrier_size}")
            acc = antichain_meet(acc, k.forks)
            if not acc.sets:
                break
        result = antichain_join(result, acc)
    return AltElement(carrier_size, result)


def alt_mult(
    e: AltElement,
    table: Sequence[AltElement],
    carrier_size: Optional[int] = None
) -> AltElement:
    """μ: Alt(Alt X) → Alt(X).

    Args:
        e: Element whose forks hold indices into ``table``
        table: The enumerated Alt(X) carrier (or any indexed selection of it)
        carrier_size: |X|; read from the table when omitted

    Raises:
        DomainError: if an index falls outside the table
    """
    if carrier_size is None:
        if not table:
            raise DomainError("carrier size is required with an empty table")
        carrier_size = table[0].carrier_size
    return alt_bind(e, table, carrier_size)


def alt_mult_by_formula(e: AltElement, table: Sequence[AltElement], carrier_size: int) -> AltElement:
    """μ by brute force: T ∈ μ(S) iff ∃s∈S ∀t∈s ∃u∈t ∀v∈u, v ∈ T.

    Quantifiers range over the expanded families; only usable on tiny carriers.
    """
    if e.carrier_size != len(table):
        raise DomainError(f"element over {e.carrier_size} indices with a table of {len(table)} entries")
    expanded_table = [t.expanded() for t in table]
    members = [
        target
        for target in (StateSet(bits, carrier_size) for bits in range(1 << carrier_size))
        if any(
            all(
                any(u.issubset(target) for u in expanded_table[t])
                for t in s
            )
            for s in e.expanded()
        )
    ]
    return AltElement(carrier_size, minimal_elements(members))


@lru_cache(maxsize=None)
def _alt_carrier(carrier_size: int, bound: int, cap: int) -> Tuple[AltElement, ...]:
    if 2 ** carrier_size > bound:
        raise CapacityError(
            f"Alt over {carrier_size} elements needs a lattice of {2 ** carrier_size} points, "
            f"above the enumeration bound {bound}",
            cap=bound
        )
    lattice = boolean_lattice(carrier_size)
    elements = [
        AltElement(carrier_size, minimal_elements(StateSet(bits, carrier_size) for bits in up))
        for up in enumerate_up_sets(lattice, bound, cap)
    ]
    logger.debug(f"Enumerated |Alt({carrier_size})| = {len(elements)}")
    return tuple(sorted(elements, key=AltElement.sort_key))


def enumerate_alt(
    carrier_size: int,
    bound: int = ENUMERATION_BOUND,
    cap: int = LAYER_CAP
) -> List[AltElement]:
    """Every element of Alt(X) for |X| = carrier_size, in canonical order.

    Raises:
        CapacityError: if 2^|X| exceeds the enumeration bound
    """
    return list(_alt_carrier(carrier_size, bound, cap))


def random_alt(rng: np.random.Generator, carrier_size: int) -> AltElement:
    """A random antichain: 0..MAX_SAMPLED_FORKS random forks, minimized."""
    count = int(rng.integers(0, MAX_SAMPLED_FORKS + 1))
    return AltElement(
        carrier_size,
        minimal_elements(random_subset(rng, carrier_size) for _ in range(count))
    )


class AltMonad(FiniteMonad):
    name = "alt"

    def _lift(self, layer: Layer, bound: int, cap: int) -> Layer:
        return Layer(enumerate_alt(layer.size, bound, cap), name=f"Alt({layer.name})")

    def unit(self, layer: Layer, x: int) -> AltElement:
        return alt_unit(layer.size, x)

    def mult(self, layer: Layer, lifted: Layer, e: AltElement) -> AltElement:
        return alt_mult(e, lifted.elements, layer.size)

    def fmap(self, f: FiniteFunction, target: Layer, e: AltElement) -> AltElement:
        return alt_map(f, e)

    def sample(self, layer: Layer, rng: np.random.Generator) -> AltElement:
        return random_alt(rng, layer.size)


ALT = AltMonad()
