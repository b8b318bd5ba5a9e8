"""Two exchange candidates P∘P ⇒ P∘P that do not give a monad.

``cnf_exact`` picks exactly one element from every set and is not even
natural. ``cnf_atleast`` picks at least one element and is natural, but
the multiplication it induces on P∘P breaks the monad laws. Both are kept
as subjects for the negative law suite.
"""

import itertools
import logging
from typing import FrozenSet, Hashable, Iterable, List, Sequence, TypeVar

import numpy as np

from ..config.constants import MAX_SAMPLED_FORKS
from ..order import StateSet, all_subsets, submasks, union_all
from ..types import CapacityError, DomainError
from .base import FiniteFunction, FiniteMonad, Layer, random_subset
from .powerset import POWERSET

logger = logging.getLogger(__name__)

H = TypeVar('H', bound=Hashable)


def choice_sets(family: Sequence[FrozenSet[H]], exact: bool) -> List[FrozenSet[H]]:
    """Every V ⊆ ∪family with |V ∩ U| = 1 (exact) or ≥ 1 for each U in family."""
    items = sorted(set().union(*family), key=repr) if family else []
    position = {item: i for i, item in enumerate(items)}
    masks = [sum(1 << position[x] for x in u) for u in family]
    chosen = []
    for v in submasks((1 << len(items)) - 1):
        if exact:
            ok = all((v & m).bit_count() == 1 for m in masks)
        else:
            ok = all(v & m for m in masks)
        if ok:
            chosen.append(frozenset(items[i] for i in range(len(items)) if v >> i & 1))
    return chosen


def _on_statesets(s: Iterable[StateSet], carrier_size: int, exact: bool) -> FrozenSet[StateSet]:
    family = []
    for u in s:
        if u.size != carrier_size:
            raise DomainError(f"set {u} is not over a carrier of size {carrier_size}")
        family.append(frozenset(u))
    return frozenset(StateSet.of(carrier_size, v) for v in choice_sets(family, exact))


def cnf_exact(s: Iterable[StateSet], carrier_size: int) -> FrozenSet[StateSet]:
    """{V ⊆ ∪S | ∀U ∈ S, |V ∩ U| = 1}."""
    return _on_statesets(s, carrier_size, exact=True)


def cnf_atleast(s: Iterable[StateSet], carrier_size: int) -> FrozenSet[StateSet]:
    """{V ⊆ ∪S | ∀U ∈ S, V ∩ U ≠ ∅}."""
    return _on_statesets(s, carrier_size, exact=False)


def pp_map(f: FiniteFunction, e: FrozenSet[StateSet]) -> FrozenSet[StateSet]:
    """P(P(f)): the image of every member set."""
    return frozenset(s.image(f.table, f.codomain_size) for s in e)


class AtLeastOneMonad(FiniteMonad):
    """The P∘P candidate: η = {{x}} and μ = P(μ^P) ∘ μ^P ∘ P(cnf_atleast).

    Elements of PP(L) are frozensets of StateSets over L.
    """

    name = "pp-atleast"

    def _lift(self, layer: Layer, bound: int, cap: int) -> Layer:
        subsets = POWERSET.lift(layer, bound, cap)
        if subsets.size > bound or 2 ** subsets.size > cap:
            raise CapacityError(
                f"PP({layer.name}) has 2^{subsets.size} elements, not enumerable", cap=cap
            )
        elements = [
            frozenset(subsets.elements[i] for i in family)
            for family in all_subsets(subsets.size)
        ]
        return Layer(elements, name=f"PP({layer.name})")

    def unit(self, layer: Layer, x: int) -> FrozenSet[StateSet]:
        return frozenset((StateSet.singleton(layer.size, x),))

    def mult(self, layer: Layer, lifted: Layer, e: FrozenSet[StateSet]) -> FrozenSet[StateSet]:
        chosen = set()
        for s in e:
            if s.size != lifted.size:
                raise DomainError(f"set over {s.size} indices used with {lifted.name} of size {lifted.size}")
            chosen.update(choice_sets([lifted.elements[i] for i in s], exact=False))
        return frozenset(union_all(v, layer.size) for v in chosen)

    def fmap(self, f: FiniteFunction, target: Layer, e: FrozenSet[StateSet]) -> FrozenSet[StateSet]:
        return pp_map(f, e)

    def sample(self, layer: Layer, rng: np.random.Generator) -> FrozenSet[StateSet]:
        count = int(rng.integers(0, MAX_SAMPLED_FORKS + 1))
        return frozenset(random_subset(rng, layer.size) for _ in range(count))


PP_ATLEAST = AtLeastOneMonad()


def pp_elements(carrier_size: int) -> Iterable[FrozenSet[StateSet]]:
    """Every element of P(P X) for |X| = carrier_size."""
    subsets = list(all_subsets(carrier_size))
    for r in range(len(subsets) + 1):
        for combo in itertools.combinations(subsets, r):
            yield frozenset(combo)
