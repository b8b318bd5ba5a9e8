"""The up-set monad Up and the down-set monad Dn on finite posets.

Up(X) is ordered by reversed inclusion and Dn(X) by inclusion. Both take
direct images followed by a closure, embed a point as its principal
closure, and flatten by union.
"""

import logging
from functools import lru_cache
from typing import Iterable

import numpy as np

from ..order import (
    FinitePoset,
    MonotoneMap,
    StateSet,
    down_closure,
    enumerate_down_sets,
    enumerate_up_sets,
    is_down_closed,
    is_up_closed,
    up_closure,
    union_all,
)
from ..types import DomainError
from .base import FiniteFunction, FiniteMonad, Layer, random_subset

logger = logging.getLogger(__name__)


class UpMonad(FiniteMonad):
    name = "up"

    def _lift(self, layer: Layer, bound: int, cap: int) -> Layer:
        ups = enumerate_up_sets(layer.poset, bound, cap)
        return Layer(ups, order=self.element_order(), name=f"Up({layer.name})")

    def element_order(self):
        return StateSet.issuperset

    def unit(self, layer: Layer, x: int) -> StateSet:
        return up_closure(layer.poset, StateSet.singleton(layer.size, x))

    def mult(self, layer: Layer, lifted: Layer, e: StateSet) -> StateSet:
        if e.size != lifted.size:
            raise DomainError(f"element over {e.size} indices used with {lifted.name} of size {lifted.size}")
        if not is_up_closed(lifted.poset, e):
            raise DomainError(f"{e} is not up-closed in {lifted.name}")
        return union_all((lifted.elements[i] for i in e), layer.size)

    def fmap(self, f: FiniteFunction, target: Layer, e: StateSet) -> StateSet:
        return up_closure(target.poset, e.image(f.table, f.codomain_size))

    def sample(self, layer: Layer, rng: np.random.Generator) -> StateSet:
        return up_closure(layer.poset, random_subset(rng, layer.size))


class DownMonad(FiniteMonad):
    name = "down"

    def _lift(self, layer: Layer, bound: int, cap: int) -> Layer:
        downs = enumerate_down_sets(layer.poset, bound, cap)
        return Layer(downs, order=self.element_order(), name=f"Dn({layer.name})")

    def element_order(self):
        return StateSet.issubset

    def unit(self, layer: Layer, x: int) -> StateSet:
        return down_closure(layer.poset, StateSet.singleton(layer.size, x))

    def mult(self, layer: Layer, lifted: Layer, e: StateSet) -> StateSet:
        if e.size != lifted.size:
            raise DomainError(f"element over {e.size} indices used with {lifted.name} of size {lifted.size}")
        if not is_down_closed(lifted.poset, e):
            raise DomainError(f"{e} is not down-closed in {lifted.name}")
        return union_all((lifted.elements[i] for i in e), layer.size)

    def fmap(self, f: FiniteFunction, target: Layer, e: StateSet) -> StateSet:
        return down_closure(target.poset, e.image(f.table, f.codomain_size))

    def sample(self, layer: Layer, rng: np.random.Generator) -> StateSet:
        return down_closure(layer.poset, random_subset(rng, layer.size))


UP = UpMonad()
DOWN = DownMonad()


@lru_cache(maxsize=None)
def poset_layer(poset: FinitePoset) -> Layer:
    """The shared base layer of a poset, so its lifts are enumerated once."""
    return Layer.of_poset(poset, name=f"P{poset.size}")


def _as_function(f: MonotoneMap) -> FiniteFunction:
    return FiniteFunction(f.domain.size, f.codomain.size, f.table)


def up_unit(poset: FinitePoset, x: int) -> StateSet:
    return UP.unit(poset_layer(poset), x)


def up_map(f: MonotoneMap, u: StateSet) -> StateSet:
    """Up(f)(u) = ↑f(u)."""
    if not is_up_closed(f.domain, u):
        raise DomainError(f"{u} is not up-closed in the domain")
    return UP.fmap(_as_function(f), poset_layer(f.codomain), u)


def up_mult(poset: FinitePoset, family: Iterable[StateSet]) -> StateSet:
    """Union of an up-closed family of up-sets.

    Raises:
        DomainError: if a member is not up-closed or the family is not
            up-closed in Up(X), which is ordered by reversed inclusion
    """
    base = poset_layer(poset)
    lifted = UP.lift(base)
    members = StateSet.of(lifted.size, (lifted.index(u) for u in family))
    return UP.mult(base, lifted, members)


def dn_unit(poset: FinitePoset, x: int) -> StateSet:
    return DOWN.unit(poset_layer(poset), x)


def dn_map(f: MonotoneMap, d: StateSet) -> StateSet:
    """Dn(f)(d) = ↓f(d)."""
    if not is_down_closed(f.domain, d):
        raise DomainError(f"{d} is not down-closed in the domain")
    return DOWN.fmap(_as_function(f), poset_layer(f.codomain), d)


def dn_mult(poset: FinitePoset, family: Iterable[StateSet]) -> StateSet:
    """Union of a down-closed family of down-sets.

    Raises:
        DomainError: if a member is not down-closed or the family is not
            down-closed in Dn(X)
    """
    base = poset_layer(poset)
    lifted = DOWN.lift(base)
    members = StateSet.of(lifted.size, (lifted.index(d) for d in family))
    return DOWN.mult(base, lifted, members)
