"""The powerset monad P: direct image, singleton unit, union multiplication."""

from typing import Iterable

import numpy as np

from ..order import StateSet, all_subsets, union_all
from ..types import CapacityError, DomainError
from .base import FiniteFunction, FiniteMonad, Layer, random_subset


def pow_map(f: FiniteFunction, s: StateSet) -> StateSet:
    """P(f)(s) = {f(x) | x ∈ s}."""
    if s.size != f.domain_size:
        raise DomainError(f"set over {s.size} elements given to a map with domain {f.domain_size}")
    return s.image(f.table, f.codomain_size)


def pow_unit(size: int, x: int) -> StateSet:
    return StateSet.singleton(size, x)


def pow_mult(family: Iterable[StateSet], size: int) -> StateSet:
    """Union of a set of subsets of a size-element carrier."""
    return union_all(family, size)


class PowersetMonad(FiniteMonad):
    name = "powerset"

    def _lift(self, layer: Layer, bound: int, cap: int) -> Layer:
        if layer.size > bound or 2 ** layer.size > cap:
            raise CapacityError(
                f"P({layer.name}) over {layer.size} elements is not enumerable", cap=bound
            )
        return Layer(all_subsets(layer.size), order=StateSet.issubset, name=f"P({layer.name})")

    def element_order(self):
        return StateSet.issubset

    def unit(self, layer: Layer, x: int) -> StateSet:
        return pow_unit(layer.size, x)

    def mult(self, layer: Layer, lifted: Layer, e: StateSet) -> StateSet:
        if e.size != lifted.size:
            raise DomainError(f"element over {e.size} indices used with {lifted.name} of size {lifted.size}")
        return pow_mult((lifted.elements[i] for i in e), layer.size)

    def fmap(self, f: FiniteFunction, target: Layer, e: StateSet) -> StateSet:
        return pow_map(f, e)

    def sample(self, layer: Layer, rng: np.random.Generator) -> StateSet:
        return random_subset(rng, layer.size)


POWERSET = PowersetMonad()
