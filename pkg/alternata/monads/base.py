"""Finite carriers, arrows and the monad contract the law harness drives."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Dict, Hashable, Optional, Sequence, Tuple

import numpy as np

from ..config.constants import ENUMERATION_BOUND, LAYER_CAP
from ..order import Antichain, FinitePoset, StateSet
from ..types import CapacityError, DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteFunction:
    """An arrow of Set between carriers {0..domain_size-1} and {0..codomain_size-1}."""
    domain_size: int
    codomain_size: int
    table: Tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.domain_size:
            raise DomainError(f"table has {len(self.table)} entries for a domain of size {self.domain_size}")
        for x, fx in enumerate(self.table):
            if not 0 <= fx < self.codomain_size:
                raise DomainError(f"f({x}) = {fx} outside codomain of size {self.codomain_size}")

    @classmethod
    def identity(cls, size: int) -> 'FiniteFunction':
        return cls(size, size, tuple(range(size)))

    @classmethod
    def of(cls, codomain_size: int, table: Sequence[int]) -> 'FiniteFunction':
        return cls(len(table), codomain_size, tuple(int(v) for v in table))

    def __call__(self, x: int) -> int:
        return self.table[x]

    def then(self, g: 'FiniteFunction') -> 'FiniteFunction':
        """g ∘ self."""
        if g.domain_size != self.codomain_size:
            raise DomainError(f"cannot compose: codomain {self.codomain_size} vs domain {g.domain_size}")
        return FiniteFunction(self.domain_size, g.codomain_size, tuple(g.table[y] for y in self.table))


class Layer:
    """An enumerated carrier: a tuple of elements with index lookup and an order.

    Base layers hold plain indices; lifted layers hold T-elements over the
    indices of the layer below. ``order`` is the partial order of the
    elements (None for the discrete order); the poset is built on first use.
    """

    def __init__(
        self,
        elements: Sequence[Hashable],
        order: Optional[Callable[[Any, Any], bool]] = None,
        poset: Optional[FinitePoset] = None,
        name: str = "X"
    ):
        self.elements = tuple(elements)
        self.name = name
        self._index: Dict[Hashable, int] = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise DomainError(f"layer {name} lists an element twice")
        self._order = order
        self._poset = poset
        self.lifts: Dict[str, 'Layer'] = {}

    @classmethod
    def of_poset(cls, poset: FinitePoset, name: str = "X") -> 'Layer':
        return cls(range(poset.size), poset=poset, name=name)

    @classmethod
    def discrete(cls, size: int, name: str = "X") -> 'Layer':
        return cls(range(size), poset=FinitePoset.discrete(size), name=name)

    @property
    def size(self) -> int:
        return len(self.elements)

    @cached_property
    def poset(self) -> FinitePoset:
        if self._poset is not None:
            return self._poset
        if self._order is None:
            return FinitePoset.discrete(self.size)
        return FinitePoset.from_order(self.elements, self._order)

    def index(self, element: Hashable) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise DomainError(f"{format_element(element)} is not an element of layer {self.name}") from None

    def __contains__(self, element: Hashable) -> bool:
        return element in self._index

    def __repr__(self) -> str:
        return f"Layer({self.name}, size={self.size})"


class FiniteMonad(ABC):
    """A monad evaluated on enumerated finite layers.

    Elements of T(L) are values over the index carrier of L. ``lift`` is the
    object map, ``fmap`` the arrow map, ``unit`` and ``mult`` the monad
    structure.
    """

    name: str = "monad"

    def lift(
        self,
        layer: Layer,
        bound: int = ENUMERATION_BOUND,
        cap: int = LAYER_CAP
    ) -> Layer:
        """Enumerate T(layer); cached on the layer once it succeeds.

        Raises:
            CapacityError: if T(layer) is beyond the enumeration bounds
        """
        cached = layer.lifts.get(self.name)
        if cached is not None:
            return cached
        lifted = self._lift(layer, bound, cap)
        if lifted.size > cap:
            raise CapacityError(f"{lifted.name} has {lifted.size} elements, above the cap {cap}", cap=cap)
        layer.lifts[self.name] = lifted
        logger.debug(f"Lifted {layer.name} (size {layer.size}) to {lifted.name} (size {lifted.size})")
        return lifted

    @abstractmethod
    def _lift(self, layer: Layer, bound: int, cap: int) -> Layer:
        """Enumerate every element of T(layer)."""

    def element_order(self) -> Optional[Callable[[Any, Any], bool]]:
        """Partial order on T-elements; None means discrete."""
        return None

    def sublayer(self, elements: Sequence[Hashable], name: str) -> Layer:
        """A layer of selected T-elements carrying the induced order."""
        return Layer(dict.fromkeys(elements), order=self.element_order(), name=name)

    @abstractmethod
    def unit(self, layer: Layer, x: int) -> Hashable:
        """η at ``layer`` applied to the element with index x."""

    @abstractmethod
    def mult(self, layer: Layer, lifted: Layer, e: Hashable) -> Hashable:
        """μ at ``layer``; ``e`` is over the indices of ``lifted`` ⊆ T(layer)."""

    @abstractmethod
    def fmap(self, f: FiniteFunction, target: Layer, e: Hashable) -> Hashable:
        """T(f) applied to ``e``; ``target`` is the codomain layer of f."""

    @abstractmethod
    def sample(self, layer: Layer, rng: np.random.Generator) -> Hashable:
        """A random element of T(layer)."""

    def unit_arrow(self, layer: Layer, lifted: Layer) -> FiniteFunction:
        """η_X as a table X → T(X)."""
        return FiniteFunction.of(lifted.size, [lifted.index(self.unit(layer, x)) for x in range(layer.size)])

    def mult_arrow(self, layer: Layer, lifted: Layer, lifted_twice: Layer) -> FiniteFunction:
        """μ_X as a table from (a sub-layer of) T²X to TX."""
        return FiniteFunction.of(
            lifted.size,
            [lifted.index(self.mult(layer, lifted, e)) for e in lifted_twice.elements]
        )

    def lift_arrow(self, f: FiniteFunction, source: Layer, target: Layer) -> FiniteFunction:
        """T(f) as a table T(source) → T(target); both lifts must be enumerable."""
        lifted_source = self.lift(source)
        lifted_target = self.lift(target)
        return FiniteFunction.of(
            lifted_target.size,
            [lifted_target.index(self.fmap(f, target, e)) for e in lifted_source.elements]
        )


def random_subset(rng: np.random.Generator, size: int) -> StateSet:
    """Random subset: a uniform cardinality, then a uniform subset of it."""
    k = int(rng.integers(0, size + 1))
    members = rng.choice(size, size=k, replace=False) if k else []
    return StateSet.of(size, (int(m) for m in members))


def format_element(e: Any) -> str:
    """Compact, space-free rendering used in witnesses and logs."""
    if isinstance(e, (StateSet, Antichain)):
        return str(e)
    if isinstance(e, (frozenset, set)):
        parts = sorted(format_element(x) for x in e)
        return "{" + ",".join(parts) + "}"
    if isinstance(e, tuple):
        return "(" + ",".join(format_element(x) for x in e) + ")"
    return str(e).replace(" ", "")
