"""Strength, pointwise algebras and the distributive law an algebra induces.

Function spaces X^Y are layers whose elements are tuples ``h`` with
``h[y]`` an index of X. The law λ : T(2 × X^A) → 2 × T(X)^A is
(β × st) ∘ ⟨Tπ₁, Tπ₂⟩ and only ever evaluates T's arrow map, so the
layer of pairs may be any finite selection of 2 × X^A.
"""

import itertools
import logging
from typing import Hashable, Sequence, Tuple

from ..config.constants import LAYER_CAP
from ..monads import FiniteFunction, FiniteMonad, Layer
from ..types import CapacityError, DomainError
from .algebras import AlgebraOnTwo

logger = logging.getLogger(__name__)

TWO = Layer.discrete(2, name="2")

Pair = Tuple[int, Tuple[int, ...]]


def function_space(carrier: Layer, points: int, cap: int = LAYER_CAP) -> Layer:
    """Every function {0..points-1} → carrier, as tuples in lexicographic order.

    Raises:
        CapacityError: if |carrier|^points exceeds cap
    """
    size = carrier.size ** points
    if size > cap:
        raise CapacityError(f"{carrier.name}^{points} has {size} functions, above the cap {cap}", cap=cap)
    return Layer(
        itertools.product(range(carrier.size), repeat=points),
        name=f"{carrier.name}^{points}",
    )


def _evaluate_at(space: Layer, y: int, carrier: Layer) -> FiniteFunction:
    return FiniteFunction.of(carrier.size, [h[y] for h in space.elements])


def strength(monad: FiniteMonad, space: Layer, e: Hashable, y: int, carrier: Layer) -> Hashable:
    """st(e)(y) = T(h ↦ h(y))(e).

    Args:
        monad: T
        space: A layer of functions into ``carrier`` (any selection of carrier^Y)
        e: T-element over the indices of ``space``
        y: The point to evaluate at
        carrier: Codomain layer of the functions
    """
    if space.size and not 0 <= y < len(space.elements[0]):
        raise DomainError(f"point {y} outside the domain of the functions in {space.name}")
    return monad.fmap(_evaluate_at(space, y, carrier), carrier, e)


class PointwiseAlgebra:
    """β̂ : T(2^Y) → 2^Y, β̂(e)(y) = β(st(e)(y))."""

    def __init__(self, monad: FiniteMonad, algebra: AlgebraOnTwo, space: Layer):
        if algebra.monad_name != monad.name:
            raise DomainError(f"algebra {algebra.name} is not an algebra for {monad.name}")
        self.monad = monad
        self.algebra = algebra
        self.space = space
        self.points = len(space.elements[0]) if space.size else 0

    def __call__(self, e: Hashable) -> Tuple[int, ...]:
        return tuple(
            self.algebra(strength(self.monad, self.space, e, y, TWO))
            for y in range(self.points)
        )


def pointwise_algebra(monad: FiniteMonad, algebra: AlgebraOnTwo, points: int) -> PointwiseAlgebra:
    """The pointwise algebra on 2^Y for |Y| = points."""
    return PointwiseAlgebra(monad, algebra, function_space(TWO, points))


class AlgebraicDistLaw:
    """λ_X : T(2 × X^A) → 2 × T(X)^A built from an algebra β on 2.

    ``pairs`` lists the elements of 2 × X^A the law is applied to; each
    is ``(o, h)`` with h a tuple of carrier indices, one per symbol.
    """

    def __init__(
        self,
        monad: FiniteMonad,
        algebra: AlgebraOnTwo,
        pairs: Layer,
        carrier: Layer,
        alphabet_size: int
    ):
        if algebra.monad_name != monad.name:
            raise DomainError(f"algebra {algebra.name} is not an algebra for {monad.name}")
        for o, h in pairs.elements:
            if o not in (0, 1) or len(h) != alphabet_size:
                raise DomainError(f"({o}, {h}) is not an element of 2 x {carrier.name}^{alphabet_size}")
        self.monad = monad
        self.algebra = algebra
        self.pairs = pairs
        self.carrier = carrier
        self.alphabet_size = alphabet_size
        self.first = FiniteFunction.of(2, [o for o, _ in pairs.elements])
        self.functions = Layer(dict.fromkeys(h for _, h in pairs.elements), name=f"{carrier.name}^A")
        self.second = FiniteFunction.of(
            self.functions.size, [self.functions.index(h) for _, h in pairs.elements]
        )

    def __call__(self, e: Hashable) -> Tuple[int, Tuple[Hashable, ...]]:
        bit = self.algebra(self.monad.fmap(self.first, TWO, e))
        transposed = self.monad.fmap(self.second, self.functions, e)
        return bit, tuple(
            strength(self.monad, self.functions, transposed, a, self.carrier)
            for a in range(self.alphabet_size)
        )


def pair_layer(carrier: Layer, alphabet_size: int, cap: int = LAYER_CAP) -> Layer:
    """All of 2 × carrier^A."""
    space = function_space(carrier, alphabet_size, cap)
    return Layer(
        ((o, h) for o in (0, 1) for h in space.elements),
        name=f"2x{space.name}",
    )


def dist_from_algebra(
    monad: FiniteMonad,
    algebra: AlgebraOnTwo,
    carrier: Layer,
    alphabet_size: int
) -> AlgebraicDistLaw:
    """The law λ_carrier over the whole of 2 × carrier^A."""
    return AlgebraicDistLaw(monad, algebra, pair_layer(carrier, alphabet_size), carrier, alphabet_size)


def restricted_pairs(pairs: Sequence[Pair], name: str) -> Layer:
    """A layer of selected (output, successor-tuple) pairs, duplicates dropped."""
    return Layer(dict.fromkeys(pairs), name=name)
