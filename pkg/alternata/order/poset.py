"""Finite posets, monotone maps and order closures."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence, Tuple, TypeVar

import numpy as np

from ..types import DomainError
from .stateset import StateSet

logger = logging.getLogger(__name__)

T = TypeVar('T')


class FinitePoset:
    """Immutable finite partial order on range(size).

    The relation is a read-only boolean matrix with ``relation[i, j]`` true
    iff i <= j. Construction rejects relations that are not reflexive,
    antisymmetric and transitive.
    """

    def __init__(self, relation, validate: bool = True):
        leq = np.array(relation, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise DomainError(f"order relation must be a square matrix, got shape {leq.shape}")
        if validate:
            self._validate(leq)
        leq.setflags(write=False)
        self.relation = leq
        self.size = leq.shape[0]

    @staticmethod
    def _validate(leq: np.ndarray) -> None:
        if not np.all(np.diag(leq)):
            raise DomainError("order relation is not reflexive")
        both = leq & leq.T
        np.fill_diagonal(both, False)
        if np.any(both):
            i, j = (int(v) for v in np.argwhere(both)[0])
            raise DomainError(f"order relation is not antisymmetric: {i} <= {j} <= {i}")
        as_int = leq.astype(np.int32)
        composed = (as_int @ as_int) > 0
        if np.any(composed & ~leq):
            i, j = (int(v) for v in np.argwhere(composed & ~leq)[0])
            raise DomainError(f"order relation is not transitive at ({i}, {j})")

    @classmethod
    def discrete(cls, size: int) -> 'FinitePoset':
        """The discrete order: x <= y iff x == y."""
        return cls(np.eye(size, dtype=bool), validate=False)

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[Tuple[int, int]]) -> 'FinitePoset':
        """Reflexive-transitive closure of the given (lower, upper) pairs.

        Raises:
            DomainError: if the closure is not antisymmetric
        """
        leq = np.eye(size, dtype=bool)
        for lower, upper in pairs:
            if not (0 <= lower < size and 0 <= upper < size):
                raise DomainError(f"pair ({lower}, {upper}) outside carrier of size {size}")
            leq[lower, upper] = True
        for k in range(size):
            leq |= np.outer(leq[:, k], leq[k, :])
        return cls(leq)

    @classmethod
    def from_order(cls, elements: Sequence[T], le: Callable[[T, T], bool]) -> 'FinitePoset':
        """Order induced on ``elements`` by a relation known to be a partial order."""
        n = len(elements)
        leq = np.zeros((n, n), dtype=bool)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                leq[i, j] = le(a, b)
        return cls(leq, validate=False)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.relation[x, y])

    @cached_property
    def up_masks(self) -> Tuple[int, ...]:
        """Bitmask of the elements above each element (itself included)."""
        return tuple(_row_mask(row) for row in self.relation)

    @cached_property
    def down_masks(self) -> Tuple[int, ...]:
        """Bitmask of the elements below each element (itself included)."""
        return tuple(_row_mask(col) for col in self.relation.T)

    def is_discrete(self) -> bool:
        return bool(np.array_equal(self.relation, np.eye(self.size, dtype=bool)))

    def __eq__(self, other) -> bool:
        return isinstance(other, FinitePoset) and np.array_equal(self.relation, other.relation)

    def __hash__(self) -> int:
        return hash((self.size, self.relation.tobytes()))

    def __repr__(self) -> str:
        covers = [
            (i, j) for i in range(self.size) for j in range(self.size)
            if i != j and self.relation[i, j]
        ]
        return f"FinitePoset(size={self.size}, lt={covers})"


def _row_mask(row: np.ndarray) -> int:
    mask = 0
    for j in np.flatnonzero(row):
        mask |= 1 << int(j)
    return mask


@dataclass(frozen=True)
class MonotoneMap:
    """Order-preserving map between two finite posets."""
    domain: FinitePoset
    codomain: FinitePoset
    table: Tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.domain.size:
            raise DomainError(f"table has {len(self.table)} entries for a domain of size {self.domain.size}")
        for x, fx in enumerate(self.table):
            if not 0 <= fx < self.codomain.size:
                raise DomainError(f"f({x}) = {fx} outside codomain of size {self.codomain.size}")
        for x in range(self.domain.size):
            for y in range(self.domain.size):
                if self.domain.leq(x, y) and not self.codomain.leq(self.table[x], self.table[y]):
                    raise DomainError(f"map is not monotone: {x} <= {y} but f({x}) > f({y})")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def image(self, p: StateSet) -> StateSet:
        """Direct image f*(p)."""
        _check_carrier(self.domain, p)
        return p.image(self.table, self.codomain.size)


def _check_carrier(poset: FinitePoset, p: StateSet) -> None:
    if p.size != poset.size:
        raise DomainError(f"set over a carrier of size {p.size} used with a poset of size {poset.size}")


def up_closure(poset: FinitePoset, p: StateSet) -> StateSet:
    """Upward closure {x | exists y in p, y <= x}."""
    _check_carrier(poset, p)
    masks = poset.up_masks
    bits = 0
    for y in p:
        bits |= masks[y]
    return StateSet(bits, poset.size)


def down_closure(poset: FinitePoset, p: StateSet) -> StateSet:
    """Downward closure {x | exists y in p, x <= y}."""
    _check_carrier(poset, p)
    masks = poset.down_masks
    bits = 0
    for y in p:
        bits |= masks[y]
    return StateSet(bits, poset.size)


def is_up_closed(poset: FinitePoset, p: StateSet) -> bool:
    return up_closure(poset, p) == p


def is_down_closed(poset: FinitePoset, p: StateSet) -> bool:
    return down_closure(poset, p) == p
