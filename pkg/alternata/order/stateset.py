"""Subsets of a finite carrier, stored as integer bitsets."""

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

from ..config.constants import STATESET_WIDTH
from ..types import CapacityError, DomainError


@dataclass(frozen=True)
class StateSet:
    """A subset of the carrier {0, ..., size-1}.

    Equality is extensional: two StateSets over the same carrier with the
    same members are equal and hash alike.
    """
    bits: int
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise DomainError(f"carrier size must be non-negative, got {self.size}")
        if self.size > STATESET_WIDTH:
            raise CapacityError(
                f"carrier of size {self.size} exceeds the {STATESET_WIDTH}-element bitset width",
                cap=STATESET_WIDTH
            )
        if self.bits < 0 or self.bits >> self.size:
            raise DomainError(f"members {self.bits:#x} fall outside a carrier of size {self.size}")

    @classmethod
    def of(cls, size: int, members: Iterable[int] = ()) -> 'StateSet':
        """Build a StateSet from member indices."""
        bits = 0
        for x in members:
            if not 0 <= x < size:
                raise DomainError(f"index {x} outside carrier of size {size}")
            bits |= 1 << x
        return cls(bits, size)

    @classmethod
    def empty(cls, size: int) -> 'StateSet':
        return cls(0, size)

    @classmethod
    def full(cls, size: int) -> 'StateSet':
        return cls((1 << size) - 1, size)

    @classmethod
    def singleton(cls, size: int, x: int) -> 'StateSet':
        return cls.of(size, (x,))

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.size and bool(self.bits >> x & 1)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self) + "}"

    def _same_carrier(self, other: 'StateSet') -> None:
        if self.size != other.size:
            raise DomainError(f"carrier mismatch: {self.size} vs {other.size}")

    def union(self, other: 'StateSet') -> 'StateSet':
        self._same_carrier(other)
        return StateSet(self.bits | other.bits, self.size)

    def intersection(self, other: 'StateSet') -> 'StateSet':
        self._same_carrier(other)
        return StateSet(self.bits & other.bits, self.size)

    def complement(self) -> 'StateSet':
        return StateSet(~self.bits & ((1 << self.size) - 1), self.size)

    def issubset(self, other: 'StateSet') -> bool:
        self._same_carrier(other)
        return self.bits & ~other.bits == 0

    def issuperset(self, other: 'StateSet') -> bool:
        return other.issubset(self)

    def meets(self, other: 'StateSet') -> bool:
        """True iff the two sets share a member."""
        self._same_carrier(other)
        return self.bits & other.bits != 0

    def image(self, table: Sequence[int], codomain_size: int) -> 'StateSet':
        """Direct image under the function given by ``table``."""
        if len(table) != self.size:
            raise DomainError(f"map of domain {len(table)} applied to carrier {self.size}")
        return StateSet.of(codomain_size, (table[x] for x in self))

    def sort_key(self) -> Tuple[int, int]:
        """Canonical order: cardinality first, then bitset value."""
        return (len(self), self.bits)


def union_all(sets: Iterable[StateSet], size: int) -> StateSet:
    """Union of a collection of StateSets over the same carrier."""
    bits = 0
    for s in sets:
        if s.size != size:
            raise DomainError(f"carrier mismatch: {s.size} vs {size}")
        bits |= s.bits
    return StateSet(bits, size)


def all_subsets(size: int) -> Iterator[StateSet]:
    """Every subset of a carrier, in increasing bitset order."""
    for bits in range(1 << size):
        yield StateSet(bits, size)


def submasks(mask: int) -> Iterator[int]:
    """Every submask of ``mask``, the mask itself first and 0 last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
