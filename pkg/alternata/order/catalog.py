"""Named small posets used by the law suites and tests."""

from typing import List, Tuple

from .poset import FinitePoset
from .stateset import all_subsets


def discrete(size: int) -> FinitePoset:
    return FinitePoset.discrete(size)


def chain(size: int) -> FinitePoset:
    """0 < 1 < ... < size-1."""
    return FinitePoset.from_pairs(size, [(i, i + 1) for i in range(size - 1)])


def vee() -> FinitePoset:
    """V: one bottom 0 below two incomparable tops 1 and 2."""
    return FinitePoset.from_pairs(3, [(0, 1), (0, 2)])


def wedge() -> FinitePoset:
    """Λ: two incomparable bottoms 0 and 1 below the top 2."""
    return FinitePoset.from_pairs(3, [(0, 2), (1, 2)])


def chain_plus_point() -> FinitePoset:
    """0 < 1, with 2 incomparable to both."""
    return FinitePoset.from_pairs(3, [(0, 1)])


def diamond() -> FinitePoset:
    """0 < 1, 2 < 3 with 1 and 2 incomparable."""
    return FinitePoset.from_pairs(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def boolean_lattice(size: int) -> FinitePoset:
    """All subsets of a size-element carrier ordered by inclusion, indexed by bitset value."""
    subsets = list(all_subsets(size))
    return FinitePoset.from_order(subsets, lambda a, b: a.issubset(b))


def small_posets(max_size: int = 3) -> List[Tuple[str, FinitePoset]]:
    """Every poset of size 1..max_size up to isomorphism (max_size <= 3)."""
    shapes = [
        ("discrete-1", discrete(1)),
        ("discrete-2", discrete(2)),
        ("chain-2", chain(2)),
        ("discrete-3", discrete(3)),
        ("chain-3", chain(3)),
        ("vee", vee()),
        ("wedge", wedge()),
        ("chain-2+1", chain_plus_point()),
    ]
    return [(name, p) for name, p in shapes if p.size <= max_size]
