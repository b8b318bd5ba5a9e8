"""Closure lemmas as executable predicates.

Each function returns True when the stated identity holds for the given
instance; the law suites and property tests sweep them over small inputs.
"""

from typing import Iterable

from .antichain import expand_antichain, minimal_elements
from .poset import MonotoneMap, down_closure, up_closure
from .stateset import StateSet, submasks, union_all


def closure_union_holds(family: Iterable[StateSet], carrier_size: int) -> bool:
    """∪{t | ∃s∈S, t ⊆ s} = ∪S: closing a family downwards keeps its union."""
    family = list(family)
    closed = {
        StateSet(sub, carrier_size)
        for s in family
        for sub in submasks(s.bits)
    }
    return union_all(closed, carrier_size) == union_all(family, carrier_size)


def closure_image_holds(f: MonotoneMap, p: StateSet) -> bool:
    """↑f(↑P) = ↑f(P) and ↓f(↓P) = ↓f(P) for a monotone f."""
    cod = f.codomain
    up_ok = up_closure(cod, f.image(up_closure(f.domain, p))) == up_closure(cod, f.image(p))
    down_ok = down_closure(cod, f.image(down_closure(f.domain, p))) == down_closure(cod, f.image(p))
    return up_ok and down_ok


def closure_intersection_holds(family: Iterable[StateSet], t: StateSet, carrier_size: int) -> bool:
    """t meets every member of the ⊆-upward closure of S iff it meets every member of S."""
    family = list(family)
    closed = expand_antichain(carrier_size, minimal_elements(family))
    return all(t.meets(s) for s in closed) == all(t.meets(s) for s in family)
