"""Alt multiplication computed by the composition rule for Up over Dn.

With Y the discrete poset on X, Alt(X) is Up(Dn Y) and

    μ = Up(μ^Dn_Y) ∘ μ^Up_{Dn Dn Y} ∘ Up(λ_{Dn Y})

applied after the counit re-types the discrete Alt(X) carrier as the
ordered Up(Dn Y). Every stage runs on enumerated layers, so this is only
practical for |X| <= 2; it exists to cross-check :func:`alt_mult`.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from ..order import StateSet, down_closure, expand_antichain, minimal_elements, up_closure
from ..types import DomainError
from .alt import AltElement, enumerate_alt
from .base import FiniteFunction, Layer
from .distributive import dist_arrow
from .updown import DOWN, UP

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Stages:
    discrete: Layer      # Y
    subsets: Layer       # Dn Y = P X
    alt: Layer           # Up Dn Y, ordered
    dn_alt: Layer        # Dn Up Dn Y
    dn_dn: Layer         # Dn Dn Y
    up_dn_dn: Layer      # Up Dn Dn Y
    counit: tuple        # Alt(X) index → index in ``alt``
    exchange: FiniteFunction   # λ_{Dn Y}
    flatten: FiniteFunction    # μ^Dn_Y


@lru_cache(maxsize=None)
def _stages(carrier_size: int) -> _Stages:
    discrete = Layer.discrete(carrier_size, name="Y")
    subsets = DOWN.lift(discrete)
    alt = UP.lift(subsets)
    dn_alt = DOWN.lift(alt)
    dn_dn = DOWN.lift(subsets)
    up_dn_dn = UP.lift(dn_dn)
    counit = tuple(
        alt.index(StateSet.of(subsets.size, (subsets.index(s) for s in e.expanded())))
        for e in enumerate_alt(carrier_size)
    )
    flatten = FiniteFunction.of(
        subsets.size,
        [subsets.index(DOWN.mult(discrete, subsets, d)) for d in dn_dn.elements]
    )
    logger.debug(
        f"Pipeline layers for |X|={carrier_size}: Alt={alt.size}, Dn(Alt)={dn_alt.size}, "
        f"DnDn={dn_dn.size}, UpDnDn={up_dn_dn.size}"
    )
    return _Stages(
        discrete, subsets, alt, dn_alt, dn_dn, up_dn_dn,
        counit, dist_arrow(subsets), flatten
    )


def composite_mult_via_pipeline(e: AltElement, carrier_size: int) -> AltElement:
    """μ at X for an element of Alt(Alt X) whose forks index enumerate_alt(carrier_size).

    Raises:
        DomainError: if the element is not over the enumerated Alt(X) carrier
    """
    st = _stages(carrier_size)
    if e.carrier_size != len(st.counit):
        raise DomainError(
            f"element over {e.carrier_size} indices, but |Alt({carrier_size})| = {len(st.counit)}"
        )
    # counit: each fork becomes the down-set it generates in the ordered Alt(X)
    generators = StateSet.of(
        st.dn_alt.size,
        (
            st.dn_alt.index(down_closure(st.alt.poset, StateSet.of(st.alt.size, (st.counit[q] for q in fork))))
            for fork in e.forks
        )
    )
    lifted = up_closure(st.dn_alt.poset, generators)
    exchanged = UP.fmap(st.exchange, st.up_dn_dn, lifted)
    joined = UP.mult(st.dn_dn, st.up_dn_dn, exchanged)
    flattened = UP.fmap(st.flatten, st.subsets, joined)
    return AltElement(carrier_size, minimal_elements(st.subsets.elements[i] for i in flattened))


def alt_from_up_set(carrier_size: int, up: StateSet) -> AltElement:
    """Read an element of Up(Dn Y) back as an Alt element."""
    st = _stages(carrier_size)
    return AltElement(carrier_size, minimal_elements(st.subsets.elements[i] for i in up))


def alt_to_up_set(e: AltElement) -> StateSet:
    """An Alt element as indices into the enumerated subsets of its carrier."""
    st = _stages(e.carrier_size)
    return StateSet.of(st.subsets.size, (st.subsets.index(s) for s in expand_antichain(e.carrier_size, e.forks)))
