"""Eilenberg-Moore algebras on the two-element carrier {0, 1}.

An algebra aggregates the acceptance bits of the states a transition
leads to: ``max`` for existential branching, ``min`` for universal
branching, and ``beta_alt`` for alternation.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict

from ..harness import LawReport, Witness, check_diagram, exhaustive
from ..monads import ALT, POWERSET, AltElement, alt_mult, enumerate_alt
from ..order import StateSet
from ..types import CheckMode, DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlgebraOnTwo:
    """β : T(2) → 2 for the monad named ``monad_name``."""
    monad_name: str
    evaluate: Callable[[Any], int]
    name: str

    def __call__(self, e: Any) -> int:
        return self.evaluate(e)


def _check_two(carrier_size: int) -> None:
    if carrier_size != 2:
        raise DomainError(f"algebra on {{0,1}} applied to an element over {carrier_size} values")


def beta_pow_max(s: StateSet) -> int:
    """Join of s; max(∅) = 0."""
    _check_two(s.size)
    return int(1 in s)


def beta_pow_min(s: StateSet) -> int:
    """Meet of s; min(∅) = 1."""
    _check_two(s.size)
    return 0 if 0 in s else 1


_ONE = StateSet.singleton(2, 1)


def beta_alt(e: AltElement) -> int:
    """1 iff the set {1} belongs to the upward-closed family of e."""
    _check_two(e.carrier_size)
    return int(_ONE in e.expanded())


def beta_alt_shortcut(e: AltElement) -> int:
    """Same value read off the forks: some fork avoids 0."""
    _check_two(e.carrier_size)
    return int(any(fork.issubset(_ONE) for fork in e.forks))


MAX = AlgebraOnTwo(POWERSET.name, beta_pow_max, "max")
MIN = AlgebraOnTwo(POWERSET.name, beta_pow_min, "min")
ALT_BETA = AlgebraOnTwo(ALT.name, beta_alt, "alt")

ALGEBRAS: Dict[str, AlgebraOnTwo] = {a.name: a for a in (MAX, MIN, ALT_BETA)}


def check_beta_alt_shortcut() -> LawReport:
    """The fork-level reading of beta_alt agrees with the family-level one on all of Alt(2)."""
    return check_diagram(
        "beta-alt[Alt(2)].shortcut",
        beta_alt,
        beta_alt_shortcut,
        exhaustive(enumerate_alt(2)),
    )


def check_free_algebra_identity() -> LawReport:
    """Alt(∅) has two elements and, read as {0, 1}, its multiplication is beta_alt.

    The identification sends the empty family to 0 and the family {∅} to 1.
    Both paths run over every element of Alt(Alt(∅)) ≅ Alt(2).
    """
    diagram_id = "free-algebra[Alt(0)].beta-is-mult"
    empty_carrier = enumerate_alt(0)
    if len(empty_carrier) != 2:
        logger.error(f"Alt(0) has {len(empty_carrier)} elements")
        return LawReport(
            diagram_id=diagram_id, passed=False, cases_checked=1,
            mode=CheckMode.EXHAUSTIVE,
            witness=Witness(input="|Alt(0)|", left=str(len(empty_carrier)), right="2"),
        )
    bottom, top = empty_carrier
    identify = {bottom: 0, top: 1}

    return check_diagram(
        diagram_id,
        beta_alt,
        lambda e: identify[alt_mult(e, (bottom, top), 0)],
        exhaustive(enumerate_alt(2)),
    )
