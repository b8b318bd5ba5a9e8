"""Choosing between exhaustive and sampled coverage of a diagram's inputs."""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence

import numpy as np

from ..config import CliConfig
from ..types import CapacityError, CheckMode

logger = logging.getLogger(__name__)


@dataclass
class CaseSource:
    """Inputs for one diagram together with how they were produced."""
    cases: Iterable[Any]
    mode: CheckMode
    seed: Optional[int] = None

    def __iter__(self) -> Iterator[Any]:
        return iter(self.cases)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def exhaustive(cases: Sequence[Any]) -> CaseSource:
    return CaseSource(cases, CheckMode.EXHAUSTIVE)


def sampled(draw: Callable[[np.random.Generator], Any], config: CliConfig) -> CaseSource:
    """``config.sample_count`` draws from a generator seeded with ``config.seed``."""
    rng = make_rng(config.seed)
    return CaseSource(
        (draw(rng) for _ in range(config.sample_count)),
        CheckMode.SAMPLED,
        config.seed
    )


def exhaustive_or_sampled(
    enumerate_cases: Callable[[], Sequence[Any]],
    draw: Callable[[np.random.Generator], Any],
    config: CliConfig,
    label: str = "diagram"
) -> CaseSource:
    """Enumerate the inputs if the layer fits under the configured bounds, else sample.

    Args:
        enumerate_cases: Produces every input; may raise CapacityError
        draw: Produces one random input
        config: Supplies layer_cap, sample_count and seed
        label: Used in the downgrade warning

    Returns:
        The chosen CaseSource
    """
    try:
        cases = enumerate_cases()
        if len(cases) <= config.layer_cap:
            return exhaustive(cases)
        reason = f"{len(cases)} inputs exceed the layer cap {config.layer_cap}"
    except CapacityError as e:
        reason = str(e)
    logger.warning(f"{label}: sampling {config.sample_count} inputs ({reason})")
    return sampled(draw, config)
