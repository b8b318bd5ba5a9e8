"""Executable commuting diagrams: monad, functor, naturality and distributive laws."""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import CliConfig
from ..config.constants import SAMPLED_SUBLAYER_SIZE
from ..monads import (
    DOWN,
    UP,
    FiniteFunction,
    FiniteMonad,
    Layer,
    cnf_atleast,
    cnf_exact,
    dist_component,
    down_of_discrete_is_powerset,
    format_element,
    poset_layer,
    pp_elements,
    pp_map,
    triangle_identities_hold,
)
from ..order import FinitePoset, enumerate_monotone_maps, small_posets
from ..types import CapacityError
from .reports import LawReport, Witness
from .sampling import CaseSource, exhaustive, exhaustive_or_sampled, sampled

logger = logging.getLogger(__name__)

Path = Callable[[Any], Any]


class _Case:
    """A multi-part diagram input with its own witness rendering."""
    __slots__ = ('parts', '_render')

    def __init__(self, parts: Tuple[Any, ...], render: Callable[..., str]):
        self.parts = parts
        self._render = render

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return self._render(*self.parts)


def _labelled(source: CaseSource, render: Callable[..., str]) -> CaseSource:
    return CaseSource((_Case(tuple(c), render) for c in source.cases), source.mode, source.seed)


def check_diagram(
    diagram_id: str,
    left: Path,
    right: Path,
    source: CaseSource,
    negative: bool = False
) -> LawReport:
    """Run both paths of a diagram on every case; stop at the first disagreement."""
    checked = 0
    for case in source:
        checked += 1
        lhs = left(case)
        rhs = right(case)
        if lhs != rhs:
            witness = Witness(
                input=format_element(case),
                left=format_element(lhs),
                right=format_element(rhs),
            )
            logger.info(f"{diagram_id} fails after {checked} cases: {witness}")
            return LawReport(
                diagram_id=diagram_id, passed=False, cases_checked=checked,
                mode=source.mode, seed=source.seed, witness=witness, negative=negative
            )
    logger.debug(f"{diagram_id} holds on {checked} cases ({source.mode.value})")
    return LawReport(
        diagram_id=diagram_id, passed=True, cases_checked=checked,
        mode=source.mode, seed=source.seed, negative=negative
    )


def check_predicate(
    diagram_id: str,
    holds: Callable[[Any], bool],
    source: CaseSource,
    negative: bool = False
) -> LawReport:
    """A diagram whose right path is the constant True."""
    return check_diagram(diagram_id, holds, lambda _: True, source, negative)


def check_monad_laws(
    monad: FiniteMonad,
    layer: Layer,
    config: Optional[CliConfig] = None,
    negative: bool = False,
    associativity: bool = True
) -> List[LawReport]:
    """Left unit, right unit and, unless ``associativity`` is off, associativity
    of ``monad`` at ``layer``.

    T(layer) must be enumerable. Unit laws run over all of T(layer);
    associativity runs over T³(layer) when it enumerates and is sampled
    otherwise, drawing the T²(layer) members from the enumerated T² layer
    or, when that is too large, from random T²(layer) elements.

    Raises:
        CapacityError: if T(layer) itself cannot be enumerated
    """
    config = config or CliConfig()
    prefix = f"{monad.name}[{layer.name}]"
    lifted = monad.lift(layer, config.enumeration_bound, config.layer_cap)
    eta = monad.unit_arrow(layer, lifted)
    units = exhaustive(lifted.elements)

    reports = [
        check_diagram(
            f"{prefix}.left-unit",
            lambda e: monad.mult(layer, lifted, monad.unit(lifted, lifted.index(e))),
            lambda e: e,
            units,
            negative,
        ),
        check_diagram(
            f"{prefix}.right-unit",
            lambda e: monad.mult(layer, lifted, monad.fmap(eta, lifted, e)),
            lambda e: e,
            units,
            negative,
        ),
    ]
    if associativity:
        reports.append(
            _check_associativity(monad, layer, lifted, config, f"{prefix}.associativity", negative)
        )
    return reports


def _try_lift(monad: FiniteMonad, layer: Layer, config: CliConfig) -> Optional[Layer]:
    try:
        return monad.lift(layer, config.enumeration_bound, config.layer_cap)
    except CapacityError as e:
        logger.debug(f"{monad.name} over {layer.name} not enumerated: {e}")
        return None


def _check_associativity(
    monad: FiniteMonad,
    layer: Layer,
    lifted: Layer,
    config: CliConfig,
    diagram_id: str,
    negative: bool
) -> LawReport:
    twice = _try_lift(monad, lifted, config)
    thrice = _try_lift(monad, twice, config) if twice is not None else None

    if thrice is not None:
        flatten = monad.mult_arrow(layer, lifted, twice)
        return check_diagram(
            diagram_id,
            lambda e: monad.mult(layer, lifted, monad.fmap(flatten, lifted, e)),
            lambda e: monad.mult(layer, lifted, monad.mult(lifted, twice, e)),
            exhaustive(thrice.elements),
            negative,
        )

    def draw(rng: np.random.Generator) -> Tuple[Layer, Any]:
        if twice is not None:
            picks = rng.choice(twice.size, size=min(SAMPLED_SUBLAYER_SIZE, twice.size), replace=False)
            members = [twice.elements[int(i)] for i in sorted(picks)]
        else:
            members = [monad.sample(lifted, rng) for _ in range(SAMPLED_SUBLAYER_SIZE)]
        sub = monad.sublayer(members, name=f"T2({layer.name})")
        return sub, monad.sample(sub, rng)

    def inner_first(case) -> Any:
        sub, e = case
        flatten = monad.mult_arrow(layer, lifted, sub)
        return monad.mult(layer, lifted, monad.fmap(flatten, lifted, e))

    def outer_first(case) -> Any:
        sub, e = case
        return monad.mult(layer, lifted, monad.mult(lifted, sub, e))

    def render(sub: Layer, e: Any) -> str:
        return f"({format_element(sub.elements)},{format_element(e)})"

    logger.warning(f"{diagram_id}: third layer not enumerable, sampling {config.sample_count} cases")
    return check_diagram(
        diagram_id, inner_first, outer_first,
        _labelled(sampled(draw, config), render),
        negative,
    )


def _as_function(f) -> FiniteFunction:
    return FiniteFunction(f.domain.size, f.codomain.size, f.table)


def check_functor_laws(
    monad: FiniteMonad,
    source: Layer,
    middle: Layer,
    target: Layer,
    config: Optional[CliConfig] = None
) -> List[LawReport]:
    """T(id) = id on T(source), and T(g∘f) = T(g)∘T(f) for all monotone f, g."""
    config = config or CliConfig()
    prefix = f"{monad.name}[{source.name},{middle.name},{target.name}]"
    lifted = monad.lift(source, config.enumeration_bound, config.layer_cap)
    identity = FiniteFunction.identity(source.size)
    fs = [_as_function(f) for f in enumerate_monotone_maps(source.poset, middle.poset)]
    gs = [_as_function(g) for g in enumerate_monotone_maps(middle.poset, target.poset)]
    cases = [(f, g, e) for f in fs for g in gs for e in lifted.elements]

    def render(f: FiniteFunction, g: FiniteFunction, e: Any) -> str:
        return f"(f={format_element(f.table)},g={format_element(g.table)},{format_element(e)})"

    def composed(case) -> Any:
        f, g, e = case
        return monad.fmap(f.then(g), target, e)

    def stepwise(case) -> Any:
        f, g, e = case
        return monad.fmap(g, target, monad.fmap(f, middle, e))

    return [
        check_diagram(
            f"{prefix}.identity",
            lambda e: monad.fmap(identity, source, e),
            lambda e: e,
            exhaustive(lifted.elements),
        ),
        check_diagram(
            f"{prefix}.composition", composed, stepwise,
            _labelled(exhaustive(cases), render),
        ),
    ]


@dataclass(frozen=True)
class NaturalTransformation:
    """Components λ_L : F(L) → G(L) together with the arrow actions of F and G."""
    name: str
    component: Callable[[Layer, Any], Any]
    source_map: Callable[[FiniteFunction, Layer, Layer, Any], Any]
    target_map: Callable[[FiniteFunction, Layer, Layer, Any], Any]
    inputs: Callable[[Layer], Sequence[Any]]


def check_naturality(
    t: NaturalTransformation,
    f: FiniteFunction,
    source: Layer,
    target: Layer,
    negative: bool = False,
    diagram_id: Optional[str] = None
) -> LawReport:
    """λ_target ∘ F(f) = G(f) ∘ λ_source on every element of F(source)."""
    diagram_id = diagram_id or (
        f"{t.name}.naturality[{source.name}->{target.name},f={format_element(f.table)}]"
    )
    return check_diagram(
        diagram_id,
        lambda e: t.component(target, t.source_map(f, source, target, e)),
        lambda e: t.target_map(f, source, target, t.component(source, e)),
        exhaustive(t.inputs(source)),
        negative,
    )


def function_instances(max_size: int) -> Iterable[Tuple[Layer, Layer, FiniteFunction]]:
    """Every function between discrete carriers of size 1..max_size, smaller carriers first."""
    layers = [Layer.discrete(n, name=f"X{n}") for n in range(1, max_size + 1)]
    pairs = sorted(
        itertools.product(layers, layers),
        key=lambda p: (max(p[0].size, p[1].size), p[0].size, p[1].size)
    )
    for source, target in pairs:
        for table in itertools.product(range(target.size), repeat=source.size):
            yield source, target, FiniteFunction.of(target.size, table)


def monotone_instances(max_size: int) -> Iterable[Tuple[Layer, Layer, FiniteFunction]]:
    """Every monotone map between the catalogued posets of size <= max_size."""
    shapes = small_posets(max_size)
    for (_, p), (_, q) in itertools.product(shapes, shapes):
        for f in enumerate_monotone_maps(p, q):
            yield poset_layer(p), poset_layer(q), _as_function(f)


def search_naturality_counterexample(
    t: NaturalTransformation,
    instances: Iterable[Tuple[Layer, Layer, FiniteFunction]],
    diagram_id: str,
    negative: bool = False
) -> LawReport:
    """Sweep (source, target, map, input) in order until naturality fails."""
    def cases():
        for source, target, f in instances:
            for e in t.inputs(source):
                yield source, target, f, e

    def left(case) -> Any:
        source, target, f, e = case
        return t.component(target, t.source_map(f, source, target, e))

    def right(case) -> Any:
        source, target, f, e = case
        return t.target_map(f, source, target, t.component(source, e))

    def render(source: Layer, target: Layer, f: FiniteFunction, e: Any) -> str:
        return f"(X={source.size},Y={target.size},f={format_element(f.table)},{format_element(e)})"

    return check_diagram(diagram_id, left, right, _labelled(exhaustive(cases()), render), negative)


def _pp_inputs(layer: Layer) -> List[Any]:
    return list(pp_elements(layer.size))


def _pp_action(f: FiniteFunction, source: Layer, target: Layer, e: Any) -> Any:
    return pp_map(f, e)


CNF_EXACT = NaturalTransformation(
    name="cnf-exact",
    component=lambda layer, e: cnf_exact(e, layer.size),
    source_map=_pp_action,
    target_map=_pp_action,
    inputs=_pp_inputs,
)

CNF_ATLEAST = NaturalTransformation(
    name="cnf-atleast",
    component=lambda layer, e: cnf_atleast(e, layer.size),
    source_map=_pp_action,
    target_map=_pp_action,
    inputs=_pp_inputs,
)


def _dn_up_action(f: FiniteFunction, source: Layer, target: Layer, e: Any) -> Any:
    return DOWN.fmap(UP.lift_arrow(f, source, target), UP.lift(target), e)


def _up_dn_action(f: FiniteFunction, source: Layer, target: Layer, e: Any) -> Any:
    return UP.fmap(DOWN.lift_arrow(f, source, target), DOWN.lift(target), e)


DIST_DN_UP = NaturalTransformation(
    name="dist-dn-up",
    component=dist_component,
    source_map=_dn_up_action,
    target_map=_up_dn_action,
    inputs=lambda layer: DOWN.lift(UP.lift(layer)).elements,
)


def identity_transformation(monad: FiniteMonad) -> NaturalTransformation:
    def action(f: FiniteFunction, source: Layer, target: Layer, e: Any) -> Any:
        return monad.fmap(f, target, e)

    return NaturalTransformation(
        name=f"id-{monad.name}",
        component=lambda layer, e: e,
        source_map=action,
        target_map=action,
        inputs=lambda layer: monad.lift(layer).elements,
    )


def check_dist_law(
    poset: FinitePoset,
    config: Optional[CliConfig] = None,
    name: Optional[str] = None,
    sample: bool = False
) -> List[LawReport]:
    """The four compatibility diagrams of λ : Dn∘Up ⇒ Up∘Dn at ``poset``.

    unit-dn:  λ ∘ η^Dn_{Up L} = Up(η^Dn_L)
    unit-up:  λ ∘ Dn(η^Up_L) = η^Up_{Dn L}
    mult-dn:  λ ∘ μ^Dn_{Up L} = Up(μ^Dn_L) ∘ λ_{Dn L} ∘ Dn(λ_L)
    mult-up:  λ ∘ Dn(μ^Up_L) = μ^Up_{Dn L} ∘ Up(λ_L) ∘ λ_{Up L}

    The multiplication diagrams are sampled when ``sample`` is set or when
    their input layer does not enumerate under the configured bounds.
    """
    config = config or CliConfig()
    bound, cap = config.enumeration_bound, config.layer_cap
    base = poset_layer(poset)
    prefix = f"distlaw[{name or f'P{poset.size}'}]"

    ups = UP.lift(base, bound, cap)
    downs = DOWN.lift(base, bound, cap)
    dn_ups = DOWN.lift(ups, bound, cap)
    up_ups = UP.lift(ups, bound, cap)
    up_downs = UP.lift(downs, bound, cap)
    dn_downs = DOWN.lift(downs, bound, cap)

    def lam(s):
        return dist_component(base, s)

    eta_dn = DOWN.unit_arrow(base, downs)
    eta_up = UP.unit_arrow(base, ups)
    lam_table = FiniteFunction.of(up_downs.size, [up_downs.index(lam(s)) for s in dn_ups.elements])
    flatten_dn = DOWN.mult_arrow(base, downs, dn_downs)
    flatten_up = UP.mult_arrow(base, ups, up_ups)

    def mult_dn_right(e):
        swapped = dist_component(downs, DOWN.fmap(lam_table, up_downs, e))
        return UP.fmap(flatten_dn, downs, swapped)

    def mult_up_right(e):
        exchanged = UP.fmap(lam_table, up_downs, dist_component(ups, e))
        return UP.mult(downs, up_downs, exchanged)

    def mult_cases(inner: Layer, label: str) -> CaseSource:
        def draw(rng: np.random.Generator) -> Any:
            return DOWN.sample(inner, rng)
        if sample:
            return sampled(draw, config)
        return exhaustive_or_sampled(
            lambda: DOWN.lift(inner, bound, cap).elements, draw, config, f"{prefix}.{label}"
        )

    return [
        check_diagram(
            f"{prefix}.unit-dn",
            lambda u: lam(DOWN.unit(ups, ups.index(u))),
            lambda u: UP.fmap(eta_dn, downs, u),
            exhaustive(ups.elements),
        ),
        check_diagram(
            f"{prefix}.unit-up",
            lambda d: lam(DOWN.fmap(eta_up, ups, d)),
            lambda d: UP.unit(downs, downs.index(d)),
            exhaustive(downs.elements),
        ),
        check_diagram(
            f"{prefix}.mult-dn",
            lambda e: lam(DOWN.mult(ups, dn_ups, e)),
            mult_dn_right,
            mult_cases(dn_ups, "mult-dn"),
        ),
        check_diagram(
            f"{prefix}.mult-up",
            lambda e: lam(DOWN.fmap(flatten_up, ups, e)),
            mult_up_right,
            mult_cases(up_ups, "mult-up"),
        ),
    ]


def check_adjunction(poset: FinitePoset, name: str = "P") -> LawReport:
    """Triangle identities of Do ⊣ U with identity unit and counit."""
    return check_predicate(
        f"adjunction[{name}].triangles",
        triangle_identities_hold,
        exhaustive([poset]),
    )


def check_down_of_discrete(max_size: int = 3) -> LawReport:
    """Dn(Do X) = P(X) for every |X| <= max_size."""
    return check_predicate(
        f"dn-do-is-powerset[X<={max_size}]",
        down_of_discrete_is_powerset,
        exhaustive(list(range(max_size + 1))),
    )
