"""The law suites behind ``check-laws``.

Each suite returns its reports in a fixed order so that runs with the
same configuration print the same lines.
"""

import itertools
import logging
from typing import List, Optional

import numpy as np

from ..automata import Alphabet, parity_afa, parity_predicate, random_nfa
from ..config import CliConfig
from ..config.constants import (
    CANDIDATE_ASSOCIATIVITY_SAMPLES,
    CANDIDATE_EXHAUSTIVE_SIZE,
    CANDIDATE_SAMPLED_SIZE,
    DIST_NATURALITY_SIZE,
    LEMMA_MAX_SIZE,
    NATURALITY_SEARCH_SIZE,
    POINTWISE_LAYER_CAP,
    POINTWISE_POINTS,
    RANDOM_NFA_COUNT,
    RANDOM_NFA_STATES,
    RANDOM_NFA_WORD_LEN,
)
from ..monads import (
    ALT,
    MONADS,
    POWERSET,
    PP_ATLEAST,
    FiniteFunction,
    FiniteMonad,
    Layer,
    alt_mult,
    alt_mult_by_formula,
    composite_mult_via_pipeline,
    enumerate_alt,
    random_alt,
)
from ..order import (
    StateSet,
    all_subsets,
    chain,
    closure_image_holds,
    closure_intersection_holds,
    closure_union_holds,
    diamond,
    discrete,
    enumerate_monotone_maps,
    small_posets,
)
from ..semantics import (
    ALT_BETA,
    MAX,
    MIN,
    check_beh1_agreement,
    check_beta_alt_shortcut,
    check_concrete_agreement,
    check_determinized_language,
    check_em_laws,
    check_free_algebra_identity,
    check_pointwise_em_laws,
    check_powerset_triangle,
    check_predicate_language,
    check_semantics_correspondence,
    check_subset_agreement,
    determinize,
    pointwise_algebra,
)
from ..types import CheckMode, DomainError
from .laws import (
    CNF_ATLEAST,
    CNF_EXACT,
    DIST_DN_UP,
    check_adjunction,
    check_diagram,
    check_dist_law,
    check_down_of_discrete,
    check_functor_laws,
    check_monad_laws,
    check_predicate,
    function_instances,
    monotone_instances,
    search_naturality_counterexample,
)
from .reports import LawReport, merge_reports
from .sampling import CaseSource, exhaustive, exhaustive_or_sampled, sampled

logger = logging.getLogger(__name__)


def _shape_layers(include_diamond: bool = True) -> List[Layer]:
    shapes = list(small_posets(3))
    if include_diamond:
        shapes.append(("diamond", diamond()))
    return [Layer.of_poset(p, name=name) for name, p in shapes]


def _carrier_layers(max_size: int, min_size: int = 0) -> List[Layer]:
    return [Layer.discrete(n, name=f"X{n}") for n in range(min_size, max_size + 1)]


def _alt_mult_cross_checks(config: CliConfig) -> List[LawReport]:
    """alt_mult against the quantifier formula and against the Up∘Dn pipeline."""
    reports = []
    for n in (1, 2):
        table = enumerate_alt(n)
        source = exhaustive_or_sampled(
            lambda: enumerate_alt(len(table), config.enumeration_bound, config.layer_cap),
            lambda rng: random_alt(rng, len(table)),
            config,
            f"alt[X{n}].mult-by-formula",
        )
        cases = list(source)
        reports.append(check_diagram(
            f"alt[X{n}].mult-by-formula",
            lambda e: alt_mult(e, table, n),
            lambda e: alt_mult_by_formula(e, table, n),
            CaseSource(cases, source.mode, source.seed),
        ))
        reports.append(check_diagram(
            f"alt[X{n}].mult-by-composition",
            lambda e: alt_mult(e, table, n),
            lambda e: composite_mult_via_pipeline(e, n),
            CaseSource(cases, source.mode, source.seed),
        ))
    return reports


def _functor_reports(monad: FiniteMonad, config: CliConfig) -> List[LawReport]:
    if monad is POWERSET or monad is ALT:
        x = Layer.discrete(2, name="X2")
        return check_functor_laws(monad, x, x, x, config)
    source = Layer.of_poset(chain(2), name="chain-2")
    middle = Layer.of_poset(discrete(2), name="discrete-2")
    target = Layer.of_poset(chain(3), name="chain-3")
    return (
        check_functor_laws(monad, middle, source, target, config)
        + check_functor_laws(monad, source, target, source, config)
    )


def monad_suite(config: Optional[CliConfig] = None, monad_name: Optional[str] = None) -> List[LawReport]:
    """Unit, associativity and functor laws of P, Up, Dn and Alt.

    P runs on discrete carriers of size 0..3, Up and Dn on every poset of
    size <= 3 plus the diamond, Alt on carriers of size 0..2.

    Raises:
        DomainError: on an unknown monad name
    """
    config = config or CliConfig()
    if monad_name is not None and monad_name not in MONADS:
        raise DomainError(f"unknown monad {monad_name!r}; expected one of {', '.join(MONADS)}")
    names = [monad_name] if monad_name else list(MONADS)
    reports: List[LawReport] = []
    for name in names:
        monad = MONADS[name]
        if monad is POWERSET:
            layers = _carrier_layers(3)
        elif monad is ALT:
            layers = _carrier_layers(2)
        else:
            layers = _shape_layers()
        logger.info(f"Monad laws of {name} on {len(layers)} layers")
        for layer in layers:
            reports.extend(check_monad_laws(monad, layer, config))
        reports.extend(_functor_reports(monad, config))
        if monad is ALT:
            reports.extend(_alt_mult_cross_checks(config))
    return reports


def _lemma_reports() -> List[LawReport]:
    families = [
        (n, tuple(family))
        for n in range(LEMMA_MAX_SIZE + 1)
        for family in itertools.chain.from_iterable(
            itertools.combinations(list(all_subsets(n)), r) for r in range(2 ** n + 1)
        )
    ]
    image_cases = [
        (f, p)
        for (_, dom), (_, cod) in itertools.product(small_posets(LEMMA_MAX_SIZE), repeat=2)
        for f in enumerate_monotone_maps(dom, cod)
        for p in all_subsets(dom.size)
    ]
    intersection_cases = [
        (n, family, t)
        for n, family in families
        for t in all_subsets(n)
    ]
    return [
        check_predicate(
            f"lemma[n<={LEMMA_MAX_SIZE}].closure-union",
            lambda case: closure_union_holds(case[1], case[0]),
            exhaustive(families),
        ),
        check_predicate(
            f"lemma[n<={LEMMA_MAX_SIZE}].closure-image",
            lambda case: closure_image_holds(*case),
            exhaustive(image_cases),
        ),
        check_predicate(
            f"lemma[n<={LEMMA_MAX_SIZE}].closure-intersection",
            lambda case: closure_intersection_holds(case[1], case[2], case[0]),
            exhaustive(intersection_cases),
        ),
    ]


def distlaw_suite(config: Optional[CliConfig] = None) -> List[LawReport]:
    """λ : Dn∘Up ⇒ Up∘Dn, its naturality, the Do ⊣ U adjunction and the closure lemmas."""
    config = config or CliConfig()
    reports: List[LawReport] = []
    for n in (1, 2):
        reports.extend(check_dist_law(discrete(n), config, name=f"discrete-{n}"))
    reports.extend(check_dist_law(chain(3), config, name="chain-3", sample=True))
    reports.extend(check_dist_law(diamond(), config, name="diamond", sample=True))
    reports.append(search_naturality_counterexample(
        DIST_DN_UP, monotone_instances(DIST_NATURALITY_SIZE),
        f"dist-dn-up.naturality[n<={DIST_NATURALITY_SIZE}]",
    ))
    for name, poset in small_posets(3):
        reports.append(check_adjunction(poset, name))
    reports.append(check_down_of_discrete(3))
    reports.extend(_lemma_reports())
    return reports


def _sampled_unit_laws(monad: FiniteMonad, layer: Layer, config: CliConfig, negative: bool) -> List[LawReport]:
    """Unit laws on random T(layer) elements, each checked inside a sub-layer of T(layer)."""
    prefix = f"{monad.name}[{layer.name}]"
    units = [monad.unit(layer, x) for x in range(layer.size)]

    def left(e):
        sub = monad.sublayer([e], name=f"T({layer.name})")
        return monad.mult(layer, sub, monad.unit(sub, 0))

    def right(e):
        sub = monad.sublayer(units, name=f"T({layer.name})")
        eta = FiniteFunction.of(sub.size, [sub.index(u) for u in units])
        return monad.mult(layer, sub, monad.fmap(eta, sub, e))

    def draw(rng: np.random.Generator):
        return monad.sample(layer, rng)

    return [
        check_diagram(f"{prefix}.left-unit", left, lambda e: e, sampled(draw, config), negative),
        check_diagram(f"{prefix}.right-unit", right, lambda e: e, sampled(draw, config), negative),
    ]


def _documented_cnf_exact_witness() -> LawReport:
    """f = (0,1,1) : 3 → 2 and S = {{0,1},{2}}."""
    f = FiniteFunction.of(2, (0, 1, 1))
    source, target = Layer.discrete(3, name="X3"), Layer.discrete(2, name="X2")
    s = frozenset({StateSet.of(3, (0, 1)), StateSet.of(3, (2,))})
    return check_diagram(
        "cnf-exact.naturality[X=3,Y=2]",
        lambda e: CNF_EXACT.component(target, CNF_EXACT.source_map(f, source, target, e)),
        lambda e: CNF_EXACT.target_map(f, source, target, CNF_EXACT.component(source, e)),
        exhaustive([s]),
        negative=True,
    )


def negative_suite(config: Optional[CliConfig] = None) -> List[LawReport]:
    """Candidates that must fail: the exactly-one exchange and the at-least-one monad on P∘P.

    The unit laws of the at-least-one monad are searched exhaustively on
    carriers up to CANDIDATE_EXHAUSTIVE_SIZE, stopping at the first carrier
    with a failure, then on random inputs up to CANDIDATE_SAMPLED_SIZE.
    Associativity, whose inputs are far larger, is only sampled (at most
    CANDIDATE_ASSOCIATIVITY_SAMPLES cases) when every unit law held. A
    search that finds nothing yields an expected-pass report that fails, so
    the run cannot pass vacuously.
    """
    config = config or CliConfig()
    reports = [
        search_naturality_counterexample(
            CNF_EXACT, function_instances(NATURALITY_SEARCH_SIZE),
            f"cnf-exact.naturality[n<={NATURALITY_SEARCH_SIZE}]", negative=True,
        ),
        _documented_cnf_exact_witness(),
        search_naturality_counterexample(
            CNF_ATLEAST, function_instances(2), "cnf-atleast.naturality[n<=2]"
        ),
    ]

    candidate: List[LawReport] = []
    for layer in _carrier_layers(CANDIDATE_EXHAUSTIVE_SIZE, min_size=1):
        candidate.extend(check_monad_laws(PP_ATLEAST, layer, config, negative=True, associativity=False))
        if not all(r.passed for r in candidate):
            break
    if all(r.passed for r in candidate):
        logger.warning("pp-atleast unit laws hold exhaustively on small carriers, sampling larger ones")
        for layer in _carrier_layers(CANDIDATE_SAMPLED_SIZE, min_size=CANDIDATE_EXHAUSTIVE_SIZE + 1):
            candidate.extend(_sampled_unit_laws(PP_ATLEAST, layer, config, negative=True))
    if all(r.passed for r in candidate):
        logger.warning("pp-atleast unit laws hold on every searched carrier, sampling associativity")
        capped = config.model_copy(update={"sample_count": min(config.sample_count, CANDIDATE_ASSOCIATIVITY_SAMPLES)})
        candidate.extend(
            r for r in check_monad_laws(PP_ATLEAST, Layer.discrete(1, name="X1"), capped, negative=True)
            if r.diagram_id.endswith(".associativity")
        )
    reports.extend(candidate)

    if all(r.passed for r in candidate):
        logger.error("pp-atleast: no failing diagram within the search bounds")
        reports.append(LawReport(
            diagram_id=f"{PP_ATLEAST.name}.search-exhausted",
            passed=False,
            cases_checked=sum(r.cases_checked for r in candidate),
            mode=CheckMode.SAMPLED,
            seed=config.seed,
        ))
    return reports


def _random_nfa_reports(config: CliConfig) -> List[LawReport]:
    rng = np.random.default_rng(config.seed)
    alphabet = Alphabet(("a", "b"))
    nfas = [random_nfa(rng, RANDOM_NFA_STATES, alphabet) for _ in range(RANDOM_NFA_COUNT)]
    label = f"random-nfa-{RANDOM_NFA_COUNT}"
    reports = []
    for algebra in (MAX, MIN):
        machines = [determinize(nfa, algebra, 0, config.determinize_state_cap) for nfa in nfas]
        reports.append(merge_reports(
            f"correspondence[{label},{algebra.name}]",
            [
                check_semantics_correspondence(nfa, algebra, 0, RANDOM_NFA_WORD_LEN, machine)
                for nfa, machine in zip(nfas, machines)
            ],
        ))
        reports.append(merge_reports(
            f"concrete[{label},{algebra.name}]",
            [check_concrete_agreement(nfa, algebra, 0, RANDOM_NFA_WORD_LEN) for nfa in nfas],
        ))
        if algebra is MAX:
            agreements = [
                check_subset_agreement(nfa, 0, machine)
                for nfa, machine in zip(nfas, machines)
            ]
            reports.append(merge_reports(f"subset-construction[{label}].states", [a[0] for a in agreements]))
            reports.append(merge_reports(f"subset-construction[{label}].language", [a[1] for a in agreements]))
        reports.append(merge_reports(
            f"triangle[{label},{algebra.name}]",
            [check_powerset_triangle(machine) for machine in machines],
        ))
    return reports


def semantics_suite(config: Optional[CliConfig] = None) -> List[LawReport]:
    """Algebra laws, the parity automaton and the correspondence of the semantics."""
    config = config or CliConfig()
    reports: List[LawReport] = []
    reports.extend(check_em_laws(POWERSET, MAX, config))
    reports.extend(check_em_laws(POWERSET, MIN, config))
    reports.extend(check_em_laws(ALT, ALT_BETA, config))
    pointwise_config = config.model_copy(update={"layer_cap": min(config.layer_cap, POINTWISE_LAYER_CAP)})
    for monad, algebra in ((POWERSET, MAX), (POWERSET, MIN), (ALT, ALT_BETA)):
        reports.extend(check_pointwise_em_laws(
            pointwise_algebra(monad, algebra, POINTWISE_POINTS), pointwise_config
        ))
    reports.append(check_beta_alt_shortcut())
    reports.append(check_free_algebra_identity())

    parity = parity_afa()
    max_len = config.max_word_len
    reports.append(check_predicate_language(
        parity, 0, parity_predicate, max_len, "parity[afa:q0].language"
    ))
    machine = determinize(parity, ALT_BETA, 0, config.determinize_state_cap)
    reports.append(check_semantics_correspondence(parity, ALT_BETA, 0, max_len, machine))
    reports.append(check_concrete_agreement(parity, ALT_BETA, 0, max_len))
    reports.append(check_beh1_agreement(parity, ALT_BETA, 0, max_len))
    reports.append(check_determinized_language(machine, max_len))
    reports.append(check_powerset_triangle(machine))

    reports.extend(_random_nfa_reports(config))
    return reports
