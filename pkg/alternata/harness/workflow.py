"""Law-suite workflow: a planning node routes the run through the requested suites."""

import logging
import operator
from typing import Annotated, Any, Callable, Dict, List, Optional, TypedDict

from langgraph.graph import END, StateGraph

from ..config import CliConfig
from ..types import SuiteScope
from .reports import LawReport
from .suites import distlaw_suite, monad_suite, negative_suite, semantics_suite

logger = logging.getLogger(__name__)


class LawSuiteState(TypedDict):
    """State carried between suite nodes."""
    scope: str
    monad: Optional[str]
    pending: List[str]
    reports: Annotated[List[LawReport], operator.add]


SUITE_ORDER = ["monads", "distlaw", "negative", "semantics"]

_PLANS: Dict[SuiteScope, List[str]] = {
    SuiteScope.ALL: SUITE_ORDER,
    SuiteScope.MONAD: ["monads"],
    SuiteScope.DISTLAW: ["distlaw"],
    SuiteScope.NEGATIVE: ["negative"],
    SuiteScope.SEMANTICS: ["semantics"],
}


def plan_node(state: LawSuiteState) -> Dict[str, Any]:
    """Choose the suites for the requested scope."""
    pending = list(_PLANS[SuiteScope(state["scope"])])
    logger.info(f"Planned suites: {', '.join(pending)}")
    return {"pending": pending}


def _suite_node(name: str, run: Callable[[LawSuiteState, CliConfig], List[LawReport]]):
    def node(state: LawSuiteState, config: CliConfig) -> Dict[str, Any]:
        reports = run(state, config)
        failed = sum(1 for r in reports if not r.passed)
        logger.info(f"Suite {name}: {len(reports)} diagrams, {failed} failed")
        return {"reports": reports, "pending": state["pending"][1:]}
    return node


monads_node = _suite_node("monads", lambda s, c: monad_suite(c, s.get("monad")))
distlaw_node = _suite_node("distlaw", lambda s, c: distlaw_suite(c))
negative_node = _suite_node("negative", lambda s, c: negative_suite(c))
semantics_node = _suite_node("semantics", lambda s, c: semantics_suite(c))


def route(state: LawSuiteState) -> str:
    """Next pending suite, or the end of the run."""
    return state["pending"][0] if state["pending"] else END


def create_law_workflow(config: Optional[CliConfig] = None):
    """Create the law-suite graph.

    Args:
        config: Run configuration shared by every suite

    Returns:
        Compiled workflow graph
    """
    config = config or CliConfig()
    workflow = StateGraph(LawSuiteState)

    workflow.add_node("plan", plan_node)
    workflow.add_node("monads", lambda x: monads_node(x, config))
    workflow.add_node("distlaw", lambda x: distlaw_node(x, config))
    workflow.add_node("negative", lambda x: negative_node(x, config))
    workflow.add_node("semantics", lambda x: semantics_node(x, config))

    path_map = {name: name for name in SUITE_ORDER}
    path_map[END] = END
    for node in ["plan"] + SUITE_ORDER:
        workflow.add_conditional_edges(node, route, path_map)

    workflow.set_entry_point("plan")
    return workflow.compile()


def run_law_suites(
    scope: SuiteScope,
    config: Optional[CliConfig] = None,
    monad: Optional[str] = None
) -> List[LawReport]:
    """Run the suites for ``scope`` and return their reports in suite order."""
    workflow = create_law_workflow(config)
    result = workflow.invoke({
        "scope": scope.value,
        "monad": monad,
        "pending": [],
        "reports": [],
    })
    return result["reports"]
