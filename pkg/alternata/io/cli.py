"""Command-line interface: accept, determinize, equiv, check-laws, export-dot."""

import argparse
import logging
import sys
from typing import Optional, Sequence, TextIO

from ..automata import dfa_equiv, export_dot
from ..config import CliConfig, load_config
from ..harness import suite_succeeded, summary_line
from ..harness.workflow import run_law_suites
from ..monads import MONADS
from ..recovery import ErrorHandler
from ..semantics import ALGEBRAS, ALT_BETA, MAX, AlgebraOnTwo, beh1, determinize
from ..types import AlternataError, AutomatonKind, DomainError, ExitCode, SuiteScope
from .document import automaton_to_document, document_to_automaton, load_document, print_document

logger = logging.getLogger(__name__)


def default_algebra(kind: AutomatonKind) -> AlgebraOnTwo:
    """β_Alt for alternating automata, max otherwise."""
    return ALT_BETA if kind == AutomatonKind.AFA else MAX


def _algebra(args: argparse.Namespace, kind: AutomatonKind) -> AlgebraOnTwo:
    name = getattr(args, "algebra", None)
    return ALGEBRAS[name] if name else default_algebra(kind)


def _load(path: str):
    return document_to_automaton(load_document(path))


def cmd_accept(args: argparse.Namespace, config: CliConfig, out: TextIO) -> ExitCode:
    automaton = _load(args.file)
    q = automaton.state_index(args.state)
    word = automaton.alphabet.parse_word(args.word)
    accepted = beh1(automaton, _algebra(args, automaton.kind), q, word)
    print("accept" if accepted else "reject", file=out)
    return ExitCode.OK if accepted else ExitCode.REJECT


def _start(automaton, name: Optional[str]) -> int:
    return automaton.state_index(name) if name is not None else 0


def cmd_determinize(args: argparse.Namespace, config: CliConfig, out: TextIO) -> ExitCode:
    automaton = _load(args.file)
    machine = determinize(
        automaton,
        _algebra(args, automaton.kind),
        _start(automaton, args.start),
        config.determinize_state_cap,
    )
    dfa = machine.dfa
    comments = {dfa.names[i]: machine.describe(i) for i in range(dfa.state_count)}
    out.write(print_document(automaton_to_document(dfa), comments))
    if args.dot:
        with open(args.dot, 'w', encoding='utf-8') as f:
            f.write(export_dot(dfa, start=0))
        logger.info(f"Wrote {args.dot}")
    return ExitCode.OK


def cmd_equiv(args: argparse.Namespace, config: CliConfig, out: TextIO) -> ExitCode:
    machines = []
    for path, state in ((args.file1, args.state1), (args.file2, args.state2)):
        automaton = _load(path)
        machines.append(determinize(
            automaton,
            default_algebra(automaton.kind),
            automaton.state_index(state),
            config.determinize_state_cap,
        ))
    left, right = machines
    equivalent, witness = dfa_equiv(left.dfa, 0, right.dfa, 0)
    if equivalent:
        print("equivalent", file=out)
        return ExitCode.OK
    print(left.dfa.alphabet.render_word(witness), file=out)
    return ExitCode.REJECT


def _scope(args: argparse.Namespace) -> SuiteScope:
    if args.monad:
        return SuiteScope.MONAD
    if args.distlaw:
        return SuiteScope.DISTLAW
    if args.negative:
        return SuiteScope.NEGATIVE
    if args.semantics:
        return SuiteScope.SEMANTICS
    return SuiteScope.ALL


def cmd_check_laws(args: argparse.Namespace, config: CliConfig, out: TextIO) -> ExitCode:
    scope = _scope(args)
    if args.monad and args.monad not in MONADS:
        raise DomainError(f"unknown monad {args.monad!r}; expected one of {', '.join(MONADS)}")
    reports = run_law_suites(scope, config, monad=args.monad)
    lines = [r.to_line() for r in reports] + [summary_line(reports)]
    for line in lines:
        print(line, file=out)
    if args.report_file:
        with open(args.report_file, 'w', encoding='utf-8') as f:
            f.write("\n".join(lines) + "\n")
        logger.info(f"Wrote {len(reports)} reports to {args.report_file}")
    succeeded = suite_succeeded(reports)
    if not succeeded:
        logger.error(f"check-laws --{scope.value}: suite failed")
    return ExitCode.OK if succeeded else ExitCode.REJECT


def cmd_export_dot(args: argparse.Namespace, config: CliConfig, out: TextIO) -> ExitCode:
    automaton = _load(args.file)
    start = automaton.state_index(args.start) if args.start is not None else None
    out.write(export_dot(automaton, start))
    return ExitCode.OK


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alternata",
        description="Alternating automata, their determinization and executable monad laws"
    )
    parser.add_argument("--config", help="YAML configuration file layered over the defaults")
    parser.add_argument("--log-level", help="Logging level (default from configuration: WARNING)")
    parser.add_argument("--samples", type=int, help="Cases per sampled diagram")
    parser.add_argument("--seed", type=lambda s: int(s, 0), help="Sampling seed (decimal or 0x...)")
    parser.add_argument("--max-word-len", type=int, help="Longest word in word sweeps")
    parser.add_argument("--state-cap", type=int, help="Largest determinized machine")
    commands = parser.add_subparsers(dest="command", required=True)

    accept = commands.add_parser("accept", help="Decide a word from a state")
    accept.add_argument("file", help="Automaton document")
    accept.add_argument("state", help="State name")
    accept.add_argument("word", help='Word; "" or ε for the empty word')
    accept.add_argument("--algebra", choices=sorted(ALGEBRAS), help="Acceptance algebra (nfa: max or min)")
    accept.set_defaults(handler=cmd_accept)

    det = commands.add_parser("determinize", help="Generalized powerset construction")
    det.add_argument("file", help="Automaton document")
    det.add_argument("--start", help="Start state name (default: the first state)")
    det.add_argument("--algebra", choices=sorted(ALGEBRAS), help="Acceptance algebra (nfa: max or min)")
    det.add_argument("--dot", help="Also write the DFA as Graphviz to this path")
    det.set_defaults(handler=cmd_determinize)

    equiv = commands.add_parser("equiv", help="Language equivalence of two states")
    equiv.add_argument("file1")
    equiv.add_argument("state1")
    equiv.add_argument("file2")
    equiv.add_argument("state2")
    equiv.set_defaults(handler=cmd_equiv)

    laws = commands.add_parser("check-laws", help="Run the law suites")
    scope = laws.add_mutually_exclusive_group()
    scope.add_argument("--all", action="store_true", help="Every suite (default)")
    scope.add_argument("--monad", metavar="NAME", help="Laws of one monad: powerset, up, down, alt")
    scope.add_argument("--distlaw", action="store_true", help="Distributive law, adjunction, lemmas")
    scope.add_argument("--negative", action="store_true", help="Candidates expected to fail")
    scope.add_argument("--semantics", action="store_true", help="Algebras and semantics correspondence")
    laws.add_argument("--report-file", help="Also write the report lines to this path")
    laws.set_defaults(handler=cmd_check_laws)

    dot = commands.add_parser("export-dot", help="Print an automaton as Graphviz")
    dot.add_argument("file", help="Automaton document")
    dot.add_argument("--start", help="State marked as initial")
    dot.set_defaults(handler=cmd_export_dot)
    return parser


def build_config(args: argparse.Namespace) -> CliConfig:
    return CliConfig.from_settings(
        load_config(args.config),
        sample_count=args.samples,
        seed=args.seed,
        max_word_len=args.max_word_len,
        determinize_state_cap=args.state_cap,
        log_level=args.log_level,
    )


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """Run one command; returns the process exit code."""
    out = out or sys.stdout
    try:
        args = create_parser().parse_args(argv)
    except SystemExit as e:
        return ExitCode.OK.value if not e.code else ExitCode.USAGE.value
    handler = ErrorHandler()
    try:
        config = build_config(args)
    except (ValueError, AlternataError) as e:
        print(f"error: {e}", file=sys.stderr)
        return handler.handle(e, {"command": args.command}).value

    logging.basicConfig(
        level=getattr(logging, config.log_level),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    )
    logger.info(f"Running {args.command}")
    try:
        return args.handler(args, config, out).value
    except AlternataError as e:
        print(f"error: {e}", file=sys.stderr)
        return handler.handle(e, {"command": args.command}).value
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return handler.handle(e, {"command": args.command, "kind": "io"}).value


if __name__ == "__main__":
    sys.exit(main())
