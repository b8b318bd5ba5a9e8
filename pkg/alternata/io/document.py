"""Plain-text automaton documents.

One declaration per line; ``#`` starts a comment::

    kind: afa
    alphabet: a b
    states: q0 q1 q2 q3 q4
    accepting: q2 q3
    trans q0 a: {q1 q3} {q2 q4}

A dfa transition names one target, an nfa transition one ``{ ... }``
group, an afa transition one group per fork. Missing nfa/afa transitions
are empty; every dfa transition must be given.
"""

import logging
import re
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, model_validator

from ..automata import Afa, Alphabet, Automaton, Dfa, Nfa, make_afa
from ..order import StateSet
from ..types import AutomatonKind, DomainError, ParseError

logger = logging.getLogger(__name__)

_DECLARATION = re.compile(r"^(?P<key>kind|alphabet|states|accepting)\s*:(?P<value>.*)$")
_TRANSITION = re.compile(r"^trans\s+(?P<state>[^\s:{}]+)\s+(?P<symbol>[^\s:{}]+)\s*:(?P<spec>.*)$")
_GROUPS = re.compile(r"^(\s*\{[^{}]*\}\s*)+$")
_GROUP = re.compile(r"\{([^{}]*)\}")
_TOKEN = re.compile(r"^[^\s:{}#]+$")


class TransitionClause(BaseModel):
    """``trans <state> <symbol>: <targets>``; a dfa clause holds one group of one name."""
    state: str
    symbol: str
    targets: List[List[str]]

    model_config = {'frozen': True}


class AutomatonDocument(BaseModel):
    """A validated automaton description in declaration order."""
    kind: AutomatonKind
    alphabet: List[str]
    states: List[str]
    accepting: List[str]
    transitions: List[TransitionClause] = []

    @model_validator(mode='after')
    def _well_formed(self) -> 'AutomatonDocument':
        for _, message in _problems(self):
            raise ValueError(message)
        return self


def _problems(doc: AutomatonDocument) -> Iterator[Tuple[Union[int, str], str]]:
    """(where, message) for every violated invariant, in order; ``where`` is a
    transition clause index or the declaration key at fault.
    """
    if not doc.alphabet:
        yield "alphabet", "alphabet must not be empty"
    for label, tokens in (("alphabet", doc.alphabet), ("states", doc.states)):
        seen = set()
        for token in tokens:
            if not _TOKEN.match(token):
                yield label, f"{label}: {token!r} is not a valid name"
            if token in seen:
                yield label, f"{label}: {token!r} declared twice"
            seen.add(token)
    declared = set(doc.states)
    for name in doc.accepting:
        if name not in declared:
            yield "accepting", f"accepting: unknown state {name!r}"

    symbols = set(doc.alphabet)
    given = set()
    for i, clause in enumerate(doc.transitions):
        if clause.state not in declared:
            yield i, f"unknown state {clause.state!r}"
        if clause.symbol not in symbols:
            yield i, f"unknown symbol {clause.symbol!r}"
        key = (clause.state, clause.symbol)
        if key in given:
            yield i, f"second transition for {clause.state} on {clause.symbol}"
        given.add(key)
        groups = clause.targets
        if doc.kind == AutomatonKind.DFA and (len(groups) != 1 or len(groups[0]) != 1):
            yield i, f"dfa transition of {clause.state} on {clause.symbol} must name exactly one state"
        elif doc.kind == AutomatonKind.NFA and len(groups) != 1:
            yield i, f"nfa transition of {clause.state} on {clause.symbol} takes exactly one {{...}} group"
        elif doc.kind == AutomatonKind.AFA and not groups:
            yield i, f"afa transition of {clause.state} on {clause.symbol} needs at least one fork"
        for group in groups:
            for name in group:
                if name not in declared:
                    yield i, f"unknown state {name!r}"

    if doc.kind == AutomatonKind.DFA:
        for state in doc.states:
            for symbol in doc.alphabet:
                if (state, symbol) not in given:
                    yield "states", f"dfa: missing transition for state {state} on symbol {symbol}"


def _parse_targets(kind: AutomatonKind, spec: str, line: int) -> List[List[str]]:
    spec = spec.strip()
    if kind == AutomatonKind.DFA:
        if not _TOKEN.match(spec):
            raise ParseError(f"dfa transition must name one target state, got {spec!r}", line)
        return [[spec]]
    if not _GROUPS.match(spec):
        raise ParseError(f"expected {{...}} groups, got {spec!r}", line)
    return [group.split() for group in _GROUP.findall(spec)]


def parse_document(text: str) -> AutomatonDocument:
    """Parse and validate a document.

    Raises:
        ParseError: with the 1-based line of the first problem
    """
    values: Dict[str, Tuple[int, List[str]]] = {}
    raw_transitions: List[Tuple[int, str, str, str]] = []
    last_line = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        declaration = _DECLARATION.match(line)
        if declaration:
            key = declaration.group('key')
            if key in values:
                raise ParseError(f"duplicate {key} declaration (first on line {values[key][0]})", number)
            values[key] = (number, declaration.group('value').split())
            continue
        transition = _TRANSITION.match(line)
        if transition:
            raw_transitions.append(
                (number, transition.group('state'), transition.group('symbol'), transition.group('spec'))
            )
            continue
        raise ParseError(f"unrecognized declaration {line!r}", number)

    for key in ("kind", "alphabet", "states"):
        if key not in values:
            raise ParseError(f"missing {key} declaration", last_line or None)
    kind_line, kind_tokens = values["kind"]
    if len(kind_tokens) != 1 or kind_tokens[0] not in {k.value for k in AutomatonKind}:
        raise ParseError(f"kind must be one of dfa, nfa, afa, got {' '.join(kind_tokens)!r}", kind_line)
    kind = AutomatonKind(kind_tokens[0])

    clauses = [
        TransitionClause(state=state, symbol=symbol, targets=_parse_targets(kind, spec, number))
        for number, state, symbol, spec in raw_transitions
    ]
    lines = [number for number, _, _, _ in raw_transitions]

    draft = AutomatonDocument.model_construct(
        kind=kind,
        alphabet=values["alphabet"][1],
        states=values["states"][1],
        accepting=values.get("accepting", (None, []))[1],
        transitions=clauses,
    )
    for where, message in _problems(draft):
        if isinstance(where, int):
            raise ParseError(message, lines[where])
        raise ParseError(message, values[where][0] if where in values else last_line or None)

    logger.debug(f"Parsed a {kind.value} document with {len(draft.states)} states")
    return AutomatonDocument(
        kind=draft.kind,
        alphabet=draft.alphabet,
        states=draft.states,
        accepting=draft.accepting,
        transitions=draft.transitions,
    )


def _render_group(names: List[str]) -> str:
    return "{" + " ".join(names) + "}"


def print_document(doc: AutomatonDocument, comments: Optional[Mapping[str, str]] = None) -> str:
    """Canonical text of a document; ``comments`` maps state names to a note printed before the transitions."""
    lines = [
        f"kind: {doc.kind.value}",
        f"alphabet: {' '.join(doc.alphabet)}",
        f"states: {' '.join(doc.states)}",
        f"accepting: {' '.join(doc.accepting)}".rstrip(),
    ]
    if comments:
        for state in doc.states:
            if state in comments:
                lines.append(f"# {state} = {comments[state]}")
    for clause in doc.transitions:
        if doc.kind == AutomatonKind.DFA:
            spec = clause.targets[0][0]
        else:
            spec = " ".join(_render_group(group) for group in clause.targets)
        lines.append(f"trans {clause.state} {clause.symbol}: {spec}")
    return "\n".join(lines) + "\n"


def document_to_automaton(doc: AutomatonDocument) -> Automaton:
    """Build the machine a document describes; absent nfa/afa transitions are empty."""
    alphabet = Alphabet.of(doc.alphabet)
    names = tuple(doc.states)
    index = {name: i for i, name in enumerate(names)}
    n = len(names)
    accepting = set(doc.accepting)
    output = tuple(int(name in accepting) for name in names)
    table: Dict[Tuple[int, int], List[List[int]]] = {
        (index[c.state], alphabet.index(c.symbol)): [[index[t] for t in group] for group in c.targets]
        for c in doc.transitions
    }
    cells = [[table.get((q, a), []) for a in range(len(alphabet))] for q in range(n)]

    try:
        if doc.kind == AutomatonKind.DFA:
            return Dfa(alphabet, output, next=tuple(tuple(c[0][0] for c in row) for row in cells), names=names)
        if doc.kind == AutomatonKind.NFA:
            return Nfa(
                alphabet, output,
                next=tuple(tuple(StateSet.of(n, c[0] if c else ()) for c in row) for row in cells),
                names=names,
            )
        return make_afa(alphabet, output, cells, names=names)
    except DomainError as e:
        raise ParseError(str(e)) from e


def automaton_to_document(automaton: Automaton) -> AutomatonDocument:
    """The document of a machine; nfa transitions are always written, afa ones only when they have forks."""
    names = automaton.names
    symbols = automaton.alphabet.symbols
    clauses = []
    for q, row in enumerate(automaton.next):
        for a, target in enumerate(row):
            if isinstance(automaton, Dfa):
                groups = [[names[target]]]
            elif isinstance(automaton, Nfa):
                groups = [[names[p] for p in target]]
            else:
                groups = [[names[p] for p in fork] for fork in target]
                if not groups:
                    continue
            clauses.append(TransitionClause(state=names[q], symbol=symbols[a], targets=groups))
    return AutomatonDocument(
        kind=automaton.kind,
        alphabet=list(symbols),
        states=list(names),
        accepting=[names[q] for q in range(automaton.state_count) if automaton.output[q]],
        transitions=clauses,
    )


def load_document(path: str) -> AutomatonDocument:
    """Read and parse a UTF-8 document file."""
    with open(path, 'r', encoding='utf-8') as f:
        return parse_document(f.read())
