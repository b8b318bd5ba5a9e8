"""Deterministic, nondeterministic and alternating automata as ⟨o, δ⟩ pairs."""

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple, Union

from ..monads import AltElement
from ..order import Antichain, StateSet
from ..types import AutomatonKind, DomainError

Word = Tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    """Ordered, duplicate-free list of symbol tokens."""
    symbols: Tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise DomainError("alphabet must not be empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise DomainError(f"alphabet lists a symbol twice: {' '.join(self.symbols)}")

    @classmethod
    def of(cls, symbols: Iterable[str]) -> 'Alphabet':
        return cls(tuple(symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise DomainError(f"symbol {symbol!r} is not in the alphabet") from None

    def check_word(self, word: Sequence[int]) -> Word:
        for a in word:
            if not 0 <= a < len(self.symbols):
                raise DomainError(f"symbol index {a} is not in an alphabet of {len(self.symbols)} symbols")
        return tuple(word)

    def parse_word(self, text: str) -> Word:
        """Tokens separated by spaces; without spaces, one symbol per character
        when every symbol is a single character, else the whole text as one symbol.
        """
        text = text.strip()
        if not text or text == "ε":
            return ()
        if " " in text:
            tokens = text.split()
        elif all(len(s) == 1 for s in self.symbols):
            tokens = list(text)
        else:
            tokens = [text]
        return tuple(self.index(t) for t in tokens)

    def render_word(self, word: Sequence[int]) -> str:
        if not word:
            return "ε"
        sep = "" if all(len(s) == 1 for s in self.symbols) else " "
        return sep.join(self.symbols[a] for a in word)


def _default_names(count: int) -> Tuple[str, ...]:
    return tuple(f"q{i}" for i in range(count))


def _check_outputs(output: Sequence[int]) -> None:
    for q, o in enumerate(output):
        if o not in (0, 1):
            raise DomainError(f"output of state {q} must be 0 or 1, got {o}")


def _check_rows(kind: str, rows: Sequence[Sequence], state_count: int, alphabet: Alphabet) -> None:
    if len(rows) != state_count:
        raise DomainError(f"{kind}: {len(rows)} transition rows for {state_count} states")
    for q, row in enumerate(rows):
        if len(row) != len(alphabet):
            raise DomainError(f"{kind}: state {q} has {len(row)} transitions for {len(alphabet)} symbols")


def _check_names(names: Tuple[str, ...], state_count: int) -> None:
    if len(names) != state_count:
        raise DomainError(f"{len(names)} state names for {state_count} states")
    if len(set(names)) != len(names):
        raise DomainError("state names must be distinct")


@dataclass(frozen=True)
class _Automaton:
    alphabet: Alphabet
    output: Tuple[int, ...]
    names: Tuple[str, ...] = field(default=(), kw_only=True)

    @property
    def state_count(self) -> int:
        return len(self.output)

    def check_state(self, q: int) -> int:
        if not 0 <= q < self.state_count:
            raise DomainError(f"state {q} outside an automaton of {self.state_count} states")
        return q

    def state_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise DomainError(f"unknown state {name!r}") from None

    def _init_names(self) -> None:
        if not self.names:
            object.__setattr__(self, 'names', _default_names(self.state_count))
        _check_names(self.names, self.state_count)
        _check_outputs(self.output)


@dataclass(frozen=True)
class Dfa(_Automaton):
    """Coalgebra for 2 × (−)^A: ``next[q][a]`` is a state."""
    next: Tuple[Tuple[int, ...], ...] = ()
    kind = AutomatonKind.DFA

    def __post_init__(self):
        self._init_names()
        _check_rows("dfa", self.next, self.state_count, self.alphabet)
        for q, row in enumerate(self.next):
            for a, target in enumerate(row):
                if not 0 <= target < self.state_count:
                    raise DomainError(f"dfa: transition {q} --{a}--> {target} leaves the state set")


@dataclass(frozen=True)
class Nfa(_Automaton):
    """Coalgebra for 2 × P(−)^A: ``next[q][a]`` is a set of states."""
    next: Tuple[Tuple[StateSet, ...], ...] = ()
    kind = AutomatonKind.NFA

    def __post_init__(self):
        self._init_names()
        _check_rows("nfa", self.next, self.state_count, self.alphabet)
        for q, row in enumerate(self.next):
            for a, targets in enumerate(row):
                if targets.size != self.state_count:
                    raise DomainError(f"nfa: successors of {q} on {a} are over {targets.size} states")


@dataclass(frozen=True)
class Afa(_Automaton):
    """Coalgebra for 2 × Alt(−)^A: ``next[q][a]`` is a canonical set of forks."""
    next: Tuple[Tuple[AltElement, ...], ...] = ()
    kind = AutomatonKind.AFA

    def __post_init__(self):
        self._init_names()
        _check_rows("afa", self.next, self.state_count, self.alphabet)
        for q, row in enumerate(self.next):
            for a, element in enumerate(row):
                if element.carrier_size != self.state_count:
                    raise DomainError(f"afa: forks of {q} on {a} are over {element.carrier_size} states")

    def forks(self, q: int, a: int) -> Antichain:
        return self.next[q][a].forks


Automaton = Union[Dfa, Nfa, Afa]


def dfa_as_nfa(d: Dfa) -> Nfa:
    """Embed a DFA as an NFA with singleton successor sets."""
    n = d.state_count
    return Nfa(
        d.alphabet,
        d.output,
        next=tuple(tuple(StateSet.singleton(n, t) for t in row) for row in d.next),
        names=d.names,
    )


def nfa_as_afa(n: Nfa) -> Afa:
    """Embed an NFA as an AFA whose forks are singletons."""
    size = n.state_count
    return Afa(
        n.alphabet,
        n.output,
        next=tuple(
            tuple(AltElement.of(size, ([q] for q in targets)) for targets in row)
            for row in n.next
        ),
        names=n.names,
    )


def make_afa(
    alphabet: Alphabet,
    output: Sequence[int],
    forks: Sequence[Sequence[Iterable[Iterable[int]]]],
    names: Optional[Sequence[str]] = None
) -> Afa:
    """Build an AFA from raw fork lists, canonicalizing each transition."""
    n = len(output)
    return Afa(
        alphabet,
        tuple(output),
        next=tuple(tuple(AltElement.of(n, fs) for fs in row) for row in forks),
        names=tuple(names) if names else (),
    )
