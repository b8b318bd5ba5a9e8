import pytest

from alternata.automata import Afa, Alphabet, Dfa, Nfa, dfa_as_nfa, make_afa, nfa_as_afa
from alternata.monads import AltElement
from alternata.order import StateSet
from alternata.types import AutomatonKind, DomainError

AB = Alphabet(("a", "b"))


def test_alphabet():
    assert AB.index("b") == 1
    with pytest.raises(DomainError):
        AB.index("c")
    with pytest.raises(DomainError):
        Alphabet(())
    with pytest.raises(DomainError):
        Alphabet(("a", "a"))


@pytest.mark.parametrize("text,word", [
    ("", ()),
    ("ε", ()),
    ("ab", (0, 1)),
    ("b a a", (1, 0, 0)),
])
def test_parse_word(text, word):
    assert AB.parse_word(text) == word


def test_multi_character_symbols():
    alphabet = Alphabet(("go", "stop"))
    assert alphabet.parse_word("go stop") == (0, 1)
    assert alphabet.parse_word("stop") == (1,)
    assert alphabet.render_word((0, 1)) == "go stop"
    with pytest.raises(DomainError):
        alphabet.parse_word("gostop")


def test_render_word():
    assert AB.render_word(()) == "ε"
    assert AB.render_word((1, 0)) == "ba"


def test_dfa_validation():
    d = Dfa(AB, (0, 1), next=((1, 0), (1, 1)))
    assert d.names == ("q0", "q1")
    assert d.kind == AutomatonKind.DFA
    assert d.state_index("q1") == 1
    with pytest.raises(DomainError):
        Dfa(AB, (0, 1), next=((1, 2), (1, 1)))
    with pytest.raises(DomainError):
        Dfa(AB, (0, 2), next=((1, 0), (1, 1)))
    with pytest.raises(DomainError):
        Dfa(AB, (0,), next=((0,),))
    with pytest.raises(DomainError):
        Dfa(AB, (0, 1), next=((1, 0), (1, 1)), names=("x", "x"))
    with pytest.raises(DomainError):
        d.state_index("q7")
    with pytest.raises(DomainError):
        d.check_state(2)


def test_nfa_successors_must_share_the_carrier():
    with pytest.raises(DomainError):
        Nfa(AB, (0,), next=((StateSet.of(2, [0]), StateSet.empty(1)),))


def test_afa_forks_are_canonical():
    a = make_afa(AB, (0, 1), [[[[1], [0, 1]], []], [[[0]], [[]]]])
    assert a.forks(0, 0).sets == (StateSet.of(2, [1]),)
    assert a.next[0][1] == AltElement.of(2, [])
    assert a.next[1][1] == AltElement.of(2, [[]])
    with pytest.raises(DomainError):
        Afa(AB, (0,), next=((AltElement.of(2, [[0]]), AltElement.of(1, [])),))


def test_embeddings():
    d = Dfa(AB, (0, 1), next=((1, 0), (1, 1)), names=("x", "y"))
    n = dfa_as_nfa(d)
    assert n.next[0][0] == StateSet.of(2, [1])
    assert n.names == ("x", "y")
    a = nfa_as_afa(n)
    assert a.forks(0, 1).sets == (StateSet.of(2, [0]),)
    assert a.kind == AutomatonKind.AFA
