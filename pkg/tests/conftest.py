"""Test configuration and fixtures."""

from pathlib import Path

import pytest

from alternata.automata import parity_afa
from alternata.config import CliConfig
from alternata.io import document_to_automaton, load_document

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    """Provide the directory holding the automaton documents."""
    return FIXTURES


@pytest.fixture
def small_config():
    """Provide a run configuration with few samples."""
    return CliConfig(sample_count=40, max_word_len=6)


@pytest.fixture
def parity():
    """Provide the five-state parity AFA."""
    return parity_afa()


@pytest.fixture
def parity_path():
    return str(FIXTURES / "parity.afa")


@pytest.fixture
def even_length_path():
    return str(FIXTURES / "even_length.dfa")


@pytest.fixture
def ends_in_a_path():
    return str(FIXTURES / "ends_in_a.nfa")


@pytest.fixture
def ends_in_a(ends_in_a_path):
    """Provide the two-state NFA p --a--> {p, q}, p --b--> {p}."""
    return document_to_automaton(load_document(ends_in_a_path))


@pytest.fixture
def even_length(even_length_path):
    return document_to_automaton(load_document(even_length_path))
