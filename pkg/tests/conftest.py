"""Shared corpus fixtures for the test suite."""

import os

import pytest

from knotslice.pipeline import CorpusEntry, parse_knot, read_corpus

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
CORPUS_PATH = os.path.join(DATA_DIR, "corpus.tsv")

# Knots whose minimal diagrams are alternating, with the expected |s|.
ALTERNATING_ABS_S = {
    "3_1": 2, "4_1": 0, "5_1": 4, "5_2": 2,
    "6_1": 0, "6_2": 2, "6_3": 0, "7_1": 6, "7_2": 2,
}


@pytest.fixture(scope="session")
def corpus_entries() -> list[CorpusEntry]:
    return read_corpus(CORPUS_PATH)


@pytest.fixture(scope="session")
def corpus(corpus_entries):
    """name -> PlanarDiagram for every corpus entry."""
    return {e.name: parse_knot(e.kind, e.payload) for e in corpus_entries}


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """The entries with at most 9 crossings (all of them, currently)."""
    return {name: d for name, d in corpus.items() if d.n <= 9}
