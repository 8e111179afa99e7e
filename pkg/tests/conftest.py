"""Shared fixtures: frozen corpora, the two worked-example graphs, and
the session-wide verification sweep reused by several test modules."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from lexdom import load_corpus, parse_edge_list, verify_corpus

DATA = Path(__file__).resolve().parent / "data"


def _corpus(name: str):
    return load_corpus(DATA / name)


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def connected_g():
    """All connected graphs on 2..5 vertices (30 graphs)."""
    return _corpus("connected_g_2_5.g6")


@pytest.fixture(scope="session")
def all_h():
    """All graphs on 2..4 vertices, disconnected and edgeless included."""
    return _corpus("all_h_2_4.g6")


@pytest.fixture(scope="session")
def trees():
    """All trees on 2..9 vertices."""
    return _corpus("trees_2_9.g6")


@pytest.fixture(scope="session")
def oracle_corpus():
    """All graphs on 2..7 vertices (exhaustive, 1251 graphs)."""
    return _corpus("oracle_2_7.g6")


@pytest.fixture(scope="session")
def sample_8():
    """Seeded sample of 60 random graphs on 8 vertices."""
    return _corpus("sample_8.g6")


@pytest.fixture(scope="session")
def fig1():
    return parse_edge_list((DATA / "fig1.edges").read_text())


@pytest.fixture(scope="session")
def fig2():
    return parse_edge_list((DATA / "fig2.edges").read_text())


@pytest.fixture(scope="session")
def corpus_report(connected_g, all_h):
    """One full verification sweep (30 x 17 pairs, every claim), shared
    by the formula, verification and acceptance tests."""
    return verify_corpus(connected_g, all_h)
