from itertools import combinations

import pytest

from app.models.digraph import Digraph
from app.services.config import settings


def bi_clique(members):
    pairs = []
    for a, b in combinations(members, 2):
        pairs += [(a, b), (b, a)]
    return pairs


def twin_cycles() -> Digraph:
    return Digraph.from_edge_list(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3), (5, 0)]
    )


def shared_hub() -> Digraph:
    return Digraph.from_edge_list(5, bi_clique([0, 1, 2]) + bi_clique([2, 3, 4]))


def clique_pair() -> Digraph:
    pairs = bi_clique(range(4)) + bi_clique(range(4, 8)) + [(3, 4), (4, 3), (0, 5), (5, 0)]
    return Digraph.from_edge_list(8, pairs)


def planted_kout() -> Digraph:
    pairs = bi_clique(range(4)) + bi_clique(range(4, 12)) + [(0, 4), (1, 4), (4, 0)]
    return Digraph.from_edge_list(12, pairs)


@pytest.fixture
def fix_a() -> Digraph:
    return twin_cycles()


@pytest.fixture
def fix_b() -> Digraph:
    return Digraph.from_edge_list(4, bi_clique(range(4)))


@pytest.fixture
def fix_c() -> Digraph:
    return shared_hub()


@pytest.fixture
def fix_d() -> Digraph:
    return clique_pair()


@pytest.fixture
def fix_e() -> Digraph:
    return planted_kout()


@pytest.fixture
def debug_checks(monkeypatch):
    monkeypatch.setattr(settings, "DEBUG_CHECKS", True)
    yield
