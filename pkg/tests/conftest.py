"""Shared corpora and cached brute-force data for the test suite."""

import itertools

import pytest

from sepenum.graph import Graph, Terminals, _reach_mask
from sepenum.oracle import (
    brute_important,
    brute_minimal_separators,
    brute_minimum_separators,
    random_graph,
)


def is_connected(G: Graph) -> bool:
    return G.n == 0 or _reach_mask(G.masks, 1, 0).bit_count() == G.n


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Draw seeded ER graphs (bumping the seed) until one is connected."""
    for attempt in itertools.count():
        G = random_graph(n, p, seed + 1_000_003 * attempt)
        if is_connected(G):
            return G
    raise AssertionError("unreachable")


def nonadjacent_pairs(G: Graph):
    return [
        Terminals(s, t)
        for s, t in itertools.combinations(range(G.n), 2)
        if not G.has_edge(s, t)
    ]


# graphs per n for the 200-graph acceptance corpus, cycling p per graph
_CORPUS_SIZES = {5: 40, 6: 40, 7: 36, 8: 32, 9: 28, 10: 24}
_CORPUS_PS = (0.2, 0.35, 0.5)


def build_corpus() -> list[Graph]:
    graphs = []
    seed = 0
    for n, count in _CORPUS_SIZES.items():
        for i in range(count):
            graphs.append(random_connected_graph(n, _CORPUS_PS[i % 3], seed))
            seed += 1
    assert len(graphs) == 200
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


class PairCache:
    """Brute-force families, computed once per (graph, terminal pair)."""

    def __init__(self):
        self._minimal = {}
        self._minimum = {}
        self._important = {}

    def minimal(self, G, term):
        key = (id(G), term)
        if key not in self._minimal:
            self._minimal[key] = brute_minimal_separators(G, term)
        return self._minimal[key]

    def minimum(self, G, term):
        key = (id(G), term)
        if key not in self._minimum:
            self._minimum[key] = brute_minimum_separators(G, term)
        return self._minimum[key]

    def important(self, G, term, k):
        # importance of a separator does not depend on k; filter by size
        key = (id(G), term)
        if key not in self._important:
            self._important[key] = brute_important(G, term, G.n)
        return {X for X in self._important[key] if len(X) <= k}


@pytest.fixture(scope="session")
def cache():
    return PairCache()
