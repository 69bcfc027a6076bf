"""Brute-force reference implementations and shared test fixtures.

Everything here is intentionally naive: exhaustive subset or path
enumeration guarded by hard size limits.  The oracles share no code with
the algorithms they validate beyond the Graph type and the definitional
minimality check.
"""

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import TooLarge
from .graph import (
    Graph,
    Separator,
    Terminals,
    _bits,
    _mask,
    _nbr_mask,
    _reach_mask,
    canonical,
    parse_graph,
)


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    terminals: Terminals


def _fixture(name: str, text: str) -> Fixture:
    g = parse_graph(text)
    return Fixture(name, g, Terminals(g.vertex("s"), g.vertex("t")))


P4 = _fixture("P4", "s a\na b\nb t")
DIAMOND = _fixture("DIAMOND", "s a\ns b\na t\nb t")
THETA = _fixture("THETA", "s a\na t\ns b\nb c\nc t")

FIXTURES = {f.name: f for f in (P4, DIAMOND, THETA)}


def _guard(G: Graph, limit: int) -> None:
    if G.n > limit:
        raise TooLarge(f"n={G.n} exceeds oracle guard {limit}")


def brute_minimal_separators(G: Graph, term: Terminals) -> set[Separator]:
    """All minimal s,t-separators, by exhaustive subset enumeration."""
    _guard(G, 16)
    masks = G.masks
    sbit, tbit = 1 << term.s, 1 << term.t
    free = [v for v in range(G.n) if v != term.s and v != term.t]
    found = set()
    for r in range(len(free) + 1):
        for combo in combinations(free, r):
            xmask = _mask(combo)
            comp_s = _reach_mask(masks, sbit, xmask)
            if comp_s & tbit:
                continue
            if _nbr_mask(masks, comp_s) != xmask:
                continue
            comp_t = _reach_mask(masks, tbit, xmask)
            if _nbr_mask(masks, comp_t) == xmask:
                found.add(combo)
    return found


def brute_important(G: Graph, term: Terminals, k: int) -> set[Separator]:
    """Important s,t-separators of size at most k, straight from the definition.

    S is important when every minimal separator with a strictly smaller
    s-side component is strictly larger than S.
    """
    _guard(G, 14)
    minimal = sorted(brute_minimal_separators(G, term))
    masks = G.masks
    sbit = 1 << term.s
    comp = {X: _reach_mask(masks, sbit, _mask(X)) for X in minimal}
    important = set()
    for X in minimal:
        if len(X) > k:
            continue
        cx = comp[X]
        dominated = any(
            len(Y) <= len(X) and comp[Y] != cx and comp[Y] & ~cx == 0
            for Y in minimal
        )
        if not dominated:
            important.add(X)
    return important


def brute_minimum_separators(G: Graph, term: Terminals) -> set[Separator]:
    """All s,t-separators of minimum cardinality.

    Works from the raw separation predicate only, ascending by size; every
    member is automatically a minimal separator.
    """
    _guard(G, 16)
    masks = G.masks
    sbit, tbit = 1 << term.s, 1 << term.t
    free = [v for v in range(G.n) if v != term.s and v != term.t]
    for r in range(len(free) + 1):
        found = {
            combo
            for combo in combinations(free, r)
            if not _reach_mask(masks, sbit, _mask(combo)) & tbit
        }
        if found:
            return found
    return set()


def brute_chordless_paths_through(
    G: Graph, term: Terminals, v: int, max_n: int = 14
) -> list[list[int]]:
    """All chordless s,t-paths through v, in lexicographic DFS order."""
    _guard(G, max_n)
    masks = G.masks
    paths: list[list[int]] = []
    target = term.t

    def extend(path: list[int], on_path: int, chord_blocked: int):
        last = path[-1]
        if last == target:
            if v in path:
                paths.append(list(path))
            return
        # a chordless extension may not touch any vertex before `last`
        for w in _bits(masks[last] & ~on_path & ~chord_blocked):
            path.append(w)
            extend(path, on_path | (1 << w), chord_blocked | masks[last] & ~(1 << w))
            path.pop()

    extend([term.s], 1 << term.s, 0)
    return paths


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Erdos-Renyi simple graph, reproducible for a given seed."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge_probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_probability
    ]
    return Graph(n, edges)
