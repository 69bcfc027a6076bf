"""Vertex-capacity minimum cuts via vertex splitting and augmenting paths.

Each vertex v becomes a node pair v_in -> v_out joined by a unit-capacity
arc (infinite for source-side vertices and the sink); each undirected edge
contributes two infinite arcs u_out -> v_in and v_out -> u_in.  The flow
value then equals the maximum number of internally vertex-disjoint paths,
and the two canonical minimum cuts fall out of residual reachability.

Capacities are small ints; "infinite" is n + 1, which exceeds any vertex
cut.  A module-level counter tracks max-flow invocations so that delay
bounds can be checked externally.
"""

from collections import deque
from dataclasses import dataclass, field

from .errors import AlreadySeparated, SourceSinkAdjacent, TerminalsAdjacent
from .graph import (
    Graph,
    Separator,
    Terminals,
    _bits,
    _check_avoids_terminals,
    _mask,
    _nbr_mask,
    canonical,
    saturate,
)

_flow_calls = 0


def flow_call_count() -> int:
    """Total max-flow computations performed so far in this process."""
    return _flow_calls


class FlowNetwork:
    """Residual network for one (source-set, sink) cut computation.

    Scratch structure: build, run max_flow once, then query cuts/paths.
    Vertices in `removed` are absent from the network entirely.
    """

    def __init__(self, masks, n: int, source_mask: int, sink: int, removed: int = 0):
        self.n = n
        self.source_mask = source_mask
        self.sink = sink
        self.removed = removed
        self.inf = n + 1
        # arc arrays; arc i and i^1 are a forward/reverse pair
        self.to: list[int] = []
        self.cap: list[int] = []
        self.head = [-1] * (2 * n)  # per-node first arc index
        self.next: list[int] = []
        alive = ~removed
        for v in range(n):
            if not alive & (1 << v):
                continue
            c = self.inf if (source_mask >> v) & 1 or v == sink else 1
            self._add_arc(2 * v, 2 * v + 1, c)
            for w in _bits(masks[v] & alive):
                self._add_arc(2 * v + 1, 2 * w, self.inf)
        self.value = 0
        self._ran = False

    def _add_arc(self, u: int, w: int, c: int) -> None:
        for node, capacity in ((u, c), (w, 0)):
            self.to.append(w if node == u else u)
            self.cap.append(capacity)
            self.next.append(self.head[node])
            self.head[node] = len(self.to) - 1

    def _source_nodes(self):
        return [2 * v + 1 for v in _bits(self.source_mask & ~self.removed)]

    def max_flow(self) -> int:
        """Augment along shortest residual paths until the sink is cut off."""
        global _flow_calls
        assert not self._ran
        self._ran = True
        _flow_calls += 1
        target = 2 * self.sink
        while True:
            parent_arc = [-1] * (2 * self.n)
            seen = [False] * (2 * self.n)
            queue = deque()
            for node in self._source_nodes():
                seen[node] = True
                queue.append(node)
            while queue:
                node = queue.popleft()
                if node == target:
                    break
                a = self.head[node]
                while a != -1:
                    w = self.to[a]
                    if self.cap[a] > 0 and not seen[w]:
                        seen[w] = True
                        parent_arc[w] = a
                        queue.append(w)
                    a = self.next[a]
            if not seen[target]:
                return self.value
            node = target
            while parent_arc[node] != -1:
                a = parent_arc[node]
                self.cap[a] -= 1
                self.cap[a ^ 1] += 1
                node = self.to[a ^ 1]
            self.value += 1

    def _forward_reachable(self) -> list[bool]:
        seen = [False] * (2 * self.n)
        queue = deque()
        for node in self._source_nodes():
            seen[node] = True
            queue.append(node)
        while queue:
            node = queue.popleft()
            a = self.head[node]
            while a != -1:
                w = self.to[a]
                if self.cap[a] > 0 and not seen[w]:
                    seen[w] = True
                    queue.append(w)
                a = self.next[a]
        return seen

    def _backward_reachable(self) -> list[bool]:
        # nodes that can still reach the sink in the residual network
        seen = [False] * (2 * self.n)
        target = 2 * self.sink
        seen[target] = True
        queue = deque([target])
        while queue:
            node = queue.popleft()
            a = self.head[node]
            while a != -1:
                # arc a leaves `node`; its pair a^1 enters it, usable if a^1 has capacity
                w = self.to[a]
                if self.cap[a ^ 1] > 0 and not seen[w]:
                    seen[w] = True
                    queue.append(w)
                a = self.next[a]
        return seen

    def closest_cut(self) -> Separator:
        """Minimum cut with inclusion-minimal source side."""
        seen = self._forward_reachable()
        cut = [v for v in range(self.n) if seen[2 * v] and not seen[2 * v + 1]]
        assert len(cut) == self.value
        return tuple(cut)

    def furthest_cut(self) -> Separator:
        """Minimum cut with inclusion-maximal source side."""
        seen = self._backward_reachable()
        cut = [v for v in range(self.n) if seen[2 * v + 1] and not seen[2 * v]]
        assert len(cut) == self.value
        return tuple(cut)

    def disjoint_paths(self) -> list[list[int]]:
        """Decompose the flow into internally vertex-disjoint paths."""
        flow: dict[tuple[int, int], int] = {}
        for a in range(0, len(self.to), 2):
            if self.cap[a ^ 1] > 0:  # units pushed on the forward arc
                u, w = self.to[a ^ 1], self.to[a]
                if u % 2 == 1 and w % 2 == 0 and u // 2 != w // 2:
                    flow[(u // 2, w // 2)] = flow.get((u // 2, w // 2), 0) + self.cap[a ^ 1]
        for (u, w) in list(flow):
            back = flow.get((w, u), 0)
            if back and flow.get((u, w), 0):
                d = min(back, flow[(u, w)])
                flow[(u, w)] -= d
                flow[(w, u)] -= d
        paths = []
        for v in _bits(self.source_mask):
            for w in range(self.n):
                while flow.get((v, w), 0) > 0:
                    flow[(v, w)] -= 1
                    path = [v, w]
                    while path[-1] != self.sink:
                        x = path[-1]
                        nxt = next(y for y in range(self.n) if flow.get((x, y), 0) > 0)
                        flow[(x, nxt)] -= 1
                        path.append(nxt)
                    paths.append(path)
        assert len(paths) == self.value
        return paths


@dataclass
class CutResult:
    kappa: int
    separator: Separator
    disjoint_paths: list[list[int]] = field(default_factory=list)


def _min_cut(masks, n, source_mask, sink, removed=0) -> FlowNetwork:
    net = FlowNetwork(masks, n, source_mask, sink, removed)
    net.max_flow()
    return net


def kappa(G: Graph, term: Terminals) -> CutResult:
    """Connectivity between the terminals plus one canonical witness.

    The separator is the closest-to-s minimum cut (boundary of the
    residual-reachable set), fixed for determinism; the paths are a
    maximum family of internally vertex-disjoint s,t-paths.
    """
    if G.has_edge(term.s, term.t):
        raise TerminalsAdjacent(f"terminals {term.s},{term.t} are adjacent")
    net = _min_cut(G.masks, G.n, 1 << term.s, term.t)
    if net.value == 0:
        raise AlreadySeparated(f"terminals {term.s},{term.t} already separated")
    return CutResult(net.value, net.closest_cut(), net.disjoint_paths())


def min_separator_between(G: Graph, A, t: int, side: str) -> Separator:
    """Minimum vertex separator between the set A and the vertex t.

    side="closest" gives the cut with inclusion-minimal A-side component,
    side="furthest" the inclusion-maximal one.
    """
    if side not in ("closest", "furthest"):
        raise ValueError(f"side must be 'closest' or 'furthest', got {side!r}")
    amask = _mask(A)
    if not amask:
        raise ValueError("source set A must be nonempty")
    if (amask | _nbr_mask(G.masks, amask)) & (1 << t):
        raise SourceSinkAdjacent(f"vertex {t} is in the closed neighborhood of A")
    net = _min_cut(G.masks, G.n, amask, t)
    if net.value == 0:
        raise AlreadySeparated(f"{t} unreachable from source set")
    return net.closest_cut() if side == "closest" else net.furthest_cut()


def min_separator_containing(G: Graph, term: Terminals, I) -> Separator | None:
    """A minimum s,t-separator containing I, or None if there is none.

    There is one exactly when removing I lowers the connectivity by |I|;
    the witness is I plus the closest-to-s minimum cut of the remainder.
    """
    members = canonical(I)
    _check_avoids_terminals(term, members)
    if G.has_edge(term.s, term.t):
        raise TerminalsAdjacent(f"terminals {term.s},{term.t} are adjacent")
    sbit = 1 << term.s
    k_full = _min_cut(G.masks, G.n, sbit, term.t).value
    net = _min_cut(G.masks, G.n, sbit, term.t, removed=_mask(members))
    if net.value != k_full - len(members):
        return None
    return canonical(members + net.closest_cut())


def min_separator_excluding(G: Graph, term: Terminals, U) -> Separator | None:
    """Smallest minimal s,t-separator avoiding U, or None if none exists.

    Saturating the closed neighborhood of every u in U leaves exactly the
    minimal separators disjoint from U, so the answer is the canonical
    minimum cut of the saturated graph.
    """
    members = canonical(U)
    _check_avoids_terminals(term, members)
    H = saturate(G, members)
    if H.has_edge(term.s, term.t):
        return None
    net = _min_cut(H.masks, H.n, 1 << term.s, term.t)
    if net.value == 0:
        return None
    return net.closest_cut()
