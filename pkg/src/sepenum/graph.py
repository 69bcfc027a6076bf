"""Graph representation and the separator-oriented graph transformations.

Vertices are dense integer ids 0..n-1; every vertex carries a distinct
string label, and all user-facing output is in terms of labels.  Graphs
are simple (no self-loops, no parallel edges) and undirected.  Instances
are treated as immutable: every transformation returns a new Graph.
"""

from typing import Iterable, NamedTuple

from .errors import (
    AlreadySeparated,
    MalformedLine,
    NotAnEdge,
    NotANeighbor,
    NotAPath,
    NotASeparator,
    NotChordless,
    SelfLoop,
    TerminalInSet,
    TerminalsAdjacent,
    UnknownLabel,
    VertexNotOnPath,
    VertexRemoved,
)

# A separator is a canonical (strictly increasing, duplicate-free) tuple of
# vertex ids, always disjoint from the terminals of the operation at hand.
Separator = tuple[int, ...]


class Terminals(NamedTuple):
    s: int
    t: int


class Graph:
    """Undirected simple graph with adjacency sets and a label table."""

    __slots__ = ("n", "labels", "adj", "_masks", "_label_ids")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(labels)
        if len(labels) != n or len(set(labels)) != n:
            raise ValueError("labels must be distinct and one per vertex")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.labels = labels
        self.adj = tuple(frozenset(a) for a in adj)
        self._masks = None
        self._label_ids = None

    @classmethod
    def _from_adj(cls, labels, adj) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(labels)
        g.labels = tuple(labels)
        g.adj = tuple(frozenset(a) for a in adj)
        g._masks = None
        g._label_ids = None
        return g

    @property
    def masks(self) -> tuple[int, ...]:
        """Adjacency encoded as one bitmask per vertex (lazy, cached)."""
        if self._masks is None:
            self._masks = tuple(_mask(a) for a in self.adj)
        return self._masks

    def vertex(self, label: str) -> int:
        if self._label_ids is None:
            self._label_ids = {lab: i for i, lab in enumerate(self.labels)}
        try:
            return self._label_ids[label]
        except KeyError:
            raise UnknownLabel(f"no vertex labeled {label!r}") from None

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with the given edges added (self-loops rejected)."""
        adj = [set(a) for a in self.adj]
        for u, v in extra:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return Graph._from_adj(self.labels, adj)

    def __eq__(self, other):
        if isinstance(other, Graph):
            return (
                self.n == other.n
                and self.labels == other.labels
                and self.adj == other.adj
            )
        return NotImplemented

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


# ---------------------------------------------------------------------------
# bitmask primitives (shared with the flow machinery)

def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reach_mask(masks, start_mask: int, blocked: int) -> int:
    """Vertices reachable from start_mask in the graph minus blocked."""
    comp = start_mask & ~blocked
    frontier = comp
    while frontier:
        grown = 0
        for v in _bits(frontier):
            grown |= masks[v]
        frontier = grown & ~blocked & ~comp
        comp |= frontier
    return comp


def _nbr_mask(masks, comp: int) -> int:
    """N(comp): union of neighborhoods of comp, minus comp itself."""
    m = 0
    for v in _bits(comp):
        m |= masks[v]
    return m & ~comp


# ---------------------------------------------------------------------------
# parsing

def parse_graph(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    Each non-blank line holds exactly two whitespace-separated label
    tokens; lines starting with '#' are comments.  Labels are assigned
    dense ids in order of first appearance.  Repeated edges are silently
    deduplicated (set semantics); self-loops are an error.
    """
    labels: list[str] = []
    ids: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLine(f"line {lineno}: expected 2 tokens, got {len(tokens)}")
        u_lab, v_lab = tokens
        if u_lab == v_lab:
            raise SelfLoop(f"line {lineno}: self-loop at {u_lab!r}")
        for lab in (u_lab, v_lab):
            if lab not in ids:
                ids[lab] = len(labels)
                labels.append(lab)
        edges.append((ids[u_lab], ids[v_lab]))
    return Graph(len(labels), edges, labels)


# ---------------------------------------------------------------------------
# separator predicates and components

def canonical(vertices: Iterable[int]) -> Separator:
    return tuple(sorted(set(vertices)))


def _check_avoids_terminals(term: Terminals, members: Separator) -> None:
    if term.s in members or term.t in members:
        raise TerminalInSet(f"set {members} contains a terminal of {term}")


def component_of(G: Graph, removed: Iterable[int], v: int) -> frozenset:
    """Connected component of v in G minus the removed vertices."""
    removed = canonical(removed)
    if v in removed:
        raise VertexRemoved(f"vertex {v} is removed")
    comp = _reach_mask(G.masks, 1 << v, _mask(removed))
    return frozenset(_bits(comp))


def is_separator(G: Graph, term: Terminals, X: Iterable[int]) -> bool:
    """True iff t is unreachable from s in G minus X."""
    members = canonical(X)
    _check_avoids_terminals(term, members)
    comp_s = _reach_mask(G.masks, 1 << term.s, _mask(members))
    return not comp_s & (1 << term.t)


def is_minimal_separator(G: Graph, term: Terminals, X: Iterable[int]) -> bool:
    """True iff X separates and both terminal components are full.

    A separator is minimal exactly when the components of s and of t in
    G minus X each have all of X as their neighborhood.
    """
    members = canonical(X)
    _check_avoids_terminals(term, members)
    masks = G.masks
    xmask = _mask(members)
    comp_s = _reach_mask(masks, 1 << term.s, xmask)
    if comp_s & (1 << term.t):
        return False
    if _nbr_mask(masks, comp_s) != xmask:
        return False
    comp_t = _reach_mask(masks, 1 << term.t, xmask)
    return _nbr_mask(masks, comp_t) == xmask


# ---------------------------------------------------------------------------
# graph transformations

def saturate(G: Graph, U: Iterable[int]) -> Graph:
    """Smallest supergraph in which every u in U has a clique as its
    closed neighborhood.

    Saturating one vertex can enlarge another's neighborhood, so the
    per-vertex cliques are re-applied until nothing changes.  The least
    fixpoint is unique, hence independent of any ordering of U.  The
    resulting graph has exactly the minimal separators of G that avoid U.
    """
    members = sorted(set(U))
    adj = [set(a) for a in G.adj]
    changed = True
    while changed:
        changed = False
        for u in members:
            closed = adj[u] | {u}
            for x in closed:
                grow = closed - {x} - adj[x]
                if grow:
                    adj[x] |= grow
                    changed = True
    return Graph._from_adj(G.labels, adj)


def add_star(G: Graph, s: int, S: Iterable[int]) -> Graph:
    """Add all edges from s to the members of S."""
    members = canonical(S)
    if s in members:
        raise ValueError(f"vertex {s} cannot be joined to itself")
    return G.with_edges((s, v) for v in members)


def absorb(G: Graph, s: int, v: int) -> Graph:
    """Join s to every neighbor of v (v must already neighbor s).

    v itself is retained.  Afterwards no minimal separator between s and
    any other vertex can contain v.
    """
    if v not in G.adj[s]:
        raise NotANeighbor(f"vertex {v} is not adjacent to {s}")
    return G.with_edges((s, y) for y in G.adj[v] if y != s)


def contract_into(G: Graph, e: tuple[int, int], target: int) -> Graph:
    """Contract edge e onto its endpoint target, removing the other end.

    The target inherits the union of both endpoints' neighborhoods;
    simple-graph invariants are restored (ids are re-densified, labels
    of surviving vertices are preserved).
    """
    u, v = e
    if not G.has_edge(u, v):
        raise NotAnEdge(f"({u},{v}) is not an edge")
    if target not in (u, v):
        raise ValueError(f"{target} is not an endpoint of ({u},{v})")
    gone = v if target == u else u
    remap = {}
    labels = []
    for w in range(G.n):
        if w != gone:
            remap[w] = len(labels)
            labels.append(G.labels[w])
    adj = [set() for _ in labels]
    for a, b in G.edges():
        a2 = target if a == gone else a
        b2 = target if b == gone else b
        if a2 == b2:
            continue
        adj[remap[a2]].add(remap[b2])
        adj[remap[b2]].add(remap[a2])
    return Graph._from_adj(labels, adj)


# ---------------------------------------------------------------------------
# separator constructions

def _require_separable(G: Graph, term: Terminals) -> None:
    if G.has_edge(term.s, term.t):
        raise TerminalsAdjacent(f"terminals {term.s},{term.t} are adjacent")
    if not _reach_mask(G.masks, 1 << term.s, 0) & (1 << term.t):
        raise AlreadySeparated(f"terminals {term.s},{term.t} already separated")


def close_separator(G: Graph, term: Terminals) -> Separator:
    """The unique minimal s,t-separator contained in N(s).

    Computed as the neighborhood of t's component after removing N(s).
    """
    _require_separable(G, term)
    masks = G.masks
    ns = masks[term.s]
    comp_t = _reach_mask(masks, 1 << term.t, ns)
    return canonical(_bits(_nbr_mask(masks, comp_t)))


def minimalize(G: Graph, term: Terminals, X: Iterable[int]) -> Separator:
    """Extract a minimal separator contained in X.

    Deterministic two-step rule: shrink to the boundary of s's component,
    then to the boundary of t's component of what remains.
    """
    members = canonical(X)
    if not is_separator(G, term, members):
        raise NotASeparator(f"{members} does not separate {term.s} from {term.t}")
    masks = G.masks
    comp_s = _reach_mask(masks, 1 << term.s, _mask(members))
    side_s = _nbr_mask(masks, comp_s)
    comp_t = _reach_mask(masks, 1 << term.t, side_s)
    return canonical(_bits(_nbr_mask(masks, comp_t)))


def _validate_chordless_path(G: Graph, term: Terminals, path) -> None:
    if len(path) < 2 or path[0] != term.s or path[-1] != term.t:
        raise NotAPath("path must start at s and end at t")
    if len(set(path)) != len(path):
        raise NotAPath("path vertices must be distinct")
    for a, b in zip(path, path[1:]):
        if not G.has_edge(a, b):
            raise NotAPath(f"({a},{b}) is not an edge")
    for i in range(len(path)):
        for j in range(i + 2, len(path)):
            if G.has_edge(path[i], path[j]):
                raise NotChordless(f"chord ({path[i]},{path[j]})")


def chordless_path_to_separator(
    G: Graph, term: Terminals, path: list[int], v: int
) -> Separator:
    """Turn a chordless s,t-path through v into a minimal separator containing v.

    The prefix of the path is contracted into s and the suffix into t;
    the close separator of the contracted graph then necessarily contains
    v and is a minimal s,t-separator of the original graph.  Returned ids
    refer to the original graph (surviving labels are mapped back).
    """
    _validate_chordless_path(G, term, path)
    if v == term.s or v == term.t:
        raise TerminalInSet(f"vertex {v} is a terminal")
    if v not in path:
        raise VertexNotOnPath(f"vertex {v} not on path")
    idx = path.index(v)
    s_lab, t_lab, v_lab = G.labels[term.s], G.labels[term.t], G.labels[v]
    H = G
    for a in path[1:idx]:
        lab = G.labels[a]
        H = contract_into(H, (H.vertex(s_lab), H.vertex(lab)), H.vertex(s_lab))
    for b in reversed(path[idx + 1 : -1]):
        lab = G.labels[b]
        H = contract_into(H, (H.vertex(lab), H.vertex(t_lab)), H.vertex(t_lab))
    sep = close_separator(H, Terminals(H.vertex(s_lab), H.vertex(t_lab)))
    result = canonical(G.vertex(H.labels[w]) for w in sep)
    assert G.vertex(v_lab) in result
    return result
