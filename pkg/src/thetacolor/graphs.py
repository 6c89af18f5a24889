"""Simple-graph core: immutable graphs, family builders, and structure tests.

Vertices are the integers 0..n-1.  Edges are unordered pairs stored as
(a, b) with a < b.  All operations are pure functions on immutable data,
so everything here is safe to call concurrently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Edge = tuple[int, int]


def _norm_edge(a: int, b: int) -> Edge:
    if a == b:
        raise ValueError(f"loop edge ({a}, {b}) is not allowed in a simple graph")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph with stable vertex indices."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph must be nonempty")
        for a, b in self.edges:
            if not (0 <= a < b < self.n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        return cls(n, frozenset(_norm_edge(a, b) for a, b in pairs))

    def edge_list(self) -> list[Edge]:
        """Edges sorted lexicographically; the canonical external order."""
        return sorted(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edge_list():
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def is_connected(self) -> bool:
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[a, b] for a, b in self.edge_list()]}

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        return cls.from_edges(int(obj["n"]), [(int(a), int(b)) for a, b in obj["edges"]])


# ---------------------------------------------------------------------------
# family builders


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with part {0..a-1} against part {a..a+b-1}."""
    if a < 1 or b < 1:
        raise ValueError("complete bipartite needs both parts nonempty")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


_FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "complete_bipartite": (complete_bipartite, 2),
}


def build_family(kind: str, *params: int) -> Graph:
    """Build a standard family graph: path, cycle, complete, complete_bipartite."""
    try:
        builder, arity = _FAMILIES[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; expected one of {sorted(_FAMILIES)}") from None
    if len(params) != arity:
        raise ValueError(f"family {kind!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


# ---------------------------------------------------------------------------
# theta graphs


@dataclass(frozen=True)
class ThetaSpec:
    """Lengths (edge counts) of three internally disjoint end-to-end paths.

    The first length is the minimum and the other two are at least 2, so at
    most one path is a single edge; two single-edge paths would be parallel
    edges and the graph would not be simple.
    """

    l1: int
    l2: int
    l3: int

    def __post_init__(self) -> None:
        lengths = (self.l1, self.l2, self.l3)
        if any(l < 1 for l in lengths):
            raise ValueError("path lengths must be positive")
        if self.l1 != min(lengths):
            raise ValueError("first length must be the minimum of the three")
        if self.l2 < 2 or self.l3 < 2:
            raise ValueError("second and third lengths must be at least 2")

    @property
    def lengths(self) -> tuple[int, int, int]:
        return (self.l1, self.l2, self.l3)

    @property
    def vertex_count(self) -> int:
        return self.l1 + self.l2 + self.l3 - 1

    @property
    def edge_count(self) -> int:
        return self.l1 + self.l2 + self.l3

    def path_vertices(self) -> tuple[tuple[int, ...], ...]:
        """Vertex sequences of the three paths, each running from 0 to 1.

        Vertex 0 and 1 are the end vertices; internal vertices are numbered
        2, 3, ... path by path, position by position, so tags are implicit
        in the numbering.
        """
        seqs = []
        nxt = 2
        for length in self.lengths:
            inner = tuple(range(nxt, nxt + length - 1))
            nxt += length - 1
            seqs.append((0,) + inner + (1,))
        return tuple(seqs)


def build_theta(spec: ThetaSpec) -> Graph:
    """The theta graph of a spec; end vertices 0 and 1, internals path by path."""
    edges: list[Edge] = []
    for seq in spec.path_vertices():
        edges.extend(zip(seq, seq[1:]))
    return Graph.from_edges(spec.vertex_count, edges)


def normalize_theta(a: int, b: int, c: int) -> tuple[ThetaSpec, bool]:
    """Sort three lengths ascending into a valid spec; flag whether reordered."""
    ordered = tuple(sorted((a, b, c)))
    return ThetaSpec(*ordered), ordered != (a, b, c)


def recognize_theta(g: Graph) -> ThetaSpec | None:
    """Recover the (sorted) path lengths if g is a theta graph, else None."""
    if len(g.edges) != g.n + 1 or not g.is_connected():
        return None
    degs = g.degrees()
    branch = [v for v in range(g.n) if degs[v] == 3]
    if len(branch) != 2 or any(degs[v] != 2 for v in range(g.n) if v not in branch):
        return None
    u, v = branch
    adj = g.adjacency()
    lengths = []
    for start in adj[u]:
        prev, cur, steps = u, start, 1
        while cur != v:
            if degs[cur] != 2:
                return None
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur, steps = cur, nxt, steps + 1
            if steps > g.n + 1:
                return None
        lengths.append(steps)
    if len(lengths) != 3 or sum(lengths) != g.n + 1:
        return None
    a, b, c = sorted(lengths)
    try:
        return ThetaSpec(a, b, c)
    except ValueError:
        return None


# ---------------------------------------------------------------------------
# core peeling and classification


def core_of(g: Graph) -> Graph:
    """Iteratively delete degree-1 vertices (one at a time); a tree ends at K_1.

    Surviving vertices are relabeled compactly in increasing original order.
    """
    if not g.is_connected():
        raise ValueError("core is defined for connected graphs")
    alive = set(range(g.n))
    edges = set(g.edges)
    while True:
        deg = {v: 0 for v in alive}
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        leaves = [v for v in alive if deg[v] == 1]
        if not leaves:
            break
        leaf = min(leaves)
        alive.remove(leaf)
        edges = {e for e in edges if leaf not in e}
    relabel = {v: i for i, v in enumerate(sorted(alive))}
    return Graph.from_edges(len(alive), ((relabel[a], relabel[b]) for a, b in edges))


def is_isomorphic(g: Graph, h: Graph, *, max_vertices: int = 12) -> bool:
    """Brute-force isomorphism with degree pruning; only for small graphs."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if g.n > max_vertices:
        raise ValueError(f"brute-force isomorphism limited to {max_vertices} vertices")
    g_deg = g.degrees()
    h_deg = h.degrees()
    g_adj = [set(nb) for nb in g.adjacency()]
    h_adj = [set(nb) for nb in h.adjacency()]
    # map high-degree vertices first so mismatches surface early
    order = sorted(range(g.n), key=lambda v: (-g_deg[v], v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        for w in range(h.n):
            if w in used or h_deg[w] != g_deg[v]:
                continue
            ok = True
            for prev in mapping:
                if (prev in g_adj[v]) != (mapping[prev] in h_adj[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(idx + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    return extend(0)


_THETA_222 = build_theta(ThetaSpec(2, 2, 2))


def classify_core(g: Graph) -> tuple[str, int | None]:
    """Classify the core of g as ("K1", None), ("even_cycle", length),
    ("theta_2_2_2", None), or ("other", None)."""
    core = core_of(g)
    if core.n == 1:
        return ("K1", None)
    if all(d == 2 for d in core.degrees()):
        # connected 2-regular graph is a single cycle
        if core.n % 2 == 0 and core.n >= 4:
            return ("even_cycle", core.n)
        return ("other", None)
    if core.n == _THETA_222.n and is_isomorphic(core, _THETA_222):
        return ("theta_2_2_2", None)
    return ("other", None)
