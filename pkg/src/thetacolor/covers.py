"""Edge-matching covers and exact independent-transversal counts.

A cover gives every vertex m labels and every edge a partial injective
matching between the endpoint label sets; a proper coloring is one label
per vertex avoiding all matched pairs.  The exact minimizer enumerates
full covers only (dropping matched pairs can only enlarge the solution
set) and gauge-fixes a spanning tree to identity matchings, which is a
count-preserving relabeling; both reductions have exhaustive oracles here
for small instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .config import default_perm_budget
from .errors import BudgetExceededError
from .graphs import Edge, Graph, ThetaSpec
from .listcolor import ListAssignment


@dataclass(frozen=True)
class Cover:
    """m labels per vertex plus one partial matching per edge.

    Matchings are stored against edges (a, b) with a < b as sorted pairs
    (label at a, label at b); a missing edge entry means the empty matching.
    """

    m: int
    n: int
    matchings: tuple[tuple[Edge, tuple[tuple[int, int], ...]], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("fold m must be positive")
        seen = set()
        for (a, b), pairs in self.matchings:
            if not (0 <= a < b < self.n):
                raise ValueError(f"edge ({a}, {b}) out of range")
            if (a, b) in seen:
                raise ValueError(f"duplicate matching for edge ({a}, {b})")
            seen.add((a, b))
            left = [x for x, _ in pairs]
            right = [y for _, y in pairs]
            if len(set(left)) != len(left) or len(set(right)) != len(right):
                raise ValueError(f"matching on edge ({a}, {b}) is not injective")
            for x, y in pairs:
                if not (0 <= x < self.m and 0 <= y < self.m):
                    raise ValueError(f"label out of range on edge ({a}, {b})")

    @classmethod
    def from_dict(cls, m: int, n: int, matchings: dict) -> "Cover":
        items = tuple(
            (edge, tuple(sorted(tuple(p) for p in pairs)))
            for edge, pairs in sorted(matchings.items())
        )
        return cls(m, n, items)

    def matching_dict(self) -> dict[Edge, tuple[tuple[int, int], ...]]:
        return dict(self.matchings)

    def is_full(self, g: Graph) -> bool:
        md = self.matching_dict()
        return all(len(md.get(e, ())) == self.m for e in g.edges)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "edges": [
                {"edge": [a, b], "pairs": [list(p) for p in pairs]}
                for (a, b), pairs in self.matchings
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Cover":
        if "tree_edges" in obj:
            return gauge_cover_from_json(obj)
        matchings = {
            (int(e["edge"][0]), int(e["edge"][1])): [(int(x), int(y)) for x, y in e["pairs"]]
            for e in obj["edges"]
        }
        return cls.from_dict(int(obj["m"]), int(obj["n"]), matchings)


def cover_from_list_assignment(g: Graph, assignment: ListAssignment) -> Cover:
    """The cover induced by a list assignment: labels are list positions and
    two endpoint labels are matched exactly when their colors are equal.
    Its proper colorings are in bijection with the proper list colorings."""
    if len(assignment.lists) != g.n:
        raise ValueError("assignment does not cover every vertex")
    matchings = {}
    for a, b in g.edge_list():
        la, lb = assignment.lists[a], assignment.lists[b]
        pos_b = {c: j for j, c in enumerate(lb)}
        matchings[(a, b)] = [(i, pos_b[c]) for i, c in enumerate(la) if c in pos_b]
    return Cover.from_dict(assignment.m, g.n, matchings)


def count_cover_colorings(g: Graph, cover: Cover, fixed: dict[int, int] | None = None) -> int:
    """Exact number of proper colorings (independent transversals) of a cover,
    optionally with some vertices pinned to a given label."""
    if cover.n != g.n:
        raise ValueError("cover does not match the graph's vertex count")
    md = cover.matching_dict()
    if any(e not in g.edges for e in md):
        raise ValueError("cover carries a matching on a non-edge")
    forbidden = {e: set(pairs) for e, pairs in md.items()}
    adj = g.adjacency()
    back = [tuple(w for w in adj[v] if w < v) for v in range(g.n)]
    labels = [-1] * g.n
    choices = [
        (fixed[v],) if fixed is not None and v in fixed else tuple(range(cover.m))
        for v in range(g.n)
    ]

    def conflicts(v: int, lab: int) -> bool:
        for w in back[v]:
            pair = (labels[w], lab) if w < v else (lab, labels[w])
            if pair in forbidden.get((min(v, w), max(v, w)), ()):
                return True
        return False

    def rec(v: int) -> int:
        if v == g.n:
            return 1
        total = 0
        for lab in choices[v]:
            if not conflicts(v, lab):
                labels[v] = lab
                total += rec(v + 1)
        labels[v] = -1
        return total

    return rec(0)


# ---------------------------------------------------------------------------
# path cover counts


def path_cover_count(k: int, m: int, connected: bool) -> int:
    """Colorings of a k-edge path under a full m-fold cover that contain one
    fixed label at each end: ((m-1)^k - (-1)^k)/m, plus (-1)^k when the two
    fixed labels are joined by a path inside the cover."""
    if k < 1:
        raise ValueError("path needs at least one edge")
    if m < 2:
        raise ValueError("needs m >= 2")
    sign = (-1) ** k
    q, r = divmod((m - 1) ** k - sign, m)
    if r:
        raise RuntimeError(f"path cover count not divisible by m for k={k}, m={m}")
    return q + sign if connected else q


def full_path_cover(perms: Sequence[Sequence[int]], m: int) -> Cover:
    """Full cover of the path 0-1-...-k with the given edge permutations."""
    matchings = {
        (i, i + 1): [(x, perm[x]) for x in range(m)] for i, perm in enumerate(perms)
    }
    return Cover.from_dict(m, len(perms) + 1, matchings)


def path_cover_connects(perms: Sequence[Sequence[int]], start_label: int, end_label: int) -> bool:
    """Whether the cover graph joins the first endpoint's start_label to the
    last endpoint's end_label (compose the matchings along the path)."""
    x = start_label
    for perm in perms:
        x = perm[x]
    return x == end_label


# ---------------------------------------------------------------------------
# exact minimum over m-fold covers


class DpColorResult(NamedTuple):
    value: int
    witness: Cover
    tree_edges: tuple[Edge, ...]
    free_edges: tuple[tuple[Edge, tuple[int, ...]], ...]


def _bfs_tree_edges(g: Graph) -> tuple[Edge, ...]:
    adj = g.adjacency()
    seen = {0}
    queue = [0]
    tree = []
    while queue:
        v = queue.pop(0)
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                tree.append((min(v, w), max(v, w)))
                queue.append(w)
    if len(seen) != g.n:
        raise ValueError("cover minimization needs a connected graph")
    return tuple(sorted(tree))


def _identity_pairs(m: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, i) for i in range(m))


def dp_color_function_exact(
    g: Graph, m: int, *, perm_budget: int | None = None
) -> DpColorResult:
    """Exact minimum coloring count over all m-fold covers, with a witness.

    Only full covers are enumerated (deleting matched pairs can only add
    colorings, so the minimum sits on full covers), and a spanning tree is
    gauge-fixed to identity matchings (relabeling inside each vertex's label
    set preserves counts), leaving one permutation per non-tree edge.
    Enumeration is lexicographic, so the witness is the lexicographically
    smallest minimizer.
    """
    if m < 1:
        raise ValueError("fold m must be positive")
    if perm_budget is None:
        perm_budget = default_perm_budget()
    tree = _bfs_tree_edges(g)
    free = tuple(sorted(g.edges - set(tree)))
    perms = list(itertools.permutations(range(m)))
    total = len(perms) ** len(free)
    if total > perm_budget:
        raise BudgetExceededError(
            "cover enumeration over budget", budget=perm_budget, required=total
        )
    identity = _identity_pairs(m)
    base = {e: identity for e in tree}
    best = None
    best_combo = None
    for combo in itertools.product(perms, repeat=len(free)):
        matchings = dict(base)
        for edge, perm in zip(free, combo):
            matchings[edge] = tuple((x, perm[x]) for x in range(m))
        cover = Cover.from_dict(m, g.n, matchings)
        count = count_cover_colorings(g, cover)
        if best is None or count < best:
            best, best_combo, best_cover = count, combo, cover
    assert best is not None
    return DpColorResult(
        best,
        best_cover,
        tree,
        tuple((edge, tuple(perm)) for edge, perm in zip(free, best_combo)),
    )


def dp_color_function_full_covers(g: Graph, m: int, *, perm_budget: int | None = None) -> int:
    """Oracle: minimum over ALL full covers, no gauge fixing."""
    if perm_budget is None:
        perm_budget = default_perm_budget()
    edges = g.edge_list()
    perms = list(itertools.permutations(range(m)))
    total = len(perms) ** len(edges)
    if total > perm_budget:
        raise BudgetExceededError(
            "ungauged cover enumeration over budget", budget=perm_budget, required=total
        )
    best = None
    for combo in itertools.product(perms, repeat=len(edges)):
        matchings = {
            edge: tuple((x, perm[x]) for x in range(m)) for edge, perm in zip(edges, combo)
        }
        count = count_cover_colorings(g, Cover.from_dict(m, g.n, matchings))
        if best is None or count < best:
            best = count
    assert best is not None
    return best


def _partial_matchings(m: int) -> list[tuple[tuple[int, int], ...]]:
    out = []
    for size in range(m + 1):
        for dom in itertools.combinations(range(m), size):
            for img in itertools.permutations(range(m), size):
                out.append(tuple(sorted(zip(dom, img))))
    return sorted(set(out))


def dp_color_function_all_covers(g: Graph, m: int, *, perm_budget: int | None = None) -> int:
    """Oracle: minimum over ALL covers, partial matchings included.

    Exponential in the edge count times the number of partial matchings;
    meant for m = 2 sanity instances only.
    """
    if perm_budget is None:
        perm_budget = default_perm_budget()
    edges = g.edge_list()
    partials = _partial_matchings(m)
    total = len(partials) ** len(edges)
    if total > perm_budget:
        raise BudgetExceededError(
            "all-cover enumeration over budget", budget=perm_budget, required=total
        )
    best = None
    for combo in itertools.product(partials, repeat=len(edges)):
        cover = Cover.from_dict(m, g.n, dict(zip(edges, combo)))
        count = count_cover_colorings(g, cover)
        if best is None or count < best:
            best = count
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# closed form


def dp_parity_arrangement(a: int, b: int, c: int) -> ThetaSpec | None:
    """Arrange three path lengths, minimum first, so the first and third share
    a parity the second lacks; None when no arrangement qualifies."""
    x, y, z = sorted((a, b, c))
    for cand in ((x, y, z), (x, z, y)):
        l1, l2, l3 = cand
        if l1 % 2 == l3 % 2 != l2 % 2:
            try:
                return ThetaSpec(l1, l2, l3)
            except ValueError:
                continue
    return None


def theta_dp_closed_form(spec: ThetaSpec, m: int) -> int:
    """Closed-form minimum cover-coloring count of a theta graph whose first
    and third path lengths share a parity the second lacks, for m >= 2."""
    l1, l2, l3 = spec.lengths
    if not (l1 % 2 == l3 % 2 != l2 % 2):
        raise ValueError(
            "closed form needs the first and third lengths to share a parity "
            "the second lacks"
        )
    if m < 2:
        raise ValueError("closed form needs m >= 2")
    w = m - 1
    numerator = (
        w ** (l1 + l2 + l3)
        + w ** l1
        - w ** l2
        - w ** (l3 + 1)
        + (-1) ** (l2 + 1) * (m - 2)
    )
    q, r = divmod(numerator, m)
    if r:
        raise RuntimeError(f"closed-form numerator not divisible by m for {spec.lengths}, m={m}")
    return q


def gauge_cover_json(result: DpColorResult, n: int) -> dict:
    """Witness cover in spanning-tree form: identity on tree edges, one
    permutation per free edge."""
    return {
        "m": result.witness.m,
        "n": n,
        "tree_edges": [list(e) for e in result.tree_edges],
        "free_edges": [
            {"edge": list(edge), "perm": list(perm)} for edge, perm in result.free_edges
        ],
    }


def gauge_cover_from_json(obj: dict) -> Cover:
    m = int(obj["m"])
    n = int(obj["n"])
    matchings: dict[Edge, list[tuple[int, int]]] = {}
    for a, b in obj["tree_edges"]:
        matchings[(int(a), int(b))] = [(i, i) for i in range(m)]
    for entry in obj["free_edges"]:
        a, b = entry["edge"]
        perm = [int(x) for x in entry["perm"]]
        matchings[(int(a), int(b))] = [(i, perm[i]) for i in range(m)]
    return Cover.from_dict(m, n, matchings)
