"""List assignments and exact list-coloring counts.

Two exact minimizers live here.  The theta-specific one exploits the
end-to-end decomposition P(G,L) = sum over endpoint color pairs of the
product of per-path counts: endpoint lists are enumerated up to color
relabeling, each path contributes a frontier of entrywise-minimal count
matrices, and the objective is minimized over the product of frontiers.
The generic one runs a canonical-prefix frontier over all m-assignments
of a small graph.

Dominance pruning is sound in both searches because every completion acts
on a partial state by sums of products with nonnegative weights, so an
entrywise-smaller state can never lead to a strictly larger final count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .chromatic import chromatic_polynomial, theta_chromatic_closed_form
from .config import default_frontier_budget, default_pair_budget
from .errors import BudgetExceededError
from .graphs import Graph, ThetaSpec, build_theta, cycle_graph


@dataclass(frozen=True)
class ListAssignment:
    """An m-assignment: one sorted m-set of palette colors per vertex."""

    m: int
    palette_size: int
    lists: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("fold m must be positive")
        if self.palette_size < 1:
            raise ValueError("palette must be nonempty")
        for i, lst in enumerate(self.lists):
            if len(lst) != self.m:
                raise ValueError(f"list at vertex {i} has {len(lst)} colors, expected {self.m}")
            if list(lst) != sorted(set(lst)):
                raise ValueError(f"list at vertex {i} must be strictly increasing")
            if lst[0] < 0 or lst[-1] >= self.palette_size:
                raise ValueError(f"list at vertex {i} leaves the palette")

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "palette": self.palette_size,
            "lists": [list(lst) for lst in self.lists],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ListAssignment":
        return cls(
            m=int(obj["m"]),
            palette_size=int(obj["palette"]),
            lists=tuple(tuple(int(c) for c in lst) for lst in obj["lists"]),
        )


def same_list_assignment(g: Graph, m: int, palette_size: int | None = None) -> ListAssignment:
    """The assignment giving every vertex the same list {0..m-1}."""
    if palette_size is None:
        palette_size = m * g.n
    base = tuple(range(m))
    return ListAssignment(m=m, palette_size=palette_size, lists=(base,) * g.n)


def canonical_form(assignment: ListAssignment) -> ListAssignment:
    """Relabel colors by first occurrence, scanning vertices in index order
    and each list in sorted order.  Two assignments with the same canonical
    form are related by a palette bijection."""
    mapping: dict[int, int] = {}
    for lst in assignment.lists:
        for c in lst:
            if c not in mapping:
                mapping[c] = len(mapping)
    new_lists = tuple(tuple(sorted(mapping[c] for c in lst)) for lst in assignment.lists)
    return ListAssignment(assignment.m, assignment.palette_size, new_lists)


def _count_with_candidates(back_neighbors: Sequence[Sequence[int]], candidates) -> int:
    """Backtracking count of proper colorings with per-vertex candidate sets."""
    n = len(candidates)
    colors = [-1] * n

    def rec(i: int) -> int:
        if i == n:
            return 1
        total = 0
        for c in candidates[i]:
            if all(colors[w] != c for w in back_neighbors[i]):
                colors[i] = c
                total += rec(i + 1)
        colors[i] = -1
        return total

    return rec(0)


def _back_neighbors(g: Graph) -> list[tuple[int, ...]]:
    adj = g.adjacency()
    return [tuple(w for w in adj[v] if w < v) for v in range(g.n)]


def count_list_colorings(g: Graph, assignment: ListAssignment) -> int:
    """Exact number of proper colorings respecting the per-vertex lists."""
    if len(assignment.lists) != g.n:
        raise ValueError("assignment does not cover every vertex exactly once")
    return _count_with_candidates(_back_neighbors(g), assignment.lists)


# ---------------------------------------------------------------------------
# per-path count matrices


@dataclass(frozen=True)
class CountMatrix:
    """Endpoint-indexed matrix of exact path-coloring counts.

    Entry (c, d) counts the proper list colorings of one path that color
    the first endpoint c and the last endpoint d.
    """

    row_colors: tuple[int, ...]
    col_colors: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.row_colors):
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != len(self.col_colors):
                raise ValueError("column count mismatch")

    def entry(self, c: int, d: int) -> int:
        return self.entries[self.row_colors.index(c)][self.col_colors.index(d)]

    def min_entry(self) -> int:
        return min(min(row) for row in self.entries)


def path_count_matrix(path_lists: Sequence[Sequence[int]]) -> CountMatrix:
    """Count matrix of a path from its vertex lists, first endpoint to last.

    One transfer pass per internal vertex: the new column for color d is the
    row sum minus the old column for d when d sat in the previous list.
    """
    lists = [tuple(sorted(lst)) for lst in path_lists]
    if len(lists) < 2:
        raise ValueError("a path needs at least one edge")
    for lst in lists:
        if len(set(lst)) != len(lst) or not lst:
            raise ValueError("vertex lists must be nonempty sets of colors")
    first = lists[0]
    size = len(first)
    cur = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    prev = first
    for nxt in lists[1:]:
        index = {c: k for k, c in enumerate(prev)}
        new = []
        for r in range(size):
            row = cur[r]
            total = sum(row)
            new.append([total - (row[index[d]] if d in index else 0) for d in nxt])
        cur = new
        prev = nxt
    return CountMatrix(first, lists[-1], tuple(tuple(row) for row in cur))


def assemble_theta_count(
    end_u_list: Sequence[int],
    end_v_list: Sequence[int],
    m1: CountMatrix,
    m2: CountMatrix,
    m3: CountMatrix,
) -> int:
    """Sum over endpoint color pairs of the product of the three path counts."""
    lu = tuple(sorted(end_u_list))
    lv = tuple(sorted(end_v_list))
    for mat in (m1, m2, m3):
        if mat.row_colors != lu or mat.col_colors != lv:
            raise ValueError("count matrices must share the endpoint index sets")
    total = 0
    for i in range(len(lu)):
        r1, r2, r3 = m1.entries[i], m2.entries[i], m3.entries[i]
        for j in range(len(lv)):
            total += r1[j] * r2[j] * r3[j]
    return total


# ---------------------------------------------------------------------------
# achievable count matrices of one path
#
# Frontier DP over the internal vertices.  A state is the partial transfer
# matrix after the latest internal vertex, with columns split into
#
#   * pinned colors: members of L(u) | L(v) present in the current list,
#     keyed by their actual color (they can still interact with the
#     endpoints), and
#   * slots: the remaining columns, anonymous because any color outside
#     L(u) | L(v) can be renamed freely, and a color that left the path two
#     vertices back can reenter with no effect (no edge reaches back).
#
# Fresh-color availability is throttled by the concrete palette size, so
# small palettes stay exact.


@dataclass(frozen=True)
class PathMatrixOption:
    """An achievable endpoint count matrix plus internal lists realizing it."""

    matrix: CountMatrix
    internal_lists: tuple[tuple[int, ...], ...]


def _subsets_upto(pool: Sequence, max_size: int):
    for size in range(min(len(pool), max_size) + 1):
        yield from itertools.combinations(pool, size)


def _expand_path_frontier(frontier, m, pinned_pool, palette_size, rows, prune, budget):
    out: dict = {}
    pool_set = set(pinned_pool)
    for pinned, slots, slot_colors, history in frontier:
        columns = [col for _, col in pinned] + list(slots)
        total = tuple(sum(col[r] for col in columns) for r in range(rows))
        cur_pinned = dict(pinned)
        n_slots = len(slots)
        fresh_avail = palette_size - len(pinned_pool) - n_slots
        for chosen_pinned in _subsets_upto(pinned_pool, m):
            room = m - len(chosen_pinned)
            for cont in _subsets_upto(range(n_slots), room):
                fresh = room - len(cont)
                if fresh > fresh_avail:
                    continue
                new_pinned = tuple(
                    (p, tuple(total[r] - cur_pinned[p][r] for r in range(rows)))
                    if p in cur_pinned
                    else (p, total)
                    for p in chosen_pinned
                )
                slot_pairs = [
                    (tuple(total[r] - slots[i][r] for r in range(rows)), slot_colors[i])
                    for i in cont
                ]
                picked: list[int] = []
                if fresh:
                    excluded = pool_set | set(slot_colors)
                    c = 0
                    while len(picked) < fresh:
                        if c not in excluded:
                            picked.append(c)
                            excluded.add(c)
                        c += 1
                    slot_pairs.extend((total, c) for c in picked)
                slot_pairs.sort()
                new_slots = tuple(col for col, _ in slot_pairs)
                new_colors = tuple(c for _, c in slot_pairs)
                new_list = tuple(
                    sorted(chosen_pinned + tuple(slot_colors[i] for i in cont) + tuple(picked))
                )
                key = (new_pinned, new_slots)
                if key not in out:
                    out[key] = (new_pinned, new_slots, new_colors, history + (new_list,))
    if budget is not None and len(out) > budget:
        raise BudgetExceededError(
            "path frontier over budget", budget=budget, required=len(out)
        )
    states = list(out.values())
    if prune:
        states = _prune_dominated_states(states)
    states.sort(key=lambda st: (st[0], st[1]))
    return states


def _prune_dominated_states(states):
    buckets: dict = {}
    for st in states:
        pinned, slots = st[0], st[1]
        key = (tuple(c for c, _ in pinned), len(slots))
        buckets.setdefault(key, []).append(st)
    kept = []
    for bucket in buckets.values():
        frontier: list[tuple[tuple[int, ...], object]] = []
        for st in bucket:
            stacked = tuple(
                x for col in ([col for _, col in st[0]] + list(st[1])) for x in col
            )
            if any(all(a <= b for a, b in zip(other, stacked)) for other, _ in frontier):
                continue
            frontier = [
                (other, kept_st)
                for other, kept_st in frontier
                if not all(b <= a for a, b in zip(other, stacked))
            ]
            frontier.append((stacked, st))
        kept.extend(st for _, st in frontier)
    return kept


def _finalize_path_state(pinned, slots, lu, lv) -> CountMatrix:
    rows = len(lu)
    columns = [col for _, col in pinned] + list(slots)
    total = [sum(col[r] for col in columns) for r in range(rows)]
    pin = dict(pinned)
    entries = tuple(
        tuple(total[r] - (pin[d][r] if d in pin else 0) for d in lv) for r in range(rows)
    )
    return CountMatrix(lu, lv, entries)


def _pareto_minimal_options(options: list[PathMatrixOption]) -> list[PathMatrixOption]:
    flat = [
        (tuple(x for row in o.matrix.entries for x in row), o) for o in options
    ]
    flat.sort(key=lambda t: (sum(t[0]), t[0]))
    kept: list[tuple[tuple[int, ...], PathMatrixOption]] = []
    for vec, opt in flat:
        if any(all(a <= b for a, b in zip(other, vec)) for other, _ in kept):
            continue
        kept.append((vec, opt))
    return [opt for _, opt in kept]


def achievable_matrices(
    length: int,
    end_u_list: Sequence[int],
    end_v_list: Sequence[int],
    m: int,
    palette_size: int,
    *,
    prune: bool = True,
    frontier_budget: int | None = None,
) -> list[PathMatrixOption]:
    """All count matrices a path of the given length can achieve, over every
    choice of internal lists from the palette.

    With ``prune=True`` only the entrywise-minimal matrices are returned
    (sufficient for minimizing any entrywise-monotone objective); with
    ``prune=False`` every reachable matrix is kept.  Each option carries a
    concrete choice of internal lists that realizes its matrix.
    """
    if length < 1:
        raise ValueError("path length must be positive")
    lu = tuple(sorted(end_u_list))
    lv = tuple(sorted(end_v_list))
    if len(lu) != m or len(lv) != m:
        raise ValueError("endpoint lists must have exactly m colors")
    if max(lu[-1], lv[-1]) >= palette_size or min(lu[0], lv[0]) < 0:
        raise ValueError("endpoint lists leave the palette")
    if frontier_budget is None:
        frontier_budget = default_frontier_budget()
    if length == 1:
        entries = tuple(tuple(0 if c == d else 1 for d in lv) for c in lu)
        return [PathMatrixOption(CountMatrix(lu, lv, entries), ())]

    pinned_pool = tuple(sorted(set(lu) | set(lv)))
    rows = len(lu)
    basis = {c: tuple(1 if r == c else 0 for r in lu) for c in lu}
    init = (tuple(sorted((c, basis[c]) for c in lu)), (), (), ())
    frontier = [init]
    for _ in range(length - 1):
        frontier = _expand_path_frontier(
            frontier, m, pinned_pool, palette_size, rows, prune, frontier_budget
        )

    by_matrix: dict[CountMatrix, tuple[tuple[int, ...], ...]] = {}
    for pinned, slots, _colors, history in frontier:
        matrix = _finalize_path_state(pinned, slots, lu, lv)
        if matrix not in by_matrix:
            by_matrix[matrix] = history
    options = [PathMatrixOption(mx, hist) for mx, hist in by_matrix.items()]
    if prune:
        options = _pareto_minimal_options(options)
    options.sort(key=lambda o: o.matrix.entries)
    return options


# results beyond the binding palette size coincide, so normalize the key
_ACHIEVABLE_MEMO: dict[tuple, list[PathMatrixOption]] = {}


def _achievable_cached(length, lu, lv, m, palette_size, prune, frontier_budget):
    pool = len(set(lu) | set(lv))
    effective = palette_size if palette_size < pool + 2 * m else pool + 2 * m
    key = (length, lu, lv, m, effective, prune, frontier_budget)
    cached = _ACHIEVABLE_MEMO.get(key)
    if cached is None:
        cached = achievable_matrices(
            length, lu, lv, m, effective, prune=prune, frontier_budget=frontier_budget
        )
        _ACHIEVABLE_MEMO[key] = cached
    return cached


# ---------------------------------------------------------------------------
# exact list color function, theta graphs


class ListColorResult(NamedTuple):
    value: int
    witness: ListAssignment


def count_theta_assignment(spec: ThetaSpec, assignment: ListAssignment) -> int:
    """Exact count of proper colorings of a theta graph under one assignment,
    via the per-path decomposition (fast path used by the checks)."""
    if len(assignment.lists) != spec.vertex_count:
        raise ValueError("assignment does not match the theta graph")
    lu, lv = assignment.lists[0], assignment.lists[1]
    matrices = [
        path_count_matrix([assignment.lists[v] for v in seq]) for seq in spec.path_vertices()
    ]
    return assemble_theta_count(lu, lv, *matrices)


def _canonical_endpoint_pairs(m: int):
    """One endpoint-list pair per palette-relabeling orbit: the orbit of a
    pair of m-sets is determined by the intersection size alone, so take
    {0..m-1} against {0..k-1} + {m..2m-k-1} for each overlap k, largest
    overlap first (it contains the identical-lists assignment)."""
    lu = tuple(range(m))
    for overlap in range(m, -1, -1):
        lv = tuple(range(overlap)) + tuple(range(m, 2 * m - overlap))
        yield lu, lv


def _theta_assignment(spec, lu, lv, internals, m, palette) -> ListAssignment:
    lists: list[tuple[int, ...] | None] = [None] * spec.vertex_count
    lists[0], lists[1] = lu, lv
    for seq, chosen in zip(spec.path_vertices(), internals):
        inner = seq[1:-1]
        if len(inner) != len(chosen):
            raise RuntimeError("internal list witness does not match the path")
        for v, lst in zip(inner, chosen):
            lists[v] = lst
    return ListAssignment(m, palette, tuple(lists))  # type: ignore[arg-type]


def _min_over_path_join(
    path_lengths: Sequence[int],
    m: int,
    palette: int,
    prune: bool,
    frontier_budget: int | None,
    pair_budget: int | None,
):
    """Minimize the sum-of-products objective over a join of internally
    disjoint end-to-end paths: endpoint pairs up to relabeling, one achievable
    frontier per path, product of frontiers.  Returns the minimum and up to 64
    minimizing (lu, lv, options) combinations in deterministic order."""
    if pair_budget is None:
        pair_budget = default_pair_budget()
    if m + 1 > pair_budget:
        raise BudgetExceededError(
            "endpoint pair enumeration over budget", budget=pair_budget, required=m + 1
        )
    best: int | None = None
    candidates: list[tuple] = []
    for lu, lv in _canonical_endpoint_pairs(m):
        per_path = [
            _achievable_cached(length, lu, lv, m, palette, prune, frontier_budget)
            for length in path_lengths
        ]
        for combo in itertools.product(*per_path):
            value = 0
            for i in range(len(lu)):
                rows = [opt.matrix.entries[i] for opt in combo]
                for j in range(len(lv)):
                    term = 1
                    for row in rows:
                        term *= row[j]
                    value += term
            if best is None or value < best:
                best = value
                candidates = [(lu, lv, combo)]
            elif value == best and len(candidates) < 64:
                candidates.append((lu, lv, combo))
    assert best is not None
    return best, candidates


def list_color_function_theta(
    spec: ThetaSpec,
    m: int,
    *,
    prune: bool = True,
    frontier_budget: int | None = None,
    pair_budget: int | None = None,
) -> ListColorResult:
    """Minimum list-coloring count of a theta graph over all m-assignments,
    with a witness assignment attaining it.

    Endpoint pairs are enumerated up to color relabeling; each path's
    achievable matrices are searched independently; the objective is
    minimized over the product of the per-path frontiers.
    """
    if m < 1:
        raise ValueError("m must be positive")
    g = build_theta(spec)
    palette = m * g.n
    chrom_value = theta_chromatic_closed_form(spec, m) if m >= 2 else 0
    best, candidates = _min_over_path_join(
        spec.lengths, m, palette, prune, frontier_budget, pair_budget
    )

    if best == chrom_value:
        witness = same_list_assignment(g, m, palette)
    else:
        forms = []
        for lu, lv, combo in candidates:
            assignment = _theta_assignment(
                spec, lu, lv, tuple(opt.internal_lists for opt in combo), m, palette
            )
            forms.append(canonical_form(assignment))
        witness = min(forms, key=lambda a: a.lists)
    achieved = count_theta_assignment(spec, witness)
    if achieved != best:
        raise RuntimeError(
            f"witness recount mismatch: assignment gives {achieved}, search found {best}"
        )
    return ListColorResult(best, witness)


def list_color_function_cycle(
    n: int,
    m: int,
    *,
    prune: bool = True,
    frontier_budget: int | None = None,
    pair_budget: int | None = None,
) -> ListColorResult:
    """Minimum list-coloring count of the n-cycle over all m-assignments.

    A cycle is the join of two internally disjoint end-to-end paths (the
    closing edge and the long way around), so the theta machinery applies
    with two paths instead of three.  The witness uses the cyclic vertex
    numbering of ``cycle_graph``.
    """
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    if m < 1:
        raise ValueError("m must be positive")
    palette = m * n
    g = cycle_graph(n)
    chrom_value = chromatic_polynomial(g).evaluate(m)
    best, candidates = _min_over_path_join(
        (1, n - 1), m, palette, prune, frontier_budget, pair_budget
    )
    if best == chrom_value:
        witness = same_list_assignment(g, m, palette)
    else:
        forms = []
        for lu, lv, combo in candidates:
            # endpoints are vertices 0 and n-1; the long way around visits 1..n-2
            lists = (lu,) + combo[1].internal_lists + (lv,)
            forms.append(canonical_form(ListAssignment(m, palette, lists)))
        witness = min(forms, key=lambda a: a.lists)
    achieved = count_list_colorings(g, witness)
    if achieved != best:
        raise RuntimeError(
            f"witness recount mismatch: assignment gives {achieved}, search found {best}"
        )
    return ListColorResult(best, witness)


# ---------------------------------------------------------------------------
# exact list color function, small general graphs


def _canonical_lists(used: int, m: int, palette: int) -> list[tuple[int, ...]]:
    """Canonical next lists under first-occurrence renaming: any colors seen
    so far plus a consecutive block of fresh ones."""
    out = []
    for fresh in range(m + 1):
        if used + fresh > palette:
            break
        block = tuple(range(used, used + fresh))
        for old in itertools.combinations(range(used), m - fresh):
            out.append(old + block)
    return out


def list_color_function_generic(
    g: Graph,
    m: int,
    *,
    prune: bool = True,
    frontier_budget: int | None = None,
) -> ListColorResult:
    """Minimum list-coloring count of a small graph over all m-assignments.

    For m >= |E|-1 the minimum equals the plain coloring count (known
    threshold), so the search is skipped and the identical-lists witness is
    returned.  Otherwise the graph must have at most 6 vertices and m <= 3;
    assignments are enumerated as canonical prefixes (first-occurrence color
    renaming) with a frontier keyed by the colorings of the vertices that
    still face uncolored neighbors.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if frontier_budget is None:
        frontier_budget = default_frontier_budget()
    if m >= len(g.edges) - 1:
        value = chromatic_polynomial(g).evaluate(m)
        return ListColorResult(value, same_list_assignment(g, m))
    if g.n > 6 or m > 3:
        raise BudgetExceededError(
            f"generic list color search refused for n={g.n}, m={m}; "
            "only n <= 6 and m <= 3 are enumerable without the large-m shortcut"
        )
    palette = m * g.n
    adj = g.adjacency()
    boundaries = [
        tuple(v for v in range(i + 1) if any(w > i for w in adj[v])) for i in range(g.n)
    ]
    back = _back_neighbors(g)
    chrom_value = chromatic_polynomial(g).evaluate(m)

    def finish_with_smallest(lists_so_far: tuple) -> ListAssignment:
        fill = (tuple(range(m)),) * (g.n - len(lists_so_far))
        return ListAssignment(m, palette, lists_so_far + fill)

    # state: (used colors, lists so far, table {boundary coloring -> count})
    states = [(0, (), {(): 1})]
    prev_boundary: tuple[int, ...] = ()
    for i in range(g.n):
        new_boundary = boundaries[i]
        back_pos = [prev_boundary.index(w) for w in back[i]]
        keep_pos = [prev_boundary.index(v) for v in new_boundary if v != i]
        takes_self = i in new_boundary
        grouped: dict = {}
        for used, lists, table in states:
            for lst in _canonical_lists(used, m, palette):
                new_table: dict = {}
                for profile, count in table.items():
                    for c in lst:
                        if any(profile[p] == c for p in back_pos):
                            continue
                        new_profile = tuple(profile[p] for p in keep_pos)
                        if takes_self:
                            new_profile = new_profile + (c,)
                        new_table[new_profile] = new_table.get(new_profile, 0) + count
                new_lists = lists + (lst,)
                if not new_table:
                    # this prefix already kills every completion
                    return ListColorResult(0, finish_with_smallest(new_lists))
                new_used = max(used, lst[-1] + 1) if lst else used
                bucket = (new_used, tuple(new_lists[v] for v in new_boundary))
                profiles = sorted(
                    itertools.product(*(new_lists[v] for v in new_boundary))
                ) if new_boundary else [()]
                vec = tuple(new_table.get(p, 0) for p in profiles)
                grouped.setdefault(bucket, {}).setdefault(
                    vec, (new_used, new_lists, new_table)
                )
        states = []
        for bucket_states in grouped.values():
            if prune:
                frontier: list[tuple[tuple[int, ...], tuple]] = []
                for vec, st in bucket_states.items():
                    if any(all(a <= b for a, b in zip(other, vec)) for other, _ in frontier):
                        continue
                    frontier = [
                        (other, kept)
                        for other, kept in frontier
                        if not all(b <= a for a, b in zip(other, vec))
                    ]
                    frontier.append((vec, st))
                states.extend(st for _, st in frontier)
            else:
                states.extend(bucket_states.values())
        if len(states) > frontier_budget:
            raise BudgetExceededError(
                "assignment frontier over budget", budget=frontier_budget, required=len(states)
            )
        prev_boundary = new_boundary

    best = None
    best_lists = None
    for used, lists, table in states:
        value = table[()]
        if best is None or value < best or (value == best and lists < best_lists):
            best, best_lists = value, lists
    assert best is not None and best_lists is not None

    if best == chrom_value:
        witness = same_list_assignment(g, m, palette)
    else:
        witness = ListAssignment(m, palette, best_lists)
    achieved = count_list_colorings(g, witness)
    if achieved != best:
        raise RuntimeError(
            f"witness recount mismatch: assignment gives {achieved}, search found {best}"
        )
    return ListColorResult(best, witness)
