"""Exact chromatic polynomials and coloring counts.

The general engine is deletion-contraction with memoization; the brute
force counter is the independent oracle it is tested against.  The theta
closed form is evaluated with assert-divide so a transcription error blows
up instead of rounding away.
"""

from __future__ import annotations

import itertools

from .config import default_enum_budget
from .errors import BudgetExceededError
from .graphs import Edge, Graph, ThetaSpec
from .polynomials import IntPolynomial

# memo over canonical subproblem keys (vertex count, normalized edge set);
# plain dict assignment is atomic, so concurrent fills are harmless
_CHROM_MEMO: dict[tuple[int, frozenset[Edge]], IntPolynomial] = {}


def _components(n: int, edges: frozenset[Edge]) -> int:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps


def _smallest_cycle_edge(n: int, edges: frozenset[Edge]) -> Edge | None:
    """Lexicographically smallest edge lying on a cycle, or None for forests."""
    for edge in sorted(edges):
        if _components(n, edges) == _components(n, edges - {edge}):
            return edge
    return None


def _contract(n: int, edges: frozenset[Edge], edge: Edge) -> tuple[int, frozenset[Edge]]:
    """Simple contraction of edge (u,v): merge v into u, drop parallels, relabel."""
    u, v = edge

    def remap(x: int) -> int:
        if x == v:
            x = u
        return x - 1 if x > v else x

    out = set()
    for a, b in edges:
        if (a, b) == edge:
            continue
        ra, rb = remap(a), remap(b)
        if ra != rb:
            out.add((ra, rb) if ra < rb else (rb, ra))
    return n - 1, frozenset(out)


def _chromatic(n: int, edges: frozenset[Edge]) -> IntPolynomial:
    key = (n, edges)
    cached = _CHROM_MEMO.get(key)
    if cached is not None:
        return cached
    cycle_edge = _smallest_cycle_edge(n, edges)
    if cycle_edge is None:
        # forest: m^c (m-1)^{|E|} with c components
        comps = n - len(edges)
        poly = (IntPolynomial.x() ** comps) * ((IntPolynomial.x() - IntPolynomial.constant(1)) ** len(edges))
    else:
        deleted = _chromatic(n, edges - {cycle_edge})
        contracted = _chromatic(*_contract(n, edges, cycle_edge))
        poly = deleted - contracted
    _CHROM_MEMO[key] = poly
    return poly


def chromatic_polynomial(g: Graph) -> IntPolynomial:
    """Chromatic polynomial by deletion-contraction.

    Evaluating the result at any m >= 0 gives the exact number of proper
    m-colorings.  Deterministic: the recursion always splits on the
    lexicographically smallest edge that lies on a cycle.
    """
    return _chromatic(g.n, g.edges)


def count_colorings_bruteforce(g: Graph, m: int, *, budget: int | None = None) -> int:
    """Count proper m-colorings by direct enumeration of all m**n color tuples.

    This is the module's oracle; it stays a flat enumeration on purpose.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if budget is None:
        budget = default_enum_budget()
    total = m ** g.n
    if total > budget:
        raise BudgetExceededError(
            "brute-force coloring enumeration over budget", budget=budget, required=total
        )
    edges = g.edge_list()
    count = 0
    for coloring in itertools.product(range(m), repeat=g.n):
        if all(coloring[a] != coloring[b] for a, b in edges):
            count += 1
    return count


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise RuntimeError(f"exact divisibility failed in {what}: {numerator} / {denominator}")
    return q


def theta_chromatic_closed_form(spec: ThetaSpec, m: int) -> int:
    """Number of proper m-colorings of the theta graph, via the two-term
    closed form over (m(m-1))^2 and m^2.  Both divisions are assert-exact."""
    if m < 2:
        raise ValueError("closed form needs m >= 2")
    w = m - 1
    first = 1
    second = 1
    for length in spec.lengths:
        sign = (-1) ** length
        first *= w ** (length + 1) - sign * w
        second *= w ** length + sign * w
    return _exact_div(first, (m * w) ** 2, "theta closed form, cycle term") + _exact_div(
        second, m * m, "theta closed form, residual term"
    )


def chromatic_number(g: Graph) -> int:
    """Smallest m with a proper m-coloring; n colors always suffice."""
    poly = chromatic_polynomial(g)
    for m in range(1, g.n + 1):
        if poly.evaluate(m) > 0:
            return m
    raise RuntimeError("no chromatic number found below n; impossible for simple graphs")
