"""
Exact Δ, ω and χ for small graphs, plus the two deletion criteria behind
the minimal-forbidden-graph characterizations:

  * x is a singleton color class in some optimal coloring  ⟺  χ(G-x) = χ(G)-1
  * x lies in every maximum clique                         ⟺  ω(G-x) = ω(G)-1

The `*_within(adj, mask)` kernels work on the subgraph induced by a vertex
bitmask without building it, which is what the subset scans need.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from .graph import Graph, GraphError, iter_bits, lowest_bit, popcount

logger = logging.getLogger(__name__)


def _require_nonempty(g: Graph, operation: str):
    if g.n == 0:
        raise GraphError(f"{operation} is undefined on the empty graph")


# --- clique number ---

def _color_sort(P, adj):
    """Greedy sequential coloring of P; colors are non-decreasing along `order`."""
    order = []
    colors = []
    color = 0
    remaining = P
    while remaining:
        color += 1
        candidates = remaining
        while candidates:
            v = lowest_bit(candidates)
            bit = 1 << v
            order.append(v)
            colors.append(color)
            remaining &= ~bit
            candidates &= ~bit & ~adj[v]
    return order, colors


def clique_number_within(adj, mask, stop_at=None):
    """
    Size of a maximum clique inside `mask` (0 for an empty mask).
    With `stop_at`, the search returns as soon as a clique of that size exists.
    """
    if not mask:
        return 0
    best = [1]
    target = stop_at if stop_at is not None else popcount(mask) + 1

    def expand(size, P):
        order, colors = _color_sort(P, adj)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best[0] or best[0] >= target:
                return
            v = order[i]
            inner = P & adj[v]
            if inner:
                expand(size + 1, inner)
            elif size + 1 > best[0]:
                best[0] = size + 1
            P &= ~(1 << v)

    expand(0, mask)
    return best[0]


def has_clique_within(adj, mask, size):
    if size <= 0:
        return True
    return clique_number_within(adj, mask, stop_at=size) >= size


# --- colorability ---

def _is_bipartite(adj, mask):
    side = {}
    for start in iter_bits(mask):
        if start in side:
            continue
        side[start] = 0
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in iter_bits(adj[v] & mask):
                if u not in side:
                    side[u] = side[v] ^ 1
                    frontier.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def colorable_within(adj, mask, q):
    """
    True when the subgraph induced by `mask` has a proper q-coloring.
    DSATUR-ordered backtracking; a new color is only ever opened as the next
    unused index, so the first vertex (maximum degree) always gets color 0.
    """
    count = popcount(mask)
    if count == 0:
        return True
    if q <= 0:
        return False
    if q >= count:
        return True
    if q == 1:
        return all(not adj[v] & mask for v in iter_bits(mask))
    if q == 2:
        return _is_bipartite(adj, mask)

    degree = {v: popcount(adj[v] & mask) for v in iter_bits(mask)}
    classes = []

    def assign(uncolored):
        if not uncolored:
            return True
        chosen = -1
        chosen_key = None
        for v in iter_bits(uncolored):
            row = adj[v]
            saturation = 0
            for c in classes:
                if row & c:
                    saturation += 1
            if saturation == q:
                return False
            key = (saturation, degree[v])
            if chosen_key is None or key > chosen_key:
                chosen, chosen_key = v, key
        bit = 1 << chosen
        row = adj[chosen]
        rest = uncolored & ~bit
        for idx in range(len(classes)):
            if not row & classes[idx]:
                classes[idx] |= bit
                if assign(rest):
                    return True
                classes[idx] &= ~bit
        if len(classes) < q:
            classes.append(bit)
            if assign(rest):
                return True
            classes.pop()
        return False

    return assign(mask)


def chromatic_number_within(adj, mask):
    """Exact χ of the subgraph induced by `mask` (0 for an empty mask)."""
    if not mask:
        return 0
    q = clique_number_within(adj, mask)
    while not colorable_within(adj, mask, q):
        q += 1
    return q


# --- public operations on whole graphs ---

def max_degree(g: Graph) -> int:
    _require_nonempty(g, 'max_degree')
    return max(popcount(row) for row in g.adj)


def clique_number(g: Graph) -> int:
    _require_nonempty(g, 'clique_number')
    return clique_number_within(g.adj, g.vertices)


def is_q_colorable(g: Graph, q: int) -> bool:
    _require_nonempty(g, 'is_q_colorable')
    if q < 1:
        raise GraphError(f"is_q_colorable needs q >= 1, got {q}")
    return colorable_within(g.adj, g.vertices, q)


def chromatic_number(g: Graph) -> int:
    _require_nonempty(g, 'chromatic_number')
    return chromatic_number_within(g.adj, g.vertices)


def forced_multicolor_classes_within(adj, mask, chi=None):
    if chi is None:
        chi = chromatic_number_within(adj, mask)
    for x in iter_bits(mask):
        if colorable_within(adj, mask & ~(1 << x), chi - 1):
            return False
    return True


def forced_multicolor_classes(g: Graph) -> bool:
    """True when every color class of every optimal coloring has at least two vertices."""
    _require_nonempty(g, 'forced_multicolor_classes')
    return forced_multicolor_classes_within(g.adj, g.vertices)


def in_every_maximum_clique(adj, mask, x, omega):
    return not has_clique_within(adj, mask & ~(1 << x), omega)


def clique_intersection_exactly(g: Graph, v: int) -> bool:
    """True when the intersection of all maximum cliques is exactly {v}."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    omega = clique_number(g)
    full = g.vertices
    if not in_every_maximum_clique(g.adj, full, v, omega):
        return False
    return not any(in_every_maximum_clique(g.adj, full, x, omega)
                   for x in range(g.n) if x != v)


def empty_clique_intersection_within(adj, mask, omega=None):
    if omega is None:
        omega = clique_number_within(adj, mask)
    return not any(in_every_maximum_clique(adj, mask, x, omega) for x in iter_bits(mask))


def empty_clique_intersection(g: Graph) -> bool:
    _require_nonempty(g, 'empty_clique_intersection')
    return empty_clique_intersection_within(g.adj, g.vertices)


@dataclass(frozen=True)
class InvariantRecord:
    n: int
    max_degree: int
    clique_number: int
    chromatic_number: int

    def __post_init__(self):
        if not self.clique_number <= self.chromatic_number <= self.max_degree + 1:
            raise AssertionError(f"sandwich ω ≤ χ ≤ Δ+1 violated: {self}")


def invariant_record(g: Graph) -> InvariantRecord:
    record = InvariantRecord(g.n, max_degree(g), clique_number(g), chromatic_number(g))
    logger.debug(f"invariants {record}")
    return record
