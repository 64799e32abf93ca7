"""
Canonical labeling, isomorphism and induced-subgraph embeddings.

The canonical form of a graph is the lexicographically smallest
column-ordered upper-triangle bit string (the graph6 bit order) over all
vertex orders that respect its refined degree partition. The partition and
the order of its cells are computed from isomorphism-invariant data only,
so the minimum is an isomorphism invariant, and equal strings describe the
same labeled graph, so it is also complete.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import config
from .graph import Graph, VertexSet, iter_bits, popcount
from .graph6 import encode_bits, graph6_decode

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bits: int

    def graph6(self) -> str:
        return encode_bits(self.n, self.bits)

    def to_graph(self) -> Graph:
        return graph6_decode(self.graph6())

    def __str__(self):
        return self.graph6()


@dataclass(frozen=True)
class Embedding:
    """map[i] is the host vertex that pattern vertex i is sent to."""
    map: Tuple[int, ...]

    def vertex_set(self) -> VertexSet:
        return VertexSet.of(self.map)

    def is_induced(self, host: Graph, pattern: Graph) -> bool:
        if len(set(self.map)) != len(self.map) or len(self.map) != pattern.n:
            return False
        for u in range(pattern.n):
            for v in range(u + 1, pattern.n):
                if pattern.has_edge(u, v) != host.has_edge(self.map[u], self.map[v]):
                    return False
        return True


# --- partition refinement ---

def refine_colors(adj: Sequence[int], n: int) -> List[int]:
    """
    Equitable refinement of the degree partition. Colors are ranks of
    sorted signatures, so the cell order does not depend on the labeling.
    """
    degrees = [popcount(adj[v]) for v in range(n)]
    ranks = {d: i for i, d in enumerate(sorted(set(degrees)))}
    colors = [ranks[d] for d in degrees]
    cells = len(ranks)
    while True:
        signatures = [(colors[v], tuple(sorted(colors[u] for u in iter_bits(adj[v]))))
                      for v in range(n)]
        distinct = sorted(set(signatures))
        if len(distinct) == cells:
            return colors
        ranks = {sig: i for i, sig in enumerate(distinct)}
        colors = [ranks[sig] for sig in signatures]
        cells = len(distinct)


def _twin_classes(adj, n):
    """Representative per vertex: u and w are twins when N(u)-w == N(w)-u."""
    rep = list(range(n))
    for w in range(n):
        for u in range(w):
            if rep[u] == u and (adj[u] & ~(1 << w)) == (adj[w] & ~(1 << u)):
                rep[w] = u
                break
    return rep


# --- canonical labeling ---

def canonical_labeling(g: Graph) -> Tuple[List[int], int]:
    """
    Return (order, bits): order[i] is the vertex placed at canonical position i,
    bits the canonical upper-triangle string.
    """
    n = g.n
    if n <= 1:
        return list(range(n)), 0
    adj = g.adj
    colors = refine_colors(adj, n)
    slots = sorted(colors)
    cell_masks = {}
    for v, c in enumerate(colors):
        cell_masks[c] = cell_masks.get(c, 0) | (1 << v)
    twin = _twin_classes(adj, n)
    total = n * (n - 1) // 2
    best = [None, None]

    def search(depth, order, placed, columns, value):
        if depth == n:
            if best[0] is None or value < best[0]:
                best[0], best[1] = value, list(order)
            return
        candidates = cell_masks[slots[depth]] & ~placed
        lowest = min(columns[v] for v in iter_bits(candidates))
        value = (value << depth) | lowest
        if best[0] is not None:
            prefix = best[0] >> (total - (depth + 1) * depth // 2)
            if value > prefix:
                return
        tried = set()
        for v in iter_bits(candidates):
            if columns[v] != lowest or twin[v] in tried:
                continue
            tried.add(twin[v])
            row = adj[v]
            bit = 1 << v
            nxt = list(columns)
            for u in iter_bits(~(placed | bit) & g.vertices):
                nxt[u] = columns[u] << 1 | (row >> u & 1)
            order.append(v)
            search(depth + 1, order, placed | bit, nxt, value)
            order.pop()

    search(0, [], 0, [0] * n, 0)
    return best[1], best[0]


def canonical_form(g: Graph) -> CanonicalForm:
    config.require_budget('canonical', g.n, 'canonical_form')
    _, bits = canonical_labeling(g)
    return CanonicalForm(g.n, bits)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex i is g's vertex order[i]."""
    position = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(g.n, tuple(rows))


def canonical_graph(g: Graph) -> Graph:
    config.require_budget('canonical', g.n, 'canonical_graph')
    order, _ = canonical_labeling(g)
    return relabel(g, order)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# --- induced embeddings ---

def contains_induced(host: Graph, pattern: Graph) -> Optional[Embedding]:
    """
    First induced embedding of pattern into host, or None. Pattern vertices
    are matched in descending degree order (ties by index), host candidates
    in ascending index order.
    """
    if pattern.n > host.n:
        return None
    if pattern.n == 0:
        return Embedding(())
    order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    host_degrees = host.degrees()
    degree_ok = {}
    for p in order:
        d = pattern.degree(p)
        degree_ok[p] = sum(1 << h for h in range(host.n) if host_degrees[h] >= d)
    image = [-1] * pattern.n
    full = host.vertices

    def place(i, used):
        if i == len(order):
            return True
        p = order[i]
        allowed = degree_ok[p] & ~used
        for j in range(i):
            q = order[j]
            if pattern.adj[p] >> q & 1:
                allowed &= host.adj[image[q]]
            else:
                allowed &= ~host.adj[image[q]] & full
            if not allowed:
                return False
        for h in iter_bits(allowed):
            image[p] = h
            if place(i + 1, used | (1 << h)):
                return True
        image[p] = -1
        return False

    if place(0, 0):
        return Embedding(tuple(image))
    return None
