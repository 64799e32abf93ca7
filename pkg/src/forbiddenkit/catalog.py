"""Catalog of the named graphs used throughout the forbidden-subgraph theory."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Tuple

from .graph import (Graph, GraphError, MAX_VERTICES, add_dominating_vertex,
                    complement, disjoint_union, new_graph)


@dataclass(frozen=True)
class NamedGraph:
    tag: str
    params: Tuple[int, ...] = ()

    def __str__(self):
        if not self.params:
            return self.tag
        return f"{self.tag}({','.join(str(p) for p in self.params)})"


def _check(tag, value, low, high=MAX_VERTICES):
    if not low <= value <= high:
        raise GraphError(f"{tag} needs a parameter in {low}..{high}, got {value}")


def complete(n):
    _check('K', n, 1)
    return new_graph(n, combinations(range(n), 2))


def empty(n):
    _check('Kbar', n, 1)
    return new_graph(n)


def complete_bipartite(a, b):
    _check('Kmn', a, 1)
    _check('Kmn', b, 1, MAX_VERTICES - a)
    return new_graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def path(n):
    _check('P', n, 1)
    return new_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n):
    _check('C', n, 3)
    return new_graph(n, ((i, (i + 1) % n) for i in range(n)))


def wheel(r):
    """W_r: the cycle C_r plus a dominating vertex (index r)."""
    _check('W', r, 3, MAX_VERTICES - 1)
    return add_dominating_vertex(cycle(r))


def antihole_wheel(r):
    """B_r: the complement of C_r plus a dominating vertex (index r)."""
    _check('B', r, 3, MAX_VERTICES - 1)
    return add_dominating_vertex(complement(cycle(r)))


def jp(p):
    """
    J_p: a clique K_{p+1} on 0..p and a star K_{1,p} (center p+1, leaves
    p+2..2p+1), joined by the edge {a, b} with a the first leaf and b the
    first clique vertex. Then Δ = χ = p+1 while the induced star has
    Δ - χ = p - 2.
    """
    _check('J', p, 1, (MAX_VERTICES - 2) // 2)
    g = disjoint_union(complete(p + 1), complete_bipartite(1, p))
    a, b = p + 2, 0
    return new_graph(g.n, g.edges() + [(a, b)])


def sun3():
    """The 3-sun: triangle 0,1,2 and s_i = 3+i adjacent to t_i and t_{i+1}."""
    edges = [(0, 1), (1, 2), (0, 2)]
    for i in range(3):
        edges += [(3 + i, i), (3 + i, (i + 1) % 3)]
    return new_graph(6, edges)


def c5_attached(count):
    """C5 plus a vertex adjacent to `count` consecutive cycle vertices plus a hub."""
    _check('C5_attached', count, 0, 5)
    c5 = cycle(5)
    g = new_graph(6, c5.edges() + [(5, i) for i in range(count)])
    return add_dominating_vertex(g)


def k6_minus_matching():
    return new_graph(6, [e for e in combinations(range(6), 2)
                         if e not in ((0, 1), (2, 3), (4, 5))])


def fig4():
    """K4 ∪ C5 plus a dominating vertex: not neighborhood perfect, yet both indices are 5."""
    return add_dominating_vertex(disjoint_union(complete(4), cycle(5)))


# tag -> (arity, builder)
CATALOG = {
    'K': (1, complete),
    'Kbar': (1, empty),
    'Kmn': (2, complete_bipartite),
    'P': (1, path),
    'C': (1, cycle),
    'W': (1, wheel),
    'B': (1, antihole_wheel),
    'J': (1, jp),
    'claw': (0, lambda: add_dominating_vertex(empty(3))),
    'gem': (0, lambda: add_dominating_vertex(path(4))),
    'butterfly': (0, lambda: add_dominating_vertex(disjoint_union(complete(2), complete(2)))),
    'S3': (0, sun3),
    'C5_3': (0, lambda: c5_attached(3)),
    'C5_4': (0, lambda: c5_attached(4)),
    'K6m3e': (0, k6_minus_matching),
    'fig4': (0, fig4),
}


def catalog_names():
    """Tags with their arities, in catalog order."""
    return [(tag, arity) for tag, (arity, _) in CATALOG.items()]


def named(tag, *params) -> Graph:
    """Build a catalog graph from a NamedGraph or from a tag plus parameters."""
    if isinstance(tag, NamedGraph):
        tag, params = tag.tag, tag.params
    if tag not in CATALOG:
        raise GraphError(f"unknown catalog graph {tag!r}")
    arity, builder = CATALOG[tag]
    if len(params) != arity:
        raise GraphError(f"{tag} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)
