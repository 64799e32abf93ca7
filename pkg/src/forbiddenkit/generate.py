"""
Generation of pairwise non-isomorphic graphs by canonical augmentation.

Every graph on m vertices is reached from exactly one representative on
m-1 vertices: its canonical parent, obtained by deleting the vertex that
its canonical labeling places last. A child built from a parent is kept
only if it passes that canonical-parent test, and children of one parent
are deduplicated locally, so no global seen-set is needed and the subtrees
below distinct parents can be walked independently (one shard each).
"""
from __future__ import annotations

import logging
from itertools import combinations
from typing import Callable, Iterator, List, Tuple

from . import config
from .graph import Graph, GraphError, popcount, remove_vertex
from .iso import CanonicalForm, canonical_form, canonical_labeling, relabel

logger = logging.getLogger(__name__)

Node = Tuple[Graph, CanonicalForm]

ROOT: Node = (Graph(1, (0,)), CanonicalForm(1, 0))


def _check_order(m):
    limit = config.budget('generation')
    if not 1 <= m <= limit:
        raise GraphError(f"vertex count {m} outside the generation range 1..{limit}")


def children(parent: Node) -> Iterator[Node]:
    """
    Canonical children of a canonically labeled parent, in ascending
    neighborhood-mask order. Each yielded graph is canonically labeled.
    """
    graph, form = parent
    n = graph.n
    m = n + 1
    new_bit = 1 << n
    verdicts = {}
    for mask in range(1 << n):
        rows = tuple(row | new_bit if mask >> i & 1 else row for i, row in enumerate(graph.adj))
        child = Graph(m, rows + (mask,))
        # the vertex placed last canonically has maximum degree
        new_degree = popcount(mask)
        if any(popcount(row) > new_degree for row in child.adj):
            continue
        order, bits = canonical_labeling(child)
        if bits in verdicts:
            continue
        last = order[-1]
        verdicts[bits] = last == n or canonical_form(remove_vertex(child, last)) == form
        if not verdicts[bits]:
            continue
        yield relabel(child, order), CanonicalForm(m, bits)


def walk(root: Node, m: int) -> Iterator[Graph]:
    """All canonical graphs on m vertices in the subtree below root (root included when root.n == m)."""
    graph, _ = root
    if graph.n == m:
        yield graph
        return
    if graph.n > m:
        return
    for child in children(root):
        yield from walk(child, m)


def level(m: int) -> List[Node]:
    """Representatives on m vertices, sorted by canonical form."""
    _check_order(m)
    nodes = []
    stack = [ROOT]
    while stack:
        node = stack.pop()
        if node[0].n == m:
            nodes.append(node)
        else:
            stack.extend(children(node))
    nodes.sort(key=lambda node: node[1])
    return nodes


def shard_roots(m: int, shard_level: int = None) -> List[Node]:
    """
    Independent work units for level m: the representatives at the shard
    level (capped at m-1), in canonical order. Their subtrees partition level m.
    """
    _check_order(m)
    if shard_level is None:
        shard_level = config.shard_level()
    depth = max(1, min(m - 1, shard_level))
    return level(depth)


def enumerate_nonisomorphic(m: int, sink: Callable[[Graph], None]) -> int:
    """Deliver one canonical representative per isomorphism class on m vertices; return the count."""
    _check_order(m)
    count = 0
    for root in shard_roots(m):
        for g in walk(root, m):
            sink(g)
            count += 1
    logger.info(f"Generated {count} graphs on {m} vertices")
    return count


def iter_nonisomorphic(m: int) -> Iterator[Graph]:
    _check_order(m)
    for root in shard_roots(m):
        yield from walk(root, m)


def nonisomorphic_by_dedup(m: int) -> set:
    """Canonical forms of every labeled graph on m vertices; the cross-check oracle."""
    if not 1 <= m <= 7:
        raise GraphError(f"dedup generation is limited to 1..7 vertices, got {m}")
    pairs = list(combinations(range(m), 2))
    forms = set()
    for code in range(1 << len(pairs)):
        rows = [0] * m
        for idx, (u, v) in enumerate(pairs):
            if code >> idx & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        forms.add(canonical_form(Graph(m, tuple(rows))))
    return forms
