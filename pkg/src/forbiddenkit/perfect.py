"""
Perfectness by brute force over the Strong Perfect Graph Theorem: a graph is
perfect iff it has no odd hole (induced odd cycle of length >= 5) and no odd
anti-hole. Exponential in the worst case, fine within the vertex budgets.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

from . import config
from .graph import Graph, VertexSet, iter_bits

logger = logging.getLogger(__name__)

HOLE = 'hole'
ANTI_HOLE = 'anti-hole'


@dataclass(frozen=True)
class PerfectnessVerdict:
    is_perfect: bool
    certificate: Optional[VertexSet] = None
    kind: Optional[str] = None

    def __bool__(self):
        return self.is_perfect


@dataclass(frozen=True)
class NeighborhoodVerdict:
    is_neighborhood_perfect: bool
    vertex: Optional[int] = None
    verdict: Optional[PerfectnessVerdict] = None

    def __bool__(self):
        return self.is_neighborhood_perfect


def find_odd_hole_within(adj, mask) -> Optional[List[int]]:
    """
    First induced odd cycle of length >= 5 inside `mask`, as a vertex list in
    cycle order, or None. Cycles are rooted at their smallest vertex and grown
    as chordless paths in ascending vertex order.
    """
    for s in iter_bits(mask):
        higher = mask & ~((2 << s) - 1)
        for p1 in iter_bits(adj[s] & higher):
            found = _extend(adj, s, [s, p1], 0, (1 << s) | (1 << p1), higher)
            if found:
                return found
    return None


def _extend(adj, s, path, inner, on_path, higher):
    # inner: union of neighborhoods of path[1:-1]; no new vertex may touch them
    last = path[-1]
    candidates = adj[last] & higher & ~inner & ~on_path
    for w in iter_bits(candidates):
        if adj[s] >> w & 1:
            length = len(path) + 1
            if length >= 5 and length % 2 == 1:
                return path + [w]
            continue
        found = _extend(adj, s, path + [w], inner | adj[last], on_path | (1 << w), higher)
        if found:
            return found
    return None


def _complement_rows(adj, mask):
    rows = list(adj)
    for v in iter_bits(mask):
        rows[v] = ~adj[v] & mask & ~(1 << v)
    return rows


def perfectness_within(adj, mask) -> PerfectnessVerdict:
    hole = find_odd_hole_within(adj, mask)
    if hole:
        return PerfectnessVerdict(False, VertexSet.of(hole), HOLE)
    anti = find_odd_hole_within(_complement_rows(adj, mask), mask)
    if anti:
        return PerfectnessVerdict(False, VertexSet.of(anti), ANTI_HOLE)
    return PerfectnessVerdict(True)


def is_perfect(g: Graph) -> PerfectnessVerdict:
    config.require_budget('perfect', g.n, 'is_perfect')
    return perfectness_within(g.adj, g.vertices)


def is_neighborhood_perfect(g: Graph) -> NeighborhoodVerdict:
    """Every open neighborhood induces a perfect graph; reports the first failing vertex."""
    config.require_budget('neighborhood_perfect', g.n, 'is_neighborhood_perfect')
    for v in range(g.n):
        verdict = perfectness_within(g.adj, g.adj[v])
        if not verdict:
            logger.debug(f"neighborhood of {v} has an odd {verdict.kind} {verdict.certificate}")
            return NeighborhoodVerdict(False, v, verdict)
    return NeighborhoodVerdict(True)
