"""
Minimal forbidden induced subgraphs of the hereditary classes

    Υ_k = { G : Δ(H) ≤ χ(H) - 1 + k for every induced subgraph H }
    Ω_k = { G : Δ(H) ≤ ω(H) - 1 + k for every induced subgraph H }

G is a minimal forbidden graph for the class with parameter p and index k
exactly when
  1. G has a unique dominating vertex v,
  2. CHI:   every color class of every optimal coloring of G - v has >= 2 vertices
     OMEGA: the intersection of all maximum cliques of G is exactly {v},
  3. Δ(G) = p(G) + k.

The class index of G (smallest k with G in the class) is the largest
Δ(H) - p(H) + 1 over induced subgraphs H. The maximum is always attained by
a vertex v together with a subset of its neighborhood: restricting H to
v and N_H(v) for a maximum-degree v keeps Δ and can only lower p. Those
stars are connected, so the scan below only looks at them.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from . import config
from .graph import Graph, GraphError, VertexSet, iter_bits, popcount, remove_vertex
from .invariants import (chromatic_number_within, clique_intersection_exactly,
                         clique_number_within, forced_multicolor_classes)
from .perfect import HOLE, is_neighborhood_perfect

logger = logging.getLogger(__name__)


class Parameter(enum.Enum):
    CHI = 'chi'
    OMEGA = 'omega'

    @classmethod
    def parse(cls, text):
        try:
            return cls(str(text).strip().lower())
        except ValueError:
            raise GraphError(f"unknown parameter {text!r}, expected chi or omega") from None

    def within(self, adj, mask):
        """χ or ω of the subgraph induced by mask."""
        if self is Parameter.CHI:
            return chromatic_number_within(adj, mask)
        return clique_number_within(adj, mask)

    def of(self, g: Graph):
        if g.n == 0:
            raise GraphError("parameters are undefined on the empty graph")
        return self.within(g.adj, g.vertices)

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConditionReport:
    parameter: Parameter
    k: int
    unique_dominating: bool
    hub: Optional[int]
    coloring_or_clique_condition: bool
    gap_condition: bool

    @property
    def verdict(self):
        return self.unique_dominating and self.coloring_or_clique_condition and self.gap_condition

    def __bool__(self):
        return self.verdict


@dataclass(frozen=True)
class ClassIndex:
    parameter: Parameter
    value: int
    witness: Optional[VertexSet] = None


def gap(g: Graph, p: Parameter) -> int:
    """Δ(G) - p(G) + 1 of the whole graph; not an upper bound for induced subgraphs."""
    if g.n == 0:
        raise GraphError("gap is undefined on the empty graph")
    return max(g.degrees()) - p.of(g) + 1


def is_minimal_forbidden(g: Graph, p: Parameter, k: int) -> ConditionReport:
    if g.n < 2:
        raise GraphError(f"a minimal forbidden graph has at least 2 vertices, got {g.n}")
    if k < 0:
        raise GraphError(f"k must be non-negative, got {k}")
    config.require_budget('class_index', g.n, 'is_minimal_forbidden')
    adj = g.adj
    full = g.vertices
    hubs = [v for v in range(g.n) if popcount(adj[v]) == g.n - 1]
    unique = len(hubs) == 1
    hub = hubs[0] if unique else None

    second = False
    if unique and p is Parameter.CHI:
        second = forced_multicolor_classes(remove_vertex(g, hub))
    elif unique:
        second = clique_intersection_exactly(g, hub)
    third = max(popcount(row) for row in adj) == p.within(adj, full) + k
    return ConditionReport(p, k, unique, hub, second, third)


# --- class index ---

def _star_scan(adj, mask, p: Parameter, cache=None):
    """Best (value, witness mask) over stars v + S, S ⊆ N(v), inside mask."""
    if cache is None:
        cache = {}
    best_value = 0
    best_witness = 0
    for v in iter_bits(mask):
        neighborhood = adj[v] & mask
        sub = neighborhood
        while sub:
            size = popcount(sub)
            candidate = sub
            sub = (sub - 1) & neighborhood
            # p >= 1 on a nonempty set, so size - 1 bounds the value
            if size - 1 <= best_value:
                continue
            param = cache.get(candidate)
            if param is None:
                omega = clique_number_within(adj, candidate)
                if p is Parameter.OMEGA:
                    param = omega
                elif size - omega <= best_value:
                    continue
                else:
                    param = chromatic_number_within(adj, candidate)
                cache[candidate] = param
            if size - param > best_value:
                best_value = size - param
                best_witness = candidate | (1 << v)
    return best_value, best_witness


def class_index(g: Graph, p: Parameter) -> ClassIndex:
    """Smallest k with g in Υ_k (CHI) or Ω_k (OMEGA), with a witness attaining it."""
    if g.n == 0:
        raise GraphError("class_index is undefined on the empty graph")
    config.require_budget('class_index', g.n, 'class_index')
    value, witness = _star_scan(g.adj, g.vertices, p)
    logger.debug(f"class index {p}: {value} witness {VertexSet(witness)}")
    return ClassIndex(p, value, VertexSet(witness) if value > 0 else None)


# --- neighborhood perfect graphs ---

def index_disagreement(g: Graph) -> Optional[VertexSet]:
    """
    First induced subgraph (ascending vertex mask) whose CHI and OMEGA class
    indices differ, or None. Dynamic program over all vertex masks: the index
    of a mask is the larger of its own star value (when it has a dominating
    vertex) and the indices of its one-vertex-smaller subsets.
    """
    config.require_budget('equivalence', g.n, 'neighborhood_perfect_equivalence')
    adj = g.adj
    size = 1 << g.n
    chi_index = [0] * size
    omega_index = [0] * size
    for mask in range(1, size):
        best_chi = 0
        best_omega = 0
        for x in iter_bits(mask):
            smaller = mask & ~(1 << x)
            best_chi = max(best_chi, chi_index[smaller])
            best_omega = max(best_omega, omega_index[smaller])
        count = popcount(mask)
        if any(popcount(adj[v] & mask) == count - 1 for v in iter_bits(mask)):
            best_omega = max(best_omega, count - clique_number_within(adj, mask))
            best_chi = max(best_chi, count - chromatic_number_within(adj, mask))
        chi_index[mask] = best_chi
        omega_index[mask] = best_omega
        if best_chi != best_omega:
            return VertexSet(mask)
    return None


def neighborhood_perfect_equivalence(g: Graph) -> bool:
    """True when every induced subgraph has equal CHI and OMEGA class indices."""
    if g.n == 0:
        raise GraphError("neighborhood_perfect_equivalence is undefined on the empty graph")
    return index_disagreement(g) is None


def separating_subgraph(g: Graph) -> Optional[Tuple[VertexSet, int, str]]:
    """
    For a graph that is not neighborhood perfect: an induced odd wheel W_{k+3}
    or odd anti-hole wheel B_{2k+1}, which lies in F(ω,k) but not in F(χ,k).
    Returns (vertex set, k, 'hole' | 'anti-hole'), or None.
    """
    verdict = is_neighborhood_perfect(g)
    if verdict:
        return None
    certificate = verdict.verdict.certificate
    length = len(certificate)
    if verdict.verdict.kind == HOLE:
        k = length - 3
    else:
        k = (length - 1) // 2
    vertices = VertexSet(certificate.bits | (1 << verdict.vertex))
    return vertices, k, verdict.verdict.kind
