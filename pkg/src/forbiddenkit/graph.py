"""
Small immutable simple graphs stored as per-vertex bitsets.

Row i of ``Graph.adj`` is an int whose bit j is set exactly when {i, j}
is an edge. Capacity is one 32-bit word per row, which covers every
minimal forbidden graph up to k = 14 (they have at most 2k+3 vertices).

Also home of the human-authored edge-list text format:

    # comment
    4 3
    0 1
    1 2
    2 3
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple, Union

import networkx as nx

MAX_VERTICES = 32


class GraphError(ValueError):
    """Invalid graph input or violated operation precondition."""


# --- bit helpers ---

def popcount(x: int) -> int:
    return bin(x).count('1')


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of x in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class VertexSet:
    """A set of vertex indices of some host graph, as a bitset."""
    bits: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> 'VertexSet':
        bits = 0
        for v in vertices:
            if v < 0:
                raise GraphError(f"negative vertex index {v}")
            bits |= 1 << v
        return cls(bits)

    def __iter__(self):
        return iter_bits(self.bits)

    def __len__(self):
        return popcount(self.bits)

    def __contains__(self, v):
        return v >= 0 and bool(self.bits >> v & 1)

    def __bool__(self):
        return self.bits != 0

    def to_list(self):
        return list(iter_bits(self.bits))

    def __str__(self):
        return '{' + ','.join(str(v) for v in self) + '}'


MaskLike = Union[VertexSet, int, Iterable[int]]


def as_mask(s: MaskLike) -> int:
    if isinstance(s, VertexSet):
        return s.bits
    if isinstance(s, int):
        return s
    return VertexSet.of(s).bits


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1."""
    n: int
    adj: Tuple[int, ...]

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> 'Graph':
        """Build from adjacency rows, checking every representation invariant."""
        g = cls(n, tuple(rows))
        g.validate()
        return g

    def validate(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} rows, got {len(self.adj)}")
        outside = ~full_mask(self.n)
        for i, row in enumerate(self.adj):
            if row & outside:
                raise GraphError(f"row {i} has bits beyond vertex {self.n - 1}")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric edge {i}-{j}")

    @property
    def vertices(self) -> int:
        return full_mask(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self):
        return [popcount(row) for row in self.adj]

    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self):
        """Edges as (i, j) pairs with i < j, in row order."""
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))]

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.adj[v])

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _require_nonempty(g: Graph, operation: str):
    if g.n == 0:
        raise GraphError(f"{operation} is undefined on the empty graph")


# --- construction and transformations ---

def new_graph(n: int, edges: Iterable[Iterable[int]] = ()) -> Graph:
    """Build a graph from unordered vertex pairs; duplicate pairs are harmless."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for pair in edges:
        u, v = tuple(pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop ({u},{v}) is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.n, tuple(~row & full & ~(1 << i) for i, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: MaskLike) -> Graph:
    """Subgraph induced by s, relabeled 0..|s|-1 in ascending original order."""
    mask = as_mask(s)
    if mask & ~g.vertices:
        raise GraphError(f"vertex set {VertexSet(mask)} is not a subset of 0..{g.n - 1}")
    if mask == g.vertices:
        return g
    kept = list(iter_bits(mask))
    position = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(len(kept), tuple(rows))


def remove_vertex(g: Graph, x: int) -> Graph:
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range for n={g.n}")
    return induced_subgraph(g, g.vertices & ~(1 << x))


def add_dominating_vertex(g: Graph) -> Graph:
    """Append vertex n adjacent to every existing vertex."""
    if g.n >= MAX_VERTICES:
        raise GraphError(f"cannot add a vertex to a graph with {g.n} vertices")
    hub = 1 << g.n
    rows = tuple(row | hub for row in g.adj) + (g.vertices,)
    return Graph(g.n + 1, rows)


def dominating_vertices(g: Graph) -> VertexSet:
    _require_nonempty(g, 'dominating_vertices')
    bits = 0
    for v, row in enumerate(g.adj):
        if popcount(row) == g.n - 1:
            bits |= 1 << v
    return VertexSet(bits)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g on vertices 0..n-1 followed by h shifted up by n."""
    if g.n + h.n > MAX_VERTICES:
        raise GraphError(f"union would have {g.n + h.n} vertices")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


# --- edge-list text format ---

def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header plus m "i j" lines format."""
    lines = []
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphError("edge list is empty")
    try:
        header = [int(tok) for tok in lines[0].split()]
        pairs = [tuple(int(tok) for tok in line.split()) for line in lines[1:]]
    except ValueError as e:
        raise GraphError(f"edge list has a non-integer token: {e}") from None
    if len(header) != 2:
        raise GraphError(f"edge list header must be 'n m', got {lines[0]!r}")
    n, m = header
    if len(pairs) != m:
        raise GraphError(f"header announces {m} edges, found {len(pairs)}")
    for pair in pairs:
        if len(pair) != 2:
            raise GraphError(f"edge line must hold two vertices, got {pair}")
    return new_graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{i} {j}" for i, j in edges)
    return '\n'.join(out) + '\n'


# --- networkx interop ---

def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nxg


def from_networkx(nxg: nx.Graph) -> Graph:
    """Convert a networkx graph, relabeling nodes in sorted order."""
    if nx.number_of_selfloops(nxg):
        raise GraphError("networkx graph has self-loops")
    nodes = sorted(nxg.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return new_graph(len(nodes), ((index[u], index[v]) for u, v in nxg.edges()))
