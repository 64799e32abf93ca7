"""
Forbidden families F(χ,k) and F(ω,k): enumeration, verification, files.

Enumeration runs over H = G - v instead of G. A minimal forbidden G on
m+1 vertices has Δ(G) = m, so p(G) = m - k and p(H) = m - k - 1 (the hub
adds one color and one clique vertex). Since p(H) >= 1 and every color
class of H has at least two vertices, m runs over k+2 .. 2k+2. For each
non-isomorphic H on m vertices we keep it when
  * H has no dominating vertex (so the added hub is the unique one),
  * CHI:   χ(H) = m-k-1 and no vertex is a singleton class of an optimal coloring,
    OMEGA: ω(H) = m-k-1 and the maximum cliques of H have empty intersection,
and emit G = H + hub. verify_family re-checks every emitted G against the
full characterization.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from datetime import datetime
from itertools import permutations
from typing import Dict, List, Optional, Tuple

from . import __version__, config
from .catalog import complete_bipartite, k6_minus_matching, named
from .config import BudgetExceeded
from .forbidden import Parameter, is_minimal_forbidden
from .generate import Node, shard_roots, walk
from .graph import (Graph, GraphError, add_dominating_vertex, dominating_vertices, new_graph,
                    popcount, remove_vertex)
from .graph6 import read_graph6_file
from .invariants import clique_number_within, colorable_within, has_clique_within
from .iso import CanonicalForm, Embedding, are_isomorphic, canonical_form, canonical_graph, contains_induced
from .perfect import is_perfect

logger = logging.getLogger(__name__)

ENGINE_VERSION = f"forbiddenkit-{__version__}"

# Published sizes; a mismatch is reported as a finding, never patched over.
KNOWN_COUNTS = {
    (Parameter.CHI, 0): 1,
    (Parameter.CHI, 1): 4,
    (Parameter.CHI, 2): 24,
    (Parameter.CHI, 3): 402,
    (Parameter.CHI, 4): 25788,
    (Parameter.OMEGA, 0): 1,
    (Parameter.OMEGA, 1): 4,
    (Parameter.OMEGA, 2): 23,
}


@dataclass
class ForbiddenFamily:
    parameter: Optional[Parameter]
    k: Optional[int]
    members: Dict[CanonicalForm, Graph] = field(default_factory=dict)
    vertex_range: Optional[Tuple[int, int]] = None
    generated_at: str = ''
    engine_version: str = ENGINE_VERSION

    def add(self, g: Graph) -> bool:
        """Insert a member by canonical form; returns False for a duplicate."""
        form = canonical_form(g)
        if form in self.members:
            return False
        self.members[form] = canonical_graph(g)
        return True

    def __len__(self):
        return len(self.members)

    def __contains__(self, g: Graph):
        return canonical_form(g) in self.members

    def forms(self):
        return set(self.members)

    def sorted_members(self) -> List[Tuple[CanonicalForm, Graph]]:
        return sorted(self.members.items())

    def graphs(self) -> List[Graph]:
        return [g for _, g in self.sorted_members()]

    def __str__(self):
        return f"F({self.parameter},{self.k}) with {len(self)} members"


def histogram(fam: ForbiddenFamily) -> Dict[int, int]:
    """Member count per vertex count."""
    counts = {}
    for form in fam.members:
        counts[form.n] = counts.get(form.n, 0) + 1
    return dict(sorted(counts.items()))


# --- enumeration ---

def candidate_accepts(h: Graph, p: Parameter, k: int) -> bool:
    """True when H + hub is a minimal forbidden graph for (p, k)."""
    m = h.n
    target = m - k - 1
    if target < 1:
        return False
    adj = h.adj
    full = h.vertices
    if any(popcount(row) == m - 1 for row in adj):
        return False
    # p(H) = target needs at least C(target, 2) edges
    if h.edge_count() < target * (target - 1) // 2:
        return False
    if p is Parameter.CHI:
        if clique_number_within(adj, full) > target:
            return False
        if not colorable_within(adj, full, target) or colorable_within(adj, full, target - 1):
            return False
        return not any(colorable_within(adj, full & ~(1 << x), target - 1) for x in range(m))
    if clique_number_within(adj, full) != target:
        return False
    return all(has_clique_within(adj, full & ~(1 << x), target) for x in range(m))


def scan_shard(root: Node, m: int, p: Parameter, k: int) -> Tuple[int, List[Graph]]:
    """Candidates scanned and canonical members found below one shard root."""
    candidates = 0
    found = []
    for h in walk(root, m):
        candidates += 1
        if candidate_accepts(h, p, k):
            found.append(canonical_graph(add_dominating_vertex(h)))
    return candidates, found


def check_family_k(k: int):
    if k < 0:
        raise GraphError(f"k must be non-negative, got {k}")
    limit = config.budget('family_k')
    if k > limit:
        raise BudgetExceeded('enumerate_family', k, limit, unit='k')


def candidate_orders(k: int) -> range:
    """Vertex counts of H = G - hub that can occur for index k."""
    return range(k + 2, 2 * k + 3)


def report_count(fam: ForbiddenFamily):
    expected = KNOWN_COUNTS.get((fam.parameter, fam.k))
    if expected is not None and expected != len(fam):
        logger.warning(f"F({fam.parameter},{fam.k}) has {len(fam)} members, published count is "
                       f"{expected}; per vertex count: {histogram(fam)}")


def enumerate_family(p: Parameter, k: int) -> ForbiddenFamily:
    """F(p, k), computed in-process. See familyjob for the sharded, resumable run."""
    check_family_k(k)
    fam = ForbiddenFamily(p, k, vertex_range=(k + 3, 2 * k + 3))
    for m in candidate_orders(k):
        before = len(fam)
        scanned = 0
        for root in shard_roots(m):
            count, members = scan_shard(root, m, p, k)
            scanned += count
            for g in members:
                fam.add(g)
        logger.info(f"F({p},{k}): {scanned} candidates on {m} vertices, {len(fam) - before} members")
    fam.generated_at = datetime.now().isoformat(timespec='seconds')
    report_count(fam)
    return fam


# --- membership ---

@dataclass(frozen=True)
class Membership:
    is_member: bool
    member: Optional[Graph] = None
    embedding: Optional[Embedding] = None

    def __bool__(self):
        return self.is_member


def is_member_via_family(g: Graph, fam: ForbiddenFamily) -> Membership:
    """g is in the class iff no family member is an induced subgraph of g."""
    for _, member in fam.sorted_members():
        if member.n > g.n:
            continue
        embedding = contains_induced(g, member)
        if embedding is not None:
            return Membership(False, member, embedding)
    return Membership(True)


def free_equivalence(g: Graph, k: int, fam_chi: ForbiddenFamily, fam_omega: ForbiddenFamily) -> bool:
    """g is F(ω,k)-free exactly when it is F(χ,k)-free."""
    if fam_chi.k != k or fam_omega.k != k:
        raise GraphError(f"families are for k={fam_chi.k} and k={fam_omega.k}, expected {k}")
    return bool(is_member_via_family(g, fam_chi)) == bool(is_member_via_family(g, fam_omega))


# --- verification ---

@dataclass
class FamilyReport:
    parameter: Parameter
    k: int
    count: int = 0
    perfect: int = 0
    violations: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def fail(self, form: CanonicalForm, message: str):
        self.violations.append((form.graph6(), message))
        logger.warning(f"F({self.parameter},{self.k}) member {form.graph6()}: {message}")


def _other(p: Parameter) -> Parameter:
    return Parameter.OMEGA if p is Parameter.CHI else Parameter.CHI


def verify_family(fam: ForbiddenFamily, other: ForbiddenFamily = None) -> FamilyReport:
    """
    Re-check every member: Δ = |V|-1, p = |V|-k-1, the vertex and χ bounds,
    minimality by the characterization, and that perfect members also belong
    to the family of the other parameter (checked directly, and against
    `other` when given).
    """
    if not len(fam):
        raise GraphError("cannot verify an empty family")
    p, k = fam.parameter, fam.k
    report = FamilyReport(p, k, count=len(fam))
    perfect_forms = set()
    for form, g in fam.sorted_members():
        n = g.n
        if canonical_form(g) != form:
            report.fail(form, "stored graph does not match its canonical form")
        delta = max(g.degrees())
        value = p.of(g)
        if delta != n - 1:
            report.fail(form, f"Δ = {delta}, expected |V|-1 = {n - 1}")
        if value != n - k - 1:
            report.fail(form, f"{p} = {value}, expected |V|-k-1 = {n - k - 1}")
        if not k + 3 <= n <= 2 * k + 3:
            report.fail(form, f"{n} vertices outside {k + 3}..{2 * k + 3}")
        if p is Parameter.CHI:
            if not 2 * value - 2 <= delta <= 2 * k + 2:
                report.fail(form, f"2χ-2 ≤ Δ ≤ 2k+2 violated (χ={value}, Δ={delta})")
            if not 2 <= value <= k + 2:
                report.fail(form, f"2 ≤ χ ≤ k+2 violated (χ={value})")
        if not is_minimal_forbidden(g, p, k):
            report.fail(form, "fails the minimal forbidden characterization")
        if is_perfect(g):
            report.perfect += 1
            perfect_forms.add(form)
            if not is_minimal_forbidden(g, _other(p), k):
                report.fail(form, f"perfect member is not minimal forbidden for {_other(p)}")
    if other is not None:
        other_perfect = {form for form, g in other.members.items() if is_perfect(g)}
        for form in sorted(perfect_forms ^ other_perfect):
            report.fail(form, "perfect members of the two families differ")
    logger.info(f"verified F({p},{k}): {report.count} members, {report.perfect} perfect, "
                f"{len(report.violations)} violations")
    return report


# --- k = 2 structure ---

def _edge_sandwich(h: Graph, lower: Graph, upper: Graph) -> bool:
    """Some relabeling of h has lower's edges and only upper's edges (same vertex count)."""
    if not h.n == lower.n == upper.n:
        return False
    if not lower.edge_count() <= h.edge_count() <= upper.edge_count():
        return False
    for order in permutations(range(h.n)):
        fits = True
        for i, v in enumerate(order):
            row = 0
            for j, u in enumerate(order):
                if h.adj[v] >> u & 1:
                    row |= 1 << j
            if lower.adj[i] & ~row or row & ~upper.adj[i]:
                fits = False
                break
        if fits:
            return True
    return False


def f2_case(g: Graph) -> Optional[str]:
    """Which structural case of the k = 2 description g - hub falls into, if any."""
    if g.n < 2:
        return None
    hubs = dominating_vertices(g).to_list()
    if not hubs:
        return None
    h = remove_vertex(g, hubs[-1])
    if h.n == 4 and h.edge_count() == 0:
        return 'K4bar'
    if h.n == 5:
        # K2 ∪ K2 ∪ K1 labeled inside K_{2,3} with parts {0,1} | {2,3,4}
        if _edge_sandwich(h, new_graph(5, [(0, 2), (1, 3)]), complete_bipartite(2, 3)):
            return 'sandwich5'
        if are_isomorphic(h, named('C', 5)):
            return 'C5'
        return None
    if h.n == 6:
        for tag in ('S3', 'C5_3', 'C5_4'):
            reference = named(tag)
            if tag != 'S3':
                reference = remove_vertex(reference, reference.n - 1)
            if are_isomorphic(h, reference):
                return tag
        # K3 ∪ K3 labeled inside K6 minus the matching 01, 23, 45
        two_triangles = new_graph(6, [(0, 2), (0, 4), (2, 4), (1, 3), (1, 5), (3, 5)])
        if _edge_sandwich(h, two_triangles, k6_minus_matching()):
            return 'two_triangles'
    return None


# --- files ---

def meta_path(path) -> str:
    return f"{path}.meta"


def write_family(fam: ForbiddenFamily, path):
    """Write sorted canonical graph6 lines plus the key=value sidecar."""
    members = fam.sorted_members()
    with open(path, 'w', newline='\n') as f:
        for form, _ in members:
            f.write(form.graph6() + '\n')
    low, high = fam.vertex_range or (0, 0)
    meta = [
        ('parameter', str(fam.parameter)),
        ('k', str(fam.k)),
        ('count', str(len(fam))),
        ('vertex_range', f"{low}-{high}"),
        ('engine_version', fam.engine_version),
        ('generated_at', fam.generated_at),
        ('histogram', ','.join(f"{n}:{c}" for n, c in histogram(fam).items())),
    ]
    with open(meta_path(path), 'w', newline='\n') as f:
        for key, value in meta:
            f.write(f"{key}={value}\n")
    logger.info(f"Wrote {len(members)} members to {path}")


def read_meta(path) -> Dict[str, str]:
    meta = {}
    sidecar = meta_path(path)
    if not os.path.exists(sidecar):
        return meta
    with open(sidecar) as f:
        for line in f:
            line = line.strip()
            if line and '=' in line:
                key, value = line.split('=', 1)
                meta[key.strip()] = value.strip()
    return meta


def read_family(path, parameter: Parameter = None, k: int = None) -> ForbiddenFamily:
    """Load a family file, canonicalizing every line; the sidecar fills in p and k."""
    meta = read_meta(path)
    if parameter is None and meta.get('parameter') not in (None, '', 'None'):
        parameter = Parameter.parse(meta['parameter'])
    if k is None and meta.get('k', '').isdigit():
        k = int(meta['k'])
    fam = ForbiddenFamily(parameter, k)
    if '-' in meta.get('vertex_range', ''):
        low, high = meta['vertex_range'].split('-', 1)
        fam.vertex_range = (int(low), int(high))
    fam.generated_at = meta.get('generated_at', '')
    fam.engine_version = meta.get('engine_version', ENGINE_VERSION)
    for line_no, g in read_graph6_file(path):
        if not fam.add(g):
            logger.warning(f"{path}:{line_no}: duplicate isomorphism class ignored")
    return fam


def diff_families(a: ForbiddenFamily, b: ForbiddenFamily):
    """(A-only, B-only) canonical forms, each sorted."""
    a_forms, b_forms = a.forms(), b.forms()
    return sorted(a_forms - b_forms), sorted(b_forms - a_forms)
