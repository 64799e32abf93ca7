"""
Test Δ, ω, χ, q-colorability and the two deletion criteria against
exhaustive oracles.
Run from project root with: python -m tests.testinvariants
"""
import sys
import os
import random

# Add the src directory to path so 'import forbiddenkit' works
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import networkx as nx

from forbiddenkit.catalog import named
from forbiddenkit.generate import iter_nonisomorphic
from forbiddenkit.graph import GraphError, from_networkx, new_graph, to_networkx
from forbiddenkit.invariants import (chromatic_number, clique_intersection_exactly, clique_number,
                                     empty_clique_intersection, forced_multicolor_classes,
                                     invariant_record, is_q_colorable, max_degree)
from forbiddenkit.perfect import is_perfect


def random_graph(rng, n, p=0.5):
    return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


# --- exhaustive oracles ---

def all_colorings(g, q):
    """Every proper coloring with colors 0..q-1, as color lists."""
    colors = [-1] * g.n
    found = []

    def place(v):
        if v == g.n:
            found.append(list(colors))
            return
        for c in range(q):
            if all(colors[u] != c for u in range(v) if g.has_edge(u, v)):
                colors[v] = c
                place(v + 1)
        colors[v] = -1

    place(0)
    return found


def oracle_chi(g):
    q = 1
    while not all_colorings(g, q):
        q += 1
    return q


def oracle_forced_multicolor(g):
    chi = oracle_chi(g)
    for coloring in all_colorings(g, chi):
        if any(coloring.count(c) == 1 for c in range(chi)):
            return False
    return True


def oracle_maximum_cliques(g):
    cliques = list(nx.find_cliques(to_networkx(g)))
    omega = max(len(c) for c in cliques)
    return [set(c) for c in cliques if len(c) == omega]


def test_known_values():
    print("=== Testing known invariants ===")
    cases = [
        ('C', (5,), 2, 2, 3),
        ('W', (5,), 5, 3, 4),
        ('K', (6,), 5, 6, 6),
        ('Kbar', (4,), 0, 1, 1),
        ('fig4', (), 9, 5, 5),
        ('J', (4,), 5, 5, 5),
        ('B', (7,), 7, 4, 5),
    ]
    for tag, params, delta, omega, chi in cases:
        g = named(tag, *params)
        assert max_degree(g) == delta, f"{tag}{params}: Δ"
        assert clique_number(g) == omega, f"{tag}{params}: ω"
        assert chromatic_number(g) == chi, f"{tag}{params}: χ"
        print(f"  {tag}{params}: Δ={delta} ω={omega} χ={chi} ✓")

    petersen = from_networkx(nx.petersen_graph())
    assert clique_number(petersen) == 2 and chromatic_number(petersen) == 3
    print("  Petersen: ω=2 χ=3 ✓")

    record = invariant_record(named('W', 5))
    assert (record.n, record.max_degree, record.clique_number, record.chromatic_number) == (6, 5, 3, 4)
    print("  invariant_record(W5) ✓")
    print("  ✓ Known values OK\n")


def test_colorability():
    print("=== Testing q-colorability ===")
    w5 = named('W', 5)
    assert not is_q_colorable(w5, 3) and is_q_colorable(w5, 4)
    assert is_q_colorable(named('C', 6), 2) and not is_q_colorable(named('C', 7), 2)
    assert is_q_colorable(named('K', 3), 10)
    for bad in (0, -1):
        try:
            is_q_colorable(w5, bad)
            assert False, "q < 1 accepted"
        except GraphError:
            pass
    try:
        chromatic_number(new_graph(0))
        assert False, "empty graph accepted"
    except GraphError:
        pass
    print("  Odd cycles, wheels, large q and bad input ✓")
    print("  ✓ Colorability OK\n")


def test_against_oracles():
    print("=== Testing against exhaustive oracles ===")
    rng = random.Random(3)
    for trial in range(150):
        g = random_graph(rng, rng.randint(1, 7), rng.choice([0.3, 0.5, 0.7]))
        cliques = oracle_maximum_cliques(g)
        assert clique_number(g) == len(cliques[0])
        chi = oracle_chi(g)
        assert chromatic_number(g) == chi, f"χ mismatch on {g}"
        assert is_q_colorable(g, chi) and (chi == 1 or not is_q_colorable(g, chi - 1))
        assert max_degree(g) == max(d for _, d in to_networkx(g).degree())
        assert forced_multicolor_classes(g) == oracle_forced_multicolor(g), f"forced mismatch on {g}"
        intersection = set.intersection(*cliques)
        assert empty_clique_intersection(g) == (not intersection)
        for v in range(g.n):
            assert clique_intersection_exactly(g, v) == (intersection == {v})
    print("  150 random graphs: ω, χ, Δ and both deletion criteria agree ✓")
    print("  ✓ Oracles OK\n")


def test_deletion_criteria_examples():
    print("=== Testing deletion criteria on named graphs ===")
    assert forced_multicolor_classes(named('C', 4))
    assert forced_multicolor_classes(named('Kbar', 3))
    assert forced_multicolor_classes(named('Kbar', 2))
    assert not forced_multicolor_classes(named('P', 3))
    # χ(C5 - x) = χ(P4) = 2, so every vertex can be a singleton class
    assert not forced_multicolor_classes(named('C', 5))
    assert empty_clique_intersection(named('C', 5))
    assert not empty_clique_intersection(named('P', 3))
    assert clique_intersection_exactly(named('W', 5), 5)
    assert not clique_intersection_exactly(named('W', 4), 0)
    print("  C4, K̄3, K̄2 forced; P3, C5 not; W5 hub ✓")
    print("  ✓ Deletion criteria OK\n")


def test_deletion_criteria_agree_on_perfect_graphs():
    """On perfect graphs the two deletion criteria coincide."""
    print("=== Testing the perfect-graph criterion equivalence ===")
    top = 7
    checked = 0
    for n in range(1, top + 1):
        for g in iter_nonisomorphic(n):
            if not is_perfect(g):
                continue
            assert empty_clique_intersection(g) == forced_multicolor_classes(g), f"disagreement on {g}"
            checked += 1
    print(f"  {checked} perfect graphs with n <= {top}: zero disagreements ✓")
    print("  ✓ Equivalence OK\n")


if __name__ == '__main__':
    test_known_values()
    test_colorability()
    test_against_oracles()
    test_deletion_criteria_examples()
    test_deletion_criteria_agree_on_perfect_graphs()
