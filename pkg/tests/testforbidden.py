"""
Test the minimal forbidden graph characterization, the class index and
neighborhood perfect equivalence.
Run from project root with: python -m tests.testforbidden
"""
import sys
import os
import random
from itertools import combinations

# Add the src directory to path so 'import forbiddenkit' works
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from forbiddenkit.catalog import named
from forbiddenkit.config import BudgetExceeded
from forbiddenkit.forbidden import (Parameter, class_index, gap, index_disagreement,
                                    is_minimal_forbidden, neighborhood_perfect_equivalence,
                                    separating_subgraph)
from forbiddenkit.generate import iter_nonisomorphic
from forbiddenkit.graph import (GraphError, add_dominating_vertex, induced_subgraph, new_graph,
                               remove_vertex)
from forbiddenkit.invariants import chromatic_number, clique_number
from forbiddenkit.perfect import ANTI_HOLE, HOLE, is_neighborhood_perfect

CHI, OMEGA = Parameter.CHI, Parameter.OMEGA

def random_graph(rng, n, p=0.5):
    return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def add_hub(tag):
    return add_dominating_vertex(named(tag))


def oracle_index(g, p):
    """max over every induced subgraph H of Δ(H) - p(H) + 1."""
    best = 0
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            h = induced_subgraph(g, subset)
            value = chromatic_number(h) if p is CHI else clique_number(h)
            best = max(best, max(h.degrees()) - value + 1)
    return best


def test_parameter():
    print("=== Testing Parameter ===")
    assert Parameter.parse('chi') is CHI and Parameter.parse(' OMEGA ') is OMEGA
    assert str(CHI) == 'chi'
    try:
        Parameter.parse('delta')
        assert False, "unknown parameter accepted"
    except GraphError:
        pass
    assert CHI.of(named('W', 5)) == 4 and OMEGA.of(named('W', 5)) == 3
    print("  parse, str and of ✓")
    print("  ✓ Parameter OK\n")


def test_minimal_forbidden_examples():
    print("=== Testing is_minimal_forbidden ===")
    report = is_minimal_forbidden(named('P', 3), CHI, 0)
    assert report and report.hub == 1 and report.unique_dominating
    assert is_minimal_forbidden(named('P', 3), OMEGA, 0)
    print("  P3 for k=0, hub 1 ✓")

    for tag in ('claw', 'gem', 'butterfly'):
        assert is_minimal_forbidden(named(tag), CHI, 1), tag
        assert is_minimal_forbidden(named(tag), OMEGA, 1), tag
    assert is_minimal_forbidden(named('W', 4), CHI, 1)
    assert is_minimal_forbidden(named('W', 4), OMEGA, 1)
    print("  claw, gem, W4, butterfly for k=1, both parameters ✓")

    assert is_minimal_forbidden(named('W', 5), OMEGA, 2)
    report = is_minimal_forbidden(named('W', 5), CHI, 2)
    assert not report and report.unique_dominating and not report.gap_condition
    for tag in ('C5_3', 'C5_4'):
        assert is_minimal_forbidden(named(tag), CHI, 2), tag
        report = is_minimal_forbidden(named(tag), OMEGA, 2)
        assert not report and not report.coloring_or_clique_condition, tag
    assert is_minimal_forbidden(add_hub('S3'), CHI, 2)
    assert is_minimal_forbidden(add_hub('S3'), OMEGA, 2)
    print("  W5 only for ω, C5_3/C5_4 only for χ, 3-sun + hub for both at k=2 ✓")

    report = is_minimal_forbidden(named('K', 3), CHI, 0)
    assert not report and not report.unique_dominating and report.hub is None
    assert not is_minimal_forbidden(named('claw'), CHI, 2)
    assert not is_minimal_forbidden(named('P', 4), CHI, 0)
    print("  K3, claw at the wrong k, P4 rejected ✓")

    for bad in [(named('K', 1), CHI, 0), (named('P', 3), CHI, -1)]:
        try:
            is_minimal_forbidden(*bad)
            assert False, "bad input accepted"
        except GraphError:
            pass
    print("  ✓ Characterization OK\n")


def test_separating_wheels():
    print("=== Testing odd wheels and anti-hole wheels ===")
    for k in (2, 4):
        w = named('W', k + 3)
        assert is_minimal_forbidden(w, OMEGA, k) and not is_minimal_forbidden(w, CHI, k)
        print(f"  W{k + 3} in F(ω,{k}) but not F(χ,{k}) ✓")
    for k in (3, 5):
        w = named('W', k + 3)
        assert is_minimal_forbidden(w, OMEGA, k) and is_minimal_forbidden(w, CHI, k)
        print(f"  even wheel W{k + 3} lies in both families for k={k} ✓")
    for k in (2, 3, 4, 5):
        b = named('B', 2 * k + 1)
        assert is_minimal_forbidden(b, OMEGA, k) and not is_minimal_forbidden(b, CHI, k)
        print(f"  B{2 * k + 1} in F(ω,{k}) but not F(χ,{k}) ✓")
    print("  ✓ Wheels OK\n")


def test_class_index_examples():
    print("=== Testing class_index ===")
    result = class_index(named('claw'), CHI)
    assert result.value == 2 and result.witness.to_list() == [0, 1, 2, 3]
    assert class_index(named('claw'), OMEGA).value == 2
    assert class_index(named('W', 5), CHI).value == 2
    assert class_index(named('W', 5), OMEGA).value == 3
    assert class_index(named('fig4'), CHI).value == 5
    assert class_index(named('fig4'), OMEGA).value == 5
    result = class_index(named('K', 1), CHI)
    assert result.value == 0 and result.witness is None
    assert class_index(named('K', 6), OMEGA).value == 0
    print("  claw 2 with witness, W5 2/3, fig4 5/5, K1 and K6 0 ✓")

    j4 = named('J', 4)
    assert gap(j4, CHI) == 1
    assert class_index(j4, CHI).value == 3
    print("  J4: whole-graph gap 1 but class index 3 ✓")

    try:
        class_index(named('K', 15), CHI)
        assert False, "15 vertices accepted"
    except BudgetExceeded:
        pass
    print("  ✓ Class index OK\n")


def test_class_index_oracle():
    print("=== Testing class_index against all subsets ===")
    rng = random.Random(9)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 7), rng.choice([0.3, 0.5, 0.7]))
        for p in (CHI, OMEGA):
            result = class_index(g, p)
            assert result.value == oracle_index(g, p), f"{p} mismatch on {g}"
            if result.witness:
                h = induced_subgraph(g, result.witness)
                assert max(h.degrees()) - p.of(h) + 1 == result.value
    print("  80 random graphs, both parameters, witnesses attain the value ✓")
    print("  ✓ Oracle OK\n")


def test_chi_index_never_exceeds_omega_index():
    print("=== Testing class_index(χ) <= class_index(ω) ===")
    checked = 0
    for n in range(1, 8):
        for g in iter_nonisomorphic(n):
            assert class_index(g, CHI).value <= class_index(g, OMEGA).value, f"{g}"
            checked += 1
    rng = random.Random(31)
    for _ in range(150):
        g = random_graph(rng, rng.choice([8, 9]), rng.choice([0.3, 0.5, 0.7]))
        assert class_index(g, CHI).value <= class_index(g, OMEGA).value, f"{g}"
        checked += 1
    print(f"  {checked} graphs with n <= 9 ✓")
    print("  ✓ Ordering OK\n")


def test_class_index_is_hereditary():
    print("=== Testing class_index under vertex deletion ===")
    rng = random.Random(17)
    for _ in range(120):
        g = random_graph(rng, rng.randint(2, 9), rng.choice([0.3, 0.5, 0.7]))
        for p in (CHI, OMEGA):
            value = class_index(g, p).value
            for x in range(g.n):
                assert class_index(remove_vertex(g, x), p).value <= value, f"{p} grows on {g} - {x}"
    print("  120 random graphs: no induced subgraph has a larger index ✓")
    print("  ✓ Hereditary OK\n")


def test_neighborhood_perfect_equivalence():
    print("=== Testing neighborhood perfect equivalence ===")
    assert neighborhood_perfect_equivalence(named('C', 5))
    assert not neighborhood_perfect_equivalence(named('W', 5))
    assert index_disagreement(named('W', 5)).to_list() == list(range(6))
    assert not neighborhood_perfect_equivalence(named('fig4'))
    print("  C5 yes, W5 and fig4 no ✓")

    top = 7
    checked = 0
    for n in range(1, top + 1):
        for g in iter_nonisomorphic(n):
            assert neighborhood_perfect_equivalence(g) == bool(is_neighborhood_perfect(g)), f"{g}"
            checked += 1
    print(f"  {checked} graphs with n <= {top}: equivalence holds ✓")

    rng = random.Random(12)
    for _ in range(500):
        g = random_graph(rng, 8)
        assert neighborhood_perfect_equivalence(g) == bool(is_neighborhood_perfect(g))
    print("  500 random graphs with n = 8 ✓")
    print("  ✓ Equivalence OK\n")


def test_separating_subgraph():
    print("=== Testing separating_subgraph ===")
    assert separating_subgraph(named('C', 5)) is None
    vertices, k, kind = separating_subgraph(named('W', 5))
    assert vertices.to_list() == list(range(6)) and k == 2 and kind == HOLE
    vertices, k, kind = separating_subgraph(named('B', 7))
    assert vertices.to_list() == list(range(8)) and k == 3 and kind == ANTI_HOLE
    vertices, k, kind = separating_subgraph(named('fig4'))
    assert k == 2 and kind == HOLE
    sub = induced_subgraph(named('fig4'), vertices)
    assert is_minimal_forbidden(sub, OMEGA, 2) and not is_minimal_forbidden(sub, CHI, 2)
    print("  W5, B7 and the W5 inside fig4 ✓")

    rng = random.Random(21)
    for _ in range(60):
        g = random_graph(rng, rng.randint(5, 9), 0.6)
        found = separating_subgraph(g)
        if found is None:
            continue
        vertices, k, _ = found
        sub = induced_subgraph(g, vertices)
        assert is_minimal_forbidden(sub, OMEGA, k) and not is_minimal_forbidden(sub, CHI, k)
    print("  Random graphs: every separating subgraph is in F(ω,k) and not F(χ,k) ✓")
    print("  ✓ Separating subgraph OK\n")


if __name__ == '__main__':
    test_parameter()
    test_minimal_forbidden_examples()
    test_separating_wheels()
    test_class_index_examples()
    test_class_index_oracle()
    test_chi_index_never_exceeds_omega_index()
    test_class_index_is_hereditary()
    test_neighborhood_perfect_equivalence()
    test_separating_subgraph()
