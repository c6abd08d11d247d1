from __future__ import annotations

from extdom.elections import maximum_matching
from extdom.graphs import DirectedGraph
from extdom.matching import matching_pairs, max_cardinality_matching
from extdom.oracle import exact_maximum_matching
from extdom.rng import Xorshift64Star


def test_antiparallel_arcs_collapse_to_one_edge():
    assert maximum_matching(DirectedGraph(2, [(0, 1), (1, 0)])) == ((0, 1),)


def test_directed_path():
    pairs = maximum_matching(DirectedGraph(4, [(0, 1), (1, 2), (2, 3)]))
    assert pairs == ((0, 1), (2, 3))


def test_odd_cycle():
    arcs = [(i, (i + 1) % 5) for i in range(5)]
    pairs = maximum_matching(DirectedGraph(5, arcs))
    assert len(pairs) == 2
    assert exact_maximum_matching(5, [(u, v) for u, v in arcs]) == 2


def test_empty():
    assert maximum_matching(DirectedGraph(3)) == ()


def test_matched_pairs_are_disjoint():
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
    match = max_cardinality_matching(6, edges)
    pairs = matching_pairs(match)
    used = [v for pair in pairs for v in pair]
    assert len(used) == len(set(used))
    assert all((u, v) in {(min(a, b), max(a, b)) for a, b in edges} for u, v in pairs)


def test_petersen_graph_has_perfect_matching():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    edges = outer + inner + spokes
    assert len(matching_pairs(max_cardinality_matching(10, edges))) == 5
    assert exact_maximum_matching(10, edges) == 5


def test_two_triangles_bridge():
    # classic blossom stress: two odd cycles joined by a bridge
    edges = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]
    assert len(matching_pairs(max_cardinality_matching(6, edges))) == 3


def test_agrees_with_exhaustive_on_seeded_sweep():
    rng = Xorshift64Star(2024)
    for _ in range(120):
        n = 2 + rng.below(9)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.below(100) < 40
        ]
        fast = len(matching_pairs(max_cardinality_matching(n, edges)))
        assert fast == exact_maximum_matching(n, edges)
