from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from extdom.errors import InvalidVertexError
from extdom.graphs import (
    DirectedGraph,
    RootedTree,
    UndirectedGraph,
    k_hop_closed_neighborhood,
    k_hop_masks,
    spanning_forest,
    subtree_sizes,
)

from conftest import bfs_ball


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return UndirectedGraph(n, chosen)


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            UndirectedGraph(3, [(0, 0)])

    def test_rejects_duplicate_edge_both_orders(self):
        with pytest.raises(ValueError, match="duplicate"):
            UndirectedGraph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidVertexError):
            UndirectedGraph(3, [(0, 3)])

    def test_adjacency_is_symmetric(self):
        g = UndirectedGraph(4, [(0, 1), (1, 2), (2, 3)])
        for u in range(4):
            for v in g.neighbors(u):
                assert u in g.neighbors(v)

    def test_directed_rejects_self_arc(self):
        with pytest.raises(ValueError, match="self-arc"):
            DirectedGraph(2, [(1, 1)])

    def test_directed_keeps_antiparallel_arcs(self):
        d = DirectedGraph(2, [(0, 1), (1, 0)])
        assert d.arcs == {(0, 1), (1, 0)}
        assert d.undirected_edges() == {(0, 1)}


class TestNeighborhoods:
    def test_path_middle_one_hop(self, path5):
        assert k_hop_closed_neighborhood(path5, 2, 1) == {1, 2, 3}

    def test_path_end_two_hops(self, path5):
        assert k_hop_closed_neighborhood(path5, 0, 2) == {0, 1, 2}

    def test_star_leaf_two_hops_reaches_everything(self, star5):
        assert k_hop_closed_neighborhood(star5, 1, 2) == {0, 1, 2, 3, 4}

    def test_invalid_vertex(self, path5):
        with pytest.raises(InvalidVertexError):
            k_hop_closed_neighborhood(path5, 9, 1)

    def test_invalid_radius(self, path5):
        with pytest.raises(ValueError):
            k_hop_closed_neighborhood(path5, 0, 0)

    @given(graphs(), st.integers(min_value=1, max_value=3))
    def test_ball_contains_self_and_grows_with_radius(self, g, k):
        for v in range(g.n):
            ball = k_hop_closed_neighborhood(g, v, k)
            assert v in ball
            assert ball <= k_hop_closed_neighborhood(g, v, k + 1)

    @given(graphs())
    def test_one_hop_ball_is_degree_plus_one(self, g):
        for v in range(g.n):
            assert len(k_hop_closed_neighborhood(g, v, 1)) == g.degree(v) + 1

    @given(graphs(), st.integers(min_value=1, max_value=3))
    def test_masks_match_set_bfs(self, g, k):
        masks = k_hop_masks(g, k)
        for v in range(g.n):
            assert masks[v] == sum(1 << u for u in bfs_ball(g, v, k))


class TestSpanningForest:
    def test_empty_graph(self):
        assert spanning_forest(UndirectedGraph(0)) == []

    def test_triangle_rooted_at_zero(self):
        forest = spanning_forest(UndirectedGraph(3, [(0, 1), (1, 2), (0, 2)]))
        assert len(forest) == 1
        tree = forest[0]
        assert tree.root == 0
        assert tree.edges() == {(0, 1), (0, 2)}

    def test_two_disjoint_edges(self):
        forest = spanning_forest(UndirectedGraph(4, [(0, 1), (2, 3)]))
        assert [t.root for t in forest] == [0, 2]

    @given(graphs())
    def test_forest_partitions_vertices_with_right_edge_count(self, g):
        forest = spanning_forest(g)
        seen: set[int] = set()
        total_edges = 0
        for tree in forest:
            assert not (tree.vertices & seen)
            seen |= tree.vertices
            total_edges += len(tree.edges())
            assert tree.edges() <= g.edges
        assert seen == set(range(g.n))
        assert total_edges == g.n - len(forest)


class TestRootedTree:
    def test_root_must_self_map(self):
        with pytest.raises(ValueError):
            RootedTree(root=0, parent={0: 1, 1: 1})

    def test_cycle_detected(self):
        with pytest.raises(ValueError):
            RootedTree(root=0, parent={0: 0, 1: 2, 2: 1})

    def test_single_vertex_sizes(self):
        t = RootedTree(root=3, parent={3: 3})
        assert subtree_sizes(t) == {3: 1}

    def test_path_sizes_decrease_along_chain(self):
        t = RootedTree(root=0, parent={0: 0, 1: 0, 2: 1, 3: 2, 4: 3})
        assert subtree_sizes(t) == {0: 5, 1: 4, 2: 3, 3: 2, 4: 1}

    def test_star_sizes(self):
        t = RootedTree(root=0, parent={0: 0, 1: 0, 2: 0, 3: 0, 4: 0})
        sizes = subtree_sizes(t)
        assert sizes[0] == 5
        assert all(sizes[v] == 1 for v in range(1, 5))

    @given(graphs())
    def test_root_size_is_vertex_count(self, g):
        for tree in spanning_forest(g):
            assert subtree_sizes(tree)[tree.root] == len(tree)
