from __future__ import annotations

import pytest

from extdom.elections import NON_SECRECY, RATIONAL_CANDIDATE
from extdom.errors import InstanceError
from extdom.generators import (
    gen_classic,
    gen_random,
    gen_random_election,
    gen_reduction_graph,
)
from extdom.graphs import UndirectedGraph, k_hop_closed_neighborhood
from extdom.rng import Xorshift64Star


class TestRng:
    def test_known_first_words(self):
        # frozen from the documented xorshift64* update rule
        rng = Xorshift64Star(1)
        assert [rng.next_u64() for _ in range(3)] == [
            5180492295206395165,
            12380297144915551517,
            13389498078930870103,
        ]

    def test_zero_seed_replaced(self):
        assert Xorshift64Star(0).next_u64() == Xorshift64Star(0x9E3779B97F4A7C15).next_u64()

    def test_below_range(self):
        rng = Xorshift64Star(7)
        draws = [rng.below(10) for _ in range(200)]
        assert all(0 <= d < 10 for d in draws)
        assert len(set(draws)) > 1


class TestClassic:
    def test_path(self):
        g = gen_classic("path", 5)
        assert g.edges == {(0, 1), (1, 2), (2, 3), (3, 4)}

    def test_star(self):
        g = gen_classic("star", 5)
        assert g.edges == {(0, 1), (0, 2), (0, 3), (0, 4)}

    def test_cycle(self):
        assert len(gen_classic("cycle", 3).edges) == 3

    def test_cycle_too_small(self):
        with pytest.raises(ValueError):
            gen_classic("cycle", 2)

    def test_complete(self):
        assert len(gen_classic("complete", 5).edges) == 10


class TestRandom:
    def test_er_probability_zero(self):
        assert gen_random("er-graph", 6, 0.0, seed=3).edges == frozenset()

    def test_er_probability_one(self):
        assert len(gen_random("er-graph", 6, 1.0, seed=3).edges) == 15

    def test_tree_shape(self):
        g = gen_random("tree", 8, seed=42)
        assert len(g.edges) == 7
        from extdom.graphs import spanning_forest

        assert len(spanning_forest(g)) == 1

    def test_deterministic(self):
        a = gen_random("tree", 8, seed=9)
        b = gen_random("tree", 8, seed=9)
        assert a == b
        assert gen_random("er-graph", 8, 0.5, seed=1) == gen_random(
            "er-graph", 8, 0.5, seed=1
        )

    def test_connected_kind(self):
        from extdom.graphs import spanning_forest

        for seed in range(10):
            g = gen_random("connected", 7, 0.3, seed=seed)
            assert len(spanning_forest(g)) == 1


class TestReductionGadget:
    def test_triangle_vertex_count(self):
        g = gen_reduction_graph(gen_classic("cycle", 3), 2, 2, 2)
        assert g.n == (2 + 2 + 2) * 3 == 18

    def test_count_formula_various(self):
        base = gen_classic("path", 4)
        for K in (2, 3, 4):
            for q1 in (1, 2):
                for q2 in (1, 3):
                    assert gen_reduction_graph(base, K, q1, q2).n == (q1 + q2 + K) * 4

    def test_single_vertex_smallest_gadget(self):
        g = gen_reduction_graph(UndirectedGraph(1), 2, 1, 1)
        assert g.n == 4
        assert g.edges == {(0, 1), (1, 2), (2, 3)}

    def test_connector_to_hub_distance(self):
        base = gen_classic("path", 3)
        for K in (2, 3, 4):
            g = gen_reduction_graph(base, K, 2, 2)
            n = base.n
            for i in range(n):
                conn = 2 * n + i
                hub = 3 * n + i * 3
                ball = k_hop_closed_neighborhood(g, conn, K - 1)
                smaller = k_hop_closed_neighborhood(g, conn, K - 2) if K > 2 else {conn}
                assert hub in ball and hub not in smaller

    def test_rejects_small_radius(self):
        with pytest.raises(ValueError):
            gen_reduction_graph(UndirectedGraph(1), 1, 1, 1)


class TestRandomElection:
    def test_no_approvals_without_forced_ones(self):
        inst = gen_random_election(4, 3, 0.0, 0.0, False, seed=5)
        assert all(not a for a in inst.approvals.values())

    def test_full_approvals(self):
        inst = gen_random_election(4, 3, 1.0, 0.0, False, seed=5)
        assert all(a == inst.candidates for a in inst.approvals.values())

    def test_deterministic(self):
        a = gen_random_election(6, 4, 0.4, 0.5, False, seed=11)
        b = gen_random_election(6, 4, 0.4, 0.5, False, seed=11)
        assert a == b

    def test_candidate_voters_self_approve(self):
        inst = gen_random_election(6, 4, 0.2, 1.0, False, seed=3)
        for c, v in inst.candidate_voter_map.items():
            assert c in inst.approvals[v]

    def test_require_other_approval(self):
        for seed in range(8):
            inst = gen_random_election(6, 4, 0.1, 1.0, True, seed=seed)
            for c in inst.candidates:
                assert inst.approvals[c] - {c}

    def test_require_other_approval_needs_full_overlap(self):
        with pytest.raises(InstanceError):
            gen_random_election(6, 4, 0.5, 0.5, True, seed=1)

    def test_overlap_capped_by_voters(self):
        with pytest.raises(InstanceError):
            gen_random_election(2, 8, 0.5, 1.0, False, seed=1)

    def test_valid_in_both_settings(self):
        for setting in (NON_SECRECY, RATIONAL_CANDIDATE):
            inst = gen_random_election(5, 3, 0.5, 1.0, False, seed=2, setting=setting)
            assert inst.setting == setting
