"""Shared helpers: independent brute-force reference implementations.

These deliberately avoid the package's bitmask machinery (plain sets and
dict BFS), so agreement between a test helper and the library is evidence
for both.
"""

from __future__ import annotations

from itertools import combinations
from pathlib import Path

import pytest

from extdom.graphs import UndirectedGraph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def bfs_ball(g: UndirectedGraph, v: int, k: int) -> set[int]:
    """Closed k-neighborhood via dict-of-sets BFS."""
    ball = {v}
    frontier = {v}
    for _ in range(k):
        nxt = set()
        for u in frontier:
            nxt.update(g.neighbors(u))
        nxt -= ball
        ball |= nxt
        frontier = nxt
    return ball


def brute_dom(g: UndirectedGraph, dominators, k: int) -> int:
    covered: set[int] = set()
    for v in dominators:
        covered |= bfs_ball(g, v, k)
    return len(covered)


def brute_ext(g: UndirectedGraph, dominators, k: int) -> int:
    return brute_dom(g, dominators, k) - len(set(dominators))


def brute_opt_ext(g: UndirectedGraph, p: int, k: int):
    """(optimum, all optimal p-subsets) by direct enumeration."""
    best = -1
    argmax: list[tuple[int, ...]] = []
    for subset in combinations(range(g.n), p):
        value = brute_ext(g, subset, k)
        if value > best:
            best, argmax = value, [subset]
        elif value == best:
            argmax.append(subset)
    return best, argmax


@pytest.fixture
def path5() -> UndirectedGraph:
    return UndirectedGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def star5() -> UndirectedGraph:
    return UndirectedGraph(5, [(0, i) for i in range(1, 5)])
