"""Vertex-indexed graph types and the neighborhood/forest primitives.

Vertices are dense integer ids 0..n-1 so adjacency can live in plain lists
and neighborhood unions in integer bitmasks.  All types are immutable after
construction and every operation is a pure function of its inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InvalidVertexError


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise InvalidVertexError(f"vertex {v} out of range 0..{n - 1}")


class UndirectedGraph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self.edges = frozenset(seen)
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_vertex(v, self.n)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={len(self.edges)})"


class DirectedGraph:
    """Immutable simple digraph on vertices 0..n-1; self-arcs are rejected."""

    __slots__ = ("n", "arcs", "_out")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        out: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in arcs:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise ValueError(f"self-arc at vertex {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
            out[u].append(v)
        self.arcs = frozenset(seen)
        self._out = tuple(tuple(sorted(vs)) for vs in out)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        _check_vertex(v, self.n)
        return self._out[v]

    def undirected_edges(self) -> frozenset[tuple[int, int]]:
        """Arc set collapsed to simple undirected edges (duplicates merged)."""
        return frozenset((u, v) if u < v else (v, u) for u, v in self.arcs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, arcs={len(self.arcs)})"


@dataclass(frozen=True)
class RootedTree:
    """A rooted tree over a subset of some host graph's vertex ids.

    parent maps every vertex to its parent; the root maps to itself.
    """

    root: int
    parent: Mapping[int, int] = field(compare=True)

    def __post_init__(self):
        parent = dict(self.parent)
        object.__setattr__(self, "parent", parent)
        if self.root not in parent or parent[self.root] != self.root:
            raise ValueError("root must map to itself in the parent map")
        for v, pv in parent.items():
            if pv not in parent:
                raise ValueError(f"parent {pv} of {v} is not a tree vertex")
        # every vertex must reach the root without cycling
        for v in parent:
            steps = 0
            w = v
            while w != self.root:
                w = parent[w]
                steps += 1
                if steps > len(parent):
                    raise ValueError("cycle in parent map")

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.parent)

    def __len__(self) -> int:
        return len(self.parent)

    @cached_property
    def children(self) -> dict[int, tuple[int, ...]]:
        kids: dict[int, list[int]] = {v: [] for v in self.parent}
        for v, pv in self.parent.items():
            if v != self.root:
                kids[pv].append(v)
        return {v: tuple(sorted(c)) for v, c in kids.items()}

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (v, p) if v < p else (p, v)
            for v, p in self.parent.items()
            if v != self.root
        )

    def post_order(self) -> list[int]:
        """Vertices with every child before its parent, children ascending."""
        order: list[int] = []
        stack: list[tuple[int, bool]] = [(self.root, False)]
        while stack:
            v, expanded = stack.pop()
            if expanded:
                order.append(v)
            else:
                stack.append((v, True))
                for c in reversed(self.children[v]):
                    stack.append((c, False))
        return order


def k_hop_closed_neighborhood(g: UndirectedGraph, v: int, k: int) -> set[int]:
    """All vertices at BFS distance at most k from v, including v itself."""
    _check_vertex(v, g.n)
    if k < 1:
        raise ValueError("hop radius k must be at least 1")
    reached = {v}
    frontier = deque([(v, 0)])
    while frontier:
        u, d = frontier.popleft()
        if d == k:
            continue
        for w in g.neighbors(u):
            if w not in reached:
                reached.add(w)
                frontier.append((w, d + 1))
    return reached


def k_hop_masks(g: UndirectedGraph, k: int) -> list[int]:
    """Closed k-neighborhood of every vertex as a bitmask (bit v = vertex v)."""
    if k < 1:
        raise ValueError("hop radius k must be at least 1")
    masks = []
    for v in range(g.n):
        m = 0
        for u in k_hop_closed_neighborhood(g, v, k):
            m |= 1 << u
        masks.append(m)
    return masks


def spanning_forest(g: UndirectedGraph) -> list[RootedTree]:
    """One BFS tree per connected component.

    Deterministic: roots are the lowest-id unvisited vertices in ascending
    order and children are discovered in ascending id order.
    """
    visited = [False] * g.n
    forest: list[RootedTree] = []
    for r in range(g.n):
        if visited[r]:
            continue
        visited[r] = True
        parent = {r: r}
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not visited[w]:
                    visited[w] = True
                    parent[w] = u
                    queue.append(w)
        forest.append(RootedTree(root=r, parent=parent))
    return forest


def subtree_sizes(t: RootedTree) -> dict[int, int]:
    """size(v) = 1 + sum of children sizes; size(root) = |vertices|."""
    sizes = {v: 1 for v in t.parent}
    for v in t.post_order():
        if v != t.root:
            sizes[t.parent[v]] += sizes[v]
    return sizes
