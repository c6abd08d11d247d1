"""Maximum-cardinality matching on general (possibly non-bipartite) graphs.

Augmenting-path search with blossom contraction: grow an alternating BFS
tree from each exposed vertex, contract any odd cycle met along the way by
collapsing its vertices onto a common base, and augment when the search
reaches another exposed vertex.  Adjacency is scanned in ascending order so
the matching returned for a given graph is deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable


def max_cardinality_matching(
    n: int, edges: Iterable[tuple[int, int]]
) -> list[int]:
    """match[v] = partner of v, or -1 if v is unmatched."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in set((min(a, b), max(a, b)) for a, b in edges):
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()

    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting_path(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            in_queue[i] = False
        in_queue[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom onto the common base
                    cur_base = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur_base, to, in_blossom)
                    mark_path(to, cur_base, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur_base
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    in_queue[match[to]] = True
                    queue.append(match[to])
        return -1

    for v in range(n):
        if match[v] == -1:
            end = find_augmenting_path(v)
            while end != -1:
                prev = parent[end]
                next_end = match[prev]
                match[end] = prev
                match[prev] = end
                end = next_end
    return match


def matching_pairs(match: list[int]) -> tuple[tuple[int, int], ...]:
    """The matched pairs of a match array, normalized and sorted."""
    return tuple(
        sorted((v, m) for v, m in enumerate(match) if m != -1 and v < m)
    )
