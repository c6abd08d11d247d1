"""Tree decomposition into minimal rooted components and the two-branch solver.

A rooted tree is split into components of at least k+1+delta vertices each:
repeatedly take the first vertex in post-order whose remaining subtree
reaches the size floor (minimality comes for free: all of its child
subtrees were visited earlier and stayed below the floor), detach that
subtree as a component, and absorb a too-small final remainder into the
last pick, keeping the pick's root.

Stripping every non-forest edge this way yields an auxiliary subgraph whose
components have a rigid shape when delta=1 and k=1: a hub with some leaf
children and some children that carry exactly one pendant leaf (a spider
with legs of length at most two).  One vertex per component is designated
the center and receives tie-break priority during greedy selection on the
auxiliary graph.  The solver runs greedy on both the original and the
auxiliary graph and keeps whichever dominator set externally dominates more
vertices of the original graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .domination import (
    DominationSolution,
    TieBreakPolicy,
    ext_count,
    greedy_dominators,
)
from .errors import InfeasibleCardinalityError, StructureError
from .graphs import RootedTree, UndirectedGraph, spanning_forest, subtree_sizes


@dataclass(frozen=True)
class TreeComponent:
    """One rooted component emitted by decompose_tree."""

    tree: RootedTree
    root: int
    absorbed_remainder: bool

    @property
    def vertices(self) -> frozenset[int]:
        return self.tree.vertices

    def __len__(self) -> int:
        return len(self.tree)


@dataclass(frozen=True)
class SpiderClass:
    """Shape of a component: hub with leaf children and pendant 2-paths.

    leaf_children counts hub neighbors of degree one; path_children counts
    hub neighbors that carry exactly one pendant leaf.
    """

    hub: int
    leaf_children: int
    path_children: int

    @property
    def is_five_path(self) -> bool:
        """A five-vertex path: no leaf children, two pendant 2-paths."""
        return self.leaf_children == 0 and self.path_children == 2


@dataclass(frozen=True)
class AuxiliaryGraph:
    """Spanning-forest subgraph after decomposition, with centers designated."""

    graph: UndirectedGraph
    components: tuple[TreeComponent, ...]
    centers: frozenset[int]


def _collect_subtree(root: int, children: dict[int, list[int]]) -> set[int]:
    out = {root}
    stack = [root]
    while stack:
        v = stack.pop()
        for c in children[v]:
            out.add(c)
            stack.append(c)
    return out


def _post_order(root: int, children: dict[int, list[int]]) -> list[int]:
    order: list[int] = []
    stack: list[tuple[int, bool]] = [(root, False)]
    while stack:
        v, expanded = stack.pop()
        if expanded:
            order.append(v)
        else:
            stack.append((v, True))
            for c in reversed(children[v]):
                stack.append((c, False))
    return order


def _reroot(vertices: set[int], adjacency: dict[int, list[int]], root: int) -> RootedTree:
    parent = {root: root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(adjacency[u]):
            if w in vertices and w not in parent:
                parent[w] = u
                queue.append(w)
    return RootedTree(root=root, parent=parent)


def decompose_tree(t: RootedTree, delta: int, k: int) -> list[TreeComponent]:
    """Split a rooted tree into minimal components of >= k+1+delta vertices.

    A tree below the size floor is returned whole, as a single component.
    Otherwise each pick is the first post-order vertex (children ascending)
    whose current subtree reaches the floor; a final remainder smaller than
    the floor is absorbed into the last pick, which keeps its root even
    though the component grows past its subtree.
    """
    if delta not in (0, 1):
        raise ValueError("delta must be 0 or 1")
    if k < 1:
        raise ValueError("hop radius k must be at least 1")
    floor = k + 1 + delta
    if len(t) < floor:
        return [TreeComponent(tree=t, root=t.root, absorbed_remainder=False)]

    children = {v: list(t.children[v]) for v in t.parent}
    parent = dict(t.parent)
    alive = set(t.parent)
    components: list[TreeComponent] = []
    while alive:
        # sizes over the remaining tree; the root always reaches the floor
        sizes = {v: 1 for v in alive}
        order = _post_order(t.root, children)
        pick = -1
        for v in order:
            if v != t.root:
                sizes[parent[v]] += sizes[v]
            if sizes[v] >= floor:
                pick = v
                break
        subtree = _collect_subtree(pick, children)
        remainder = len(alive) - len(subtree)
        if 0 < remainder < floor:
            adjacency = {v: [] for v in alive}
            for v in alive:
                if v != t.root and parent[v] in alive:
                    adjacency[v].append(parent[v])
                    adjacency[parent[v]].append(v)
            tree = _reroot(set(alive), adjacency, pick)
            components.append(TreeComponent(tree=tree, root=pick, absorbed_remainder=True))
            alive.clear()
        else:
            sub_parent = {v: parent[v] for v in subtree}
            sub_parent[pick] = pick
            tree = RootedTree(root=pick, parent=sub_parent)
            components.append(TreeComponent(tree=tree, root=pick, absorbed_remainder=False))
            alive -= subtree
            if pick != t.root:
                children[parent[pick]].remove(pick)
    return components


def classify_component(c: TreeComponent) -> SpiderClass:
    """Identify the hub/leaf/pendant-path shape of a decomposition component.

    Valid only for components of at least three vertices produced with
    delta=1 and k=1.  The hub is the lowest-id vertex from which the shape
    matches with at least two legs; a component that fits no such shape
    indicates a decomposition bug and raises StructureError.
    """
    vertices = sorted(c.vertices)
    if len(vertices) < 3:
        raise StructureError("classification needs a component of >= 3 vertices")
    adjacency: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in c.tree.edges():
        adjacency[u].append(v)
        adjacency[v].append(u)
    for hub in vertices:
        leaves = 0
        paths = 0
        ok = True
        for w in adjacency[hub]:
            if len(adjacency[w]) == 1:
                leaves += 1
            elif len(adjacency[w]) == 2:
                (z,) = [x for x in adjacency[w] if x != hub]
                if len(adjacency[z]) == 1:
                    paths += 1
                else:
                    ok = False
                    break
            else:
                ok = False
                break
        if ok and leaves + paths >= 2 and 1 + leaves + 2 * paths == len(vertices):
            return SpiderClass(hub=hub, leaf_children=leaves, path_children=paths)
    raise StructureError(
        f"component rooted at {c.root} does not match any hub/leaf/pendant shape"
    )


def designate_center(c: TreeComponent) -> int:
    """The tie-break-privileged vertex of a component.

    The hub, except for the five-vertex path where either hub neighbor
    would do and the lower-id one is chosen.
    """
    cls = classify_component(c)
    if cls.is_five_path:
        edges = c.tree.edges()
        neighbor_ids = [
            v
            for v in c.vertices
            if (min(v, cls.hub), max(v, cls.hub)) in edges
        ]
        return min(neighbor_ids)
    return cls.hub


def build_auxiliary_graph(g: UndirectedGraph, delta: int, k: int) -> AuxiliaryGraph:
    """Decompose every spanning-forest tree and union the component edges.

    Centers are designated only in the delta=1, k=1 regime, and only for
    components large enough to classify; all other components contribute no
    center.
    """
    components: list[TreeComponent] = []
    for tree in spanning_forest(g):
        components.extend(decompose_tree(tree, delta, k))
    edges: set[tuple[int, int]] = set()
    for comp in components:
        edges |= comp.tree.edges()
    centers: set[int] = set()
    if delta == 1 and k == 1:
        for comp in components:
            if len(comp) >= 3:
                centers.add(designate_center(comp))
    return AuxiliaryGraph(
        graph=UndirectedGraph(g.n, edges),
        components=tuple(components),
        centers=frozenset(centers),
    )


def solve_ext_domination(
    g: UndirectedGraph, p: int, k: int, delta: int = 1
) -> DominationSolution:
    """Best of greedy on g and greedy on the decomposed auxiliary graph.

    Both candidate dominator sets are scored with ext on the original
    graph; ties favor the run on g.  Center-priority tie-breaking applies
    on the auxiliary graph only when delta=1 and k=1.
    """
    if not 0 <= p <= g.n:
        raise InfeasibleCardinalityError(f"p={p} infeasible for n={g.n}")
    direct = greedy_dominators(g, p, k, TieBreakPolicy.lowest_id())
    aux = build_auxiliary_graph(g, delta, k)
    if delta == 1 and k == 1:
        aux_policy = TieBreakPolicy.center_priority(aux.centers)
    else:
        aux_policy = TieBreakPolicy.lowest_id()
    routed = greedy_dominators(aux.graph, p, k, aux_policy)
    direct_ext = ext_count(g, direct.chosen, k)
    routed_ext = ext_count(g, routed.chosen, k)
    winner = direct.chosen if direct_ext >= routed_ext else routed.chosen
    ext_value = max(direct_ext, routed_ext)
    return DominationSolution(
        dominators=winner,
        k=k,
        dom_value=ext_value + p,
        ext_value=ext_value,
    )
