"""Seedable instance generators: classic families, random graphs and trees,
random elections, and the copies-stars-connectors gadget graph.

Everything is a pure function of its arguments; the RNG (see rng.py) and
the documented draw order make a given seed reproduce the same instance in
any conforming implementation.
"""

from __future__ import annotations

from .elections import NON_SECRECY, ElectionInstance
from .errors import InstanceError
from .graphs import UndirectedGraph
from .rng import Xorshift64Star

CLASSIC_FAMILIES = ("path", "cycle", "star", "complete")
RANDOM_KINDS = ("er-graph", "tree", "connected")


def gen_classic(family: str, n: int) -> UndirectedGraph:
    """Canonical labeling: path edges {i,i+1}; cycle closes the path; star
    centered at 0; complete graph on all pairs."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if family == "path":
        return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return UndirectedGraph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "star":
        return UndirectedGraph(n, [(0, i) for i in range(1, n)])
    if family == "complete":
        return UndirectedGraph(
            n, [(i, j) for i in range(n) for j in range(i + 1, n)]
        )
    raise ValueError(f"unknown family {family!r}")


def gen_random(
    kind: str, n: int, param: float | None = None, seed: int = 0
) -> UndirectedGraph:
    """Random graph of the given kind.

    er-graph   every pair independently with probability param, pairs drawn
               in ascending (i, j) order;
    tree       random parent attachment: vertex v >= 1 hangs off a uniform
               vertex in [0, v);
    connected  random tree, then every non-tree pair independently with
               probability param (0 when omitted), pairs ascending.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = Xorshift64Star(seed)
    if kind == "er-graph":
        prob = 0.0 if param is None else param
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.chance(prob)
        ]
        return UndirectedGraph(n, edges)
    if kind in ("tree", "connected"):
        edges = [(rng.below(v), v) for v in range(1, n)]
        if kind == "connected":
            prob = 0.0 if param is None else param
            present = {(min(u, v), max(u, v)) for u, v in edges}
            for i in range(n):
                for j in range(i + 1, n):
                    if (i, j) not in present and rng.chance(prob):
                        edges.append((i, j))
        return UndirectedGraph(n, edges)
    raise ValueError(f"unknown kind {kind!r}")


def gen_reduction_graph(
    g: UndirectedGraph, K: int, q1: int, q2: int
) -> UndirectedGraph:
    """Gadget graph: q1 copies of g, one star of q2+1 vertices per original
    vertex, and one connector per original vertex.

    Connector i is adjacent to the image of vertex i in every copy and
    reaches the hub of star i by a path of K-1 edges (a direct edge when
    K = 2).  Total vertex count is (q1 + q2 + K) * n.

    Layout: copies first (copy j occupies [j*n, (j+1)*n)), then the n
    connectors, then the stars (hub first), then the K-2 interior path
    vertices per connector.
    """
    if K < 2:
        raise ValueError("K must be at least 2")
    if g.n < 1:
        raise ValueError("base graph needs at least one vertex")
    if q1 < 1 or q2 < 1:
        raise ValueError("q1 and q2 must be positive")
    n = g.n
    edges: list[tuple[int, int]] = []
    for j in range(q1):
        offset = j * n
        edges.extend((offset + u, offset + v) for u, v in sorted(g.edges))
    conn_base = q1 * n
    star_base = (q1 + 1) * n
    mid_base = star_base + n * (q2 + 1)
    for i in range(n):
        conn = conn_base + i
        for j in range(q1):
            edges.append((conn, j * n + i))
        hub = star_base + i * (q2 + 1)
        for leaf in range(1, q2 + 1):
            edges.append((hub, hub + leaf))
        if K == 2:
            edges.append((conn, hub))
        else:
            interior = [mid_base + i * (K - 2) + t for t in range(K - 2)]
            chain = [conn] + interior + [hub]
            edges.extend(zip(chain, chain[1:]))
    total = (q1 + q2 + K) * n
    return UndirectedGraph(total, edges)


def gen_random_election(
    n_voters: int,
    m_candidates: int,
    approval_prob: float,
    overlap_fraction: float,
    require_other_approval: bool,
    seed: int = 0,
    setting: str = NON_SECRECY,
    committee_size: int = 1,
) -> ElectionInstance:
    """Random approval election over one shared id namespace.

    The first floor(overlap_fraction * m_candidates) candidates are also
    voters (shared ids 0, 1, ...); the remaining candidates get fresh ids
    above every voter.  Draw order: the full voter x candidate approval
    matrix (voters ascending, candidates ascending), then one repair draw
    per candidate that still needs an outside approval.  Candidate-voters
    always approve themselves, so instances are valid in both settings.

    require_other_approval forces every candidate to approve at least one
    other candidate, which is only possible when every candidate is a
    voter.
    """
    if n_voters < 1 or m_candidates < 1:
        raise ValueError("need at least one voter and one candidate")
    if not 0.0 <= overlap_fraction <= 1.0:
        raise ValueError("overlap fraction must lie in [0, 1]")
    n_overlap = int(overlap_fraction * m_candidates)
    if n_overlap > n_voters:
        raise InstanceError(
            f"{n_overlap} candidate-voters exceed {n_voters} voters"
        )
    if require_other_approval and n_overlap < m_candidates:
        raise InstanceError(
            "require_other_approval needs every candidate to be a voter; "
            "raise the overlap fraction"
        )
    voters = list(range(n_voters))
    candidates = list(range(n_overlap)) + [
        n_voters + i for i in range(m_candidates - n_overlap)
    ]
    rng = Xorshift64Star(seed)
    approvals: dict[int, set[int]] = {v: set() for v in voters}
    for v in voters:
        for c in candidates:
            if rng.chance(approval_prob):
                approvals[v].add(c)
    for c in candidates[:n_overlap]:
        approvals[c].add(c)
    if require_other_approval:
        for c in candidates:
            others = [z for z in candidates if z != c]
            if others and not (approvals[c] - {c}):
                approvals[c].add(others[rng.below(len(others))])
    return ElectionInstance(
        voters=frozenset(voters),
        candidates=frozenset(candidates),
        approvals={v: frozenset(a) for v, a in approvals.items()},
        setting=setting,
        committee_size=committee_size,
        candidate_voter_map={c: c for c in candidates[:n_overlap]},
    )
