"""Dominated/externally-dominated counting and greedy dominator selection.

A vertex set A dominates every vertex within k hops of a member (members
dominate themselves); the externally dominated vertices are the dominated
non-members, so their count is dom(A) - |A|.  The greedy selector grows A
one vertex at a time, always adding a vertex of maximum marginal dominated
gain, with ties resolved by a pluggable policy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InfeasibleCardinalityError, InvalidVertexError
from .graphs import UndirectedGraph, k_hop_masks

LOWEST_ID = "lowest-id"
HIGHEST_ID = "highest-id"
CENTER_PRIORITY = "center-priority"


@dataclass(frozen=True)
class TieBreakPolicy:
    """How equal-gain candidates are ordered during greedy selection.

    center-priority prefers designated centers first, then vertices not yet
    dominated by the current prefix, then the lowest id.  The id-only
    variants ignore the center set.
    """

    variant: str
    centers: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.variant not in (LOWEST_ID, HIGHEST_ID, CENTER_PRIORITY):
            raise ValueError(f"unknown tie-break variant {self.variant!r}")

    @classmethod
    def lowest_id(cls) -> "TieBreakPolicy":
        return cls(LOWEST_ID)

    @classmethod
    def highest_id(cls) -> "TieBreakPolicy":
        return cls(HIGHEST_ID)

    @classmethod
    def center_priority(cls, centers: Iterable[int]) -> "TieBreakPolicy":
        return cls(CENTER_PRIORITY, frozenset(centers))


@dataclass(frozen=True)
class GreedyTrace:
    """The nested prefixes produced by one greedy run.

    picks[i] is the vertex added at step i+1; dom_values[i] and
    ext_values[i] evaluate the prefix picks[:i+1].
    """

    picks: tuple[int, ...]
    dom_values: tuple[int, ...]
    ext_values: tuple[int, ...]
    n: int
    k: int

    def __len__(self) -> int:
        return len(self.picks)

    def prefix(self, i: int) -> tuple[int, ...]:
        """The i-th greedy prefix (1-based size)."""
        return self.picks[:i]

    @property
    def chosen(self) -> tuple[int, ...]:
        return self.picks

    @property
    def per_pick_ratios(self) -> tuple[Fraction, ...]:
        return coverage_profile(self)[0]

    @property
    def saturation_ratios(self) -> tuple[Fraction | None, ...]:
        return coverage_profile(self)[1]


@dataclass(frozen=True)
class DominationSolution:
    """A dominator set together with its dom/ext counts on the host graph."""

    dominators: tuple[int, ...]
    k: int
    dom_value: int
    ext_value: int


def dom_count(g: UndirectedGraph, dominators: Iterable[int], k: int) -> int:
    """Size of the union of closed k-neighborhoods of the dominators."""
    if k < 1:
        raise ValueError("hop radius k must be at least 1")
    sources = set(dominators)
    for v in sources:
        if not 0 <= v < g.n:
            raise InvalidVertexError(f"vertex {v} out of range 0..{g.n - 1}")
    # multi-source BFS to depth k
    dist = {v: 0 for v in sources}
    frontier = list(sources)
    depth = 0
    while frontier and depth < k:
        depth += 1
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = depth
                    nxt.append(w)
        frontier = nxt
    return len(dist)


def ext_count(g: UndirectedGraph, dominators: Iterable[int], k: int) -> int:
    """Externally dominated count: dominated vertices minus the dominators."""
    dominators = set(dominators)
    return dom_count(g, dominators, k) - len(dominators)


def _tie_key(policy: TieBreakPolicy, v: int, covered: int):
    if policy.variant == LOWEST_ID:
        return v
    if policy.variant == HIGHEST_ID:
        return -v
    return (
        0 if v in policy.centers else 1,
        0 if not (covered >> v) & 1 else 1,
        v,
    )


def greedy_dominators(
    g: UndirectedGraph,
    p: int,
    k: int,
    policy: TieBreakPolicy | None = None,
) -> GreedyTrace:
    """Grow a dominator set of size p, one maximum-gain vertex per step.

    p = 0 is accepted and yields the empty trace.  Ties on the marginal
    dominated gain are resolved by the policy (lowest id by default).
    """
    if policy is None:
        policy = TieBreakPolicy.lowest_id()
    if not 0 <= p <= g.n:
        raise InfeasibleCardinalityError(f"p={p} infeasible for n={g.n}")
    masks = k_hop_masks(g, k)
    covered = 0
    covered_count = 0
    picks: list[int] = []
    in_set = [False] * g.n
    dom_values: list[int] = []
    ext_values: list[int] = []
    for _ in range(p):
        best_v = -1
        best_gain = -1
        best_key = None
        for v in range(g.n):
            if in_set[v]:
                continue
            gain = (masks[v] & ~covered).bit_count()
            if gain < best_gain:
                continue
            key = _tie_key(policy, v, covered)
            if gain > best_gain or key < best_key:
                best_v, best_gain, best_key = v, gain, key
        picks.append(best_v)
        in_set[best_v] = True
        covered |= masks[best_v]
        covered_count += best_gain
        dom_values.append(covered_count)
        ext_values.append(covered_count - len(picks))
    return GreedyTrace(
        picks=tuple(picks),
        dom_values=tuple(dom_values),
        ext_values=tuple(ext_values),
        n=g.n,
        k=k,
    )


def coverage_profile(
    trace: GreedyTrace,
) -> tuple[tuple[Fraction, ...], tuple[Fraction | None, ...]]:
    """Exact per-prefix quality ratios of a greedy trace.

    Returns (per_pick, saturation) where per_pick[i] = ext(A_{i+1})/(i+1)
    and saturation[i] = ext(A_{i+1})/(n-(i+1)).  The saturation ratio is
    undefined when the prefix swallows every vertex (i+1 = n) and is
    reported as None there, never as a number.
    """
    per_pick: list[Fraction] = []
    saturation: list[Fraction | None] = []
    for i, ext in enumerate(trace.ext_values, start=1):
        per_pick.append(Fraction(ext, i))
        remaining = trace.n - i
        saturation.append(Fraction(ext, remaining) if remaining > 0 else None)
    return tuple(per_pick), tuple(saturation)
