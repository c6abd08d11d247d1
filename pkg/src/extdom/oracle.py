"""Exhaustive exact solvers and ratio certification at desk scale.

Every solver here enumerates the full feasible space (all p-subsets, all
committees, all matchings), guarded by a subset budget so an accidental
large instance fails fast instead of running for hours.  Witnesses are
always the lexicographically smallest optimizers, so results are stable
across runs and implementations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Iterable

from .bounds import RATIO_TOLERANCE
from .elections import ElectionInstance, external_rep_count
from .errors import InfeasibleCardinalityError, OracleBudgetError
from .graphs import UndirectedGraph, k_hop_masks

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class DominationOptimum:
    value: int
    witness: tuple[int, ...]
    optimal_count: int


@dataclass(frozen=True)
class RepresentationOptimum:
    value: int
    witness: tuple[int, ...]


def exact_ext_domination(
    g: UndirectedGraph, p: int, k: int, budget: int = DEFAULT_BUDGET
) -> DominationOptimum:
    """Exact maximum external domination over all p-subsets.

    The witness is the lexicographically smallest maximizer; the count of
    distinct maximizers comes along for free.
    """
    if not 0 <= p <= g.n:
        raise InfeasibleCardinalityError(f"p={p} infeasible for n={g.n}")
    total = comb(g.n, p)
    if total > budget:
        raise OracleBudgetError(
            f"C({g.n},{p}) = {total} subsets exceeds the budget of {budget}"
        )
    masks = k_hop_masks(g, k)
    best = -1
    witness: tuple[int, ...] = ()
    count = 0
    for subset in combinations(range(g.n), p):
        union = 0
        for v in subset:
            union |= masks[v]
        value = union.bit_count() - p
        if value > best:
            best, witness, count = value, subset, 1
        elif value == best:
            count += 1
    return DominationOptimum(value=best, witness=witness, optimal_count=count)


def exact_ext_representation(
    inst: ElectionInstance, budget: int = DEFAULT_BUDGET
) -> RepresentationOptimum:
    """Exact maximum external representation over all committees of the
    instance's size, under the instance's setting."""
    p = inst.committee_size
    m = len(inst.candidates)
    if p > m:
        raise InfeasibleCardinalityError(f"committee size {p} exceeds {m} candidates")
    total = comb(m, p)
    if total > budget:
        raise OracleBudgetError(
            f"C({m},{p}) = {total} committees exceeds the budget of {budget}"
        )
    best = -1
    witness: tuple[int, ...] = ()
    for committee in combinations(sorted(inst.candidates), p):
        value = external_rep_count(inst, committee)
        if value > best:
            best, witness = value, committee
    return RepresentationOptimum(value=best, witness=witness)


def exact_maximum_matching(
    n: int, edges: Iterable[tuple[int, int]], limit: int = 20
) -> int:
    """Maximum matching size by exhaustive search; validates the fast path."""
    if n > limit:
        raise OracleBudgetError(f"{n} vertices exceeds the exhaustive limit of {limit}")
    adj = [0] * n
    for u, v in set((min(a, b), max(a, b)) for a, b in edges):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    memo: dict[int, int] = {}

    def best(available: int) -> int:
        if available == 0:
            return 0
        cached = memo.get(available)
        if cached is not None:
            return cached
        v = (available & -available).bit_length() - 1
        # v stays unmatched, or pairs with any available neighbor
        result = best(available & ~(1 << v))
        nbrs = adj[v] & available
        while nbrs:
            u = (nbrs & -nbrs).bit_length() - 1
            nbrs &= nbrs - 1
            result = max(result, 1 + best(available & ~(1 << v) & ~(1 << u)))
        memo[available] = result
        return result

    return best((1 << n) - 1)


@dataclass(frozen=True)
class RatioReport:
    """Outcome of checking one instance against a claimed ratio."""

    label: str
    algorithm_value: int | None
    optimal_value: int | None
    ratio: Fraction | None
    bound: Fraction
    bound_name: str
    passed: bool
    vacuous: bool = False
    error: str | None = None


def certify(
    cases: Iterable[tuple[str, Callable[[], tuple[int, int]]]],
    bound: Fraction,
    bound_name: str = "",
    tolerance: Fraction = RATIO_TOLERANCE,
) -> list[RatioReport]:
    """Run (algorithm value, optimal value) thunks and compare ratios.

    A case passes when algorithm >= (bound - tolerance) * optimum, the
    tolerance applying to the bound constant only.  Optimum 0 is a vacuous
    pass.  Oracle errors are recorded per case without aborting the sweep;
    an errored case counts as failed.
    """
    reports: list[RatioReport] = []
    effective = bound - tolerance
    for label, thunk in cases:
        try:
            algorithm_value, optimal_value = thunk()
        except OracleBudgetError as exc:
            reports.append(
                RatioReport(
                    label=label,
                    algorithm_value=None,
                    optimal_value=None,
                    ratio=None,
                    bound=bound,
                    bound_name=bound_name,
                    passed=False,
                    error=str(exc),
                )
            )
            continue
        if optimal_value == 0:
            reports.append(
                RatioReport(
                    label=label,
                    algorithm_value=algorithm_value,
                    optimal_value=0,
                    ratio=None,
                    bound=bound,
                    bound_name=bound_name,
                    passed=True,
                    vacuous=True,
                )
            )
            continue
        ratio = Fraction(algorithm_value, optimal_value)
        reports.append(
            RatioReport(
                label=label,
                algorithm_value=algorithm_value,
                optimal_value=optimal_value,
                ratio=ratio,
                bound=bound,
                bound_name=bound_name,
                passed=Fraction(algorithm_value) >= effective * optimal_value,
            )
        )
    return reports


def all_passed(reports: Iterable[RatioReport]) -> bool:
    return all(r.passed for r in reports)
