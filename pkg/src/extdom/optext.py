"""Allocation of 0/1-valued objects to graph vertices, maximizing externality.

A vertex derives externality when it holds a 0-valued object and some
neighbor holds a 1-valued one.  Placing the 1-valued objects on a vertex
set A makes the total externality equal the number of vertices externally
dominated by A (k = 1), so the instance reduces to dominator selection
with p = number of 1-valued objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .decomposition import solve_ext_domination
from .domination import ext_count
from .errors import InstanceError, InvalidAllocationError
from .graphs import UndirectedGraph


@dataclass(frozen=True)
class OptExtInstance:
    """A graph with exactly one object per vertex, each valued 0 or 1."""

    graph: UndirectedGraph
    objects: tuple[int, ...]
    valuation: Mapping[int, int]

    def __post_init__(self):
        objects = tuple(self.objects)
        object.__setattr__(self, "objects", objects)
        if len(set(objects)) != len(objects):
            raise InstanceError("duplicate object ids")
        if len(objects) != self.graph.n:
            raise InstanceError(
                f"{len(objects)} objects for {self.graph.n} vertices; "
                "normalize the instance first"
            )
        valuation = dict(self.valuation)
        object.__setattr__(self, "valuation", valuation)
        if set(valuation) != set(objects):
            raise InstanceError("valuation does not cover exactly the objects")
        for o, val in valuation.items():
            if val not in (0, 1):
                raise InstanceError(f"object {o} valued {val}, expected 0 or 1")

    @property
    def ones(self) -> tuple[int, ...]:
        return tuple(o for o in sorted(self.objects) if self.valuation[o] == 1)

    @classmethod
    def normalized(
        cls,
        graph: UndirectedGraph,
        objects: Sequence[int],
        valuation: Mapping[int, int],
        pad: bool = True,
    ) -> "OptExtInstance":
        """Pad short object lists with fresh 0-valued dummies, or reject.

        More objects than vertices is always rejected, since an allocation
        is a function on the vertices.
        """
        objects = list(objects)
        valuation = dict(valuation)
        if len(objects) > graph.n:
            raise InstanceError(
                f"{len(objects)} objects cannot all be placed on {graph.n} vertices"
            )
        if len(objects) < graph.n:
            if not pad:
                raise InstanceError(
                    f"{len(objects)} objects for {graph.n} vertices and padding disabled"
                )
            fresh = max(objects, default=-1) + 1
            while len(objects) < graph.n:
                objects.append(fresh)
                valuation[fresh] = 0
                fresh += 1
        return cls(graph=graph, objects=tuple(objects), valuation=valuation)


@dataclass(frozen=True)
class Allocation:
    """A bijection vertex -> object, with its total externality."""

    assign: Mapping[int, int]
    externality: int

    def __post_init__(self):
        object.__setattr__(self, "assign", dict(self.assign))


def externality_of_allocation(inst: OptExtInstance, alloc) -> int:
    """Vertices holding a 0-object next to some vertex holding a 1-object."""
    assign = dict(alloc.assign if isinstance(alloc, Allocation) else alloc)
    n = inst.graph.n
    if set(assign) != set(range(n)) or set(assign.values()) != set(inst.objects):
        raise InvalidAllocationError(
            "allocation must map the vertices onto the objects one-to-one"
        )
    value = [inst.valuation[assign[v]] for v in range(n)]
    total = 0
    for v in range(n):
        if value[v] == 0 and any(value[u] == 1 for u in inst.graph.neighbors(v)):
            total += 1
    return total


def _allocation_for(inst: OptExtInstance, dominators) -> Allocation:
    """Ascending 1-objects onto ascending dominators, 0-objects onto the rest."""
    dominators = sorted(dominators)
    ones = list(inst.ones)
    zeros = [o for o in sorted(inst.objects) if inst.valuation[o] == 0]
    assign: dict[int, int] = {}
    dom_set = set(dominators)
    for v, o in zip(dominators, ones):
        assign[v] = o
    for v in range(inst.graph.n):
        if v not in dom_set:
            assign[v] = zeros.pop(0)
    return Allocation(assign=assign, externality=externality_of_allocation(inst, assign))


def reduce_and_solve(inst: OptExtInstance) -> Allocation:
    """Place the 1-objects on an approximately optimal dominator set.

    With no 1-objects (or nothing but 1-objects) every allocation derives
    zero externality and an arbitrary bijection is returned.
    """
    p = len(inst.ones)
    n = inst.graph.n
    if p == 0 or p == n:
        assign = dict(zip(range(n), sorted(inst.objects)))
        return Allocation(assign=assign, externality=externality_of_allocation(inst, assign))
    solution = solve_ext_domination(inst.graph, p, k=1, delta=1)
    alloc = _allocation_for(inst, solution.dominators)
    assert alloc.externality == ext_count(inst.graph, solution.dominators, 1)
    return alloc
