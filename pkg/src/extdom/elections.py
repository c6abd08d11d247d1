"""Committee selection maximizing externally represented voters.

A committee represents every voter approving at least one member; members
represent themselves internally, so the externally represented voters are
the represented ones who are not on the committee.  Two evaluation
settings are supported:

  non-secrecy        voter identities are open and share one id namespace
                     with candidates, so ext(C) is the represented set
                     minus the committee itself;
  rational-candidate ballots stay secret but every candidate who votes is
                     assumed to approve itself, so ext(C) is rep(C) minus
                     the number of elected candidates that are voters.

Both solvers score committees through a self-approval closure: a modified
instance in which every candidate approves itself (non-voting candidates
gain a synthetic ballot), on which maximizing representation and
maximizing external representation coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Mapping

from .errors import (
    InfeasibleCardinalityError,
    SettingViolationError,
    WrongSettingError,
)
from .graphs import DirectedGraph
from .matching import matching_pairs, max_cardinality_matching

NON_SECRECY = "non-secrecy"
RATIONAL_CANDIDATE = "rational-candidate"
SETTINGS = (NON_SECRECY, RATIONAL_CANDIDATE)


@dataclass(frozen=True)
class ElectionInstance:
    """Approval election: voters, candidates, ballots and the overlap map.

    candidate_voter_map identifies which candidates are also voters (and as
    which voter id).  Under non-secrecy the namespaces coincide, so the map
    must be the identity on candidates that appear among the voters; it is
    filled in automatically when omitted.  Under rational-candidate the map
    is free-form input, and every mapped candidate must approve itself.
    """

    voters: frozenset[int]
    candidates: frozenset[int]
    approvals: Mapping[int, frozenset[int]]
    setting: str
    committee_size: int
    candidate_voter_map: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.setting not in SETTINGS:
            raise ValueError(f"unknown setting {self.setting!r}")
        if self.committee_size < 0:
            raise ValueError("committee size must be non-negative")
        approvals = {
            v: frozenset(self.approvals.get(v, frozenset())) for v in self.voters
        }
        for v, approved in self.approvals.items():
            if v not in self.voters:
                raise ValueError(f"ballot from unknown voter {v}")
            bad = set(approved) - set(self.candidates)
            if bad:
                raise ValueError(f"voter {v} approves unknown candidates {sorted(bad)}")
        object.__setattr__(self, "approvals", approvals)

        cvm = dict(self.candidate_voter_map)
        if self.setting == NON_SECRECY:
            identity = {c: c for c in self.candidates & self.voters}
            for c, v in cvm.items():
                if identity.get(c) != v:
                    raise SettingViolationError(
                        f"non-secrecy shares one namespace: candidate {c} "
                        f"cannot be voter {v}"
                    )
            cvm = identity
        else:
            if len(set(cvm.values())) != len(cvm):
                raise SettingViolationError("two candidates mapped to one voter")
            for c, v in cvm.items():
                if c not in self.candidates:
                    raise ValueError(f"unknown candidate {c} in voter map")
                if v not in self.voters:
                    raise ValueError(f"unknown voter {v} in voter map")
                if c not in approvals[v]:
                    raise SettingViolationError(
                        f"rational-candidate requires self-approval: candidate {c} "
                        f"(voter {v}) does not approve itself"
                    )
        object.__setattr__(self, "candidate_voter_map", cvm)

    @property
    def candidate_voters(self) -> frozenset[int]:
        """Candidates that are also voters."""
        return frozenset(self.candidate_voter_map)

    @cached_property
    def supporters(self) -> dict[int, frozenset[int]]:
        """Approving voters of each candidate, derived from the ballots."""
        sup: dict[int, set[int]] = {c: set() for c in self.candidates}
        for v, approved in self.approvals.items():
            for c in approved:
                sup[c].add(v)
        return {c: frozenset(s) for c, s in sup.items()}

    def with_committee_size(self, p: int) -> "ElectionInstance":
        return replace(self, committee_size=p)


@dataclass(frozen=True)
class Committee:
    """An elected candidate subset with its representation counts."""

    members: frozenset[int]
    rep_value: int
    ext_value: int


def represented_count(inst: ElectionInstance, committee) -> int:
    """Voters approving at least one committee member."""
    members = frozenset(committee)
    bad = members - inst.candidates
    if bad:
        raise ValueError(f"not candidates: {sorted(bad)}")
    covered: set[int] = set()
    for c in members:
        covered |= inst.supporters[c]
    return len(covered)


def external_rep_count(inst: ElectionInstance, committee) -> int:
    """Represented voters that are not internally represented."""
    members = frozenset(committee)
    bad = members - inst.candidates
    if bad:
        raise ValueError(f"not candidates: {sorted(bad)}")
    covered: set[int] = set()
    for c in members:
        covered |= inst.supporters[c]
    if inst.setting == NON_SECRECY:
        return len(covered - members)
    return len(covered) - len(members & inst.candidate_voters)


def evaluate_committee(inst: ElectionInstance, committee) -> Committee:
    members = frozenset(committee)
    return Committee(
        members=members,
        rep_value=represented_count(inst, members),
        ext_value=external_rep_count(inst, members),
    )


def self_approval_closure(inst: ElectionInstance) -> ElectionInstance:
    """The instance modified so that every candidate approves itself.

    Candidates that are voters gain a self-approval on their own ballot;
    candidates that are not voters gain a synthetic voter (fresh id above
    every existing id) whose only approval is that candidate.  Counting
    representation here and subtracting the committee size reproduces the
    external count of the original instance for every committee.
    """
    voters = set(inst.voters)
    approvals = {v: set(a) for v, a in inst.approvals.items()}
    cvm = dict(inst.candidate_voter_map)
    fresh = max(voters | inst.candidates, default=-1) + 1
    for c in sorted(inst.candidates):
        v = cvm.get(c)
        if v is None:
            voters.add(fresh)
            approvals[fresh] = {c}
            cvm[c] = fresh
            fresh += 1
        else:
            approvals[v].add(c)
    return ElectionInstance(
        voters=frozenset(voters),
        candidates=inst.candidates,
        approvals={v: frozenset(a) for v, a in approvals.items()},
        setting=RATIONAL_CANDIDATE,
        committee_size=inst.committee_size,
        candidate_voter_map=cvm,
    )


def greedy_committee(inst: ElectionInstance) -> Committee:
    """Coverage greedy on the self-approval closure, scored on the original.

    Each step elects the candidate covering the most not-yet-represented
    closure voters, ties to the lowest candidate id.
    """
    p = inst.committee_size
    if p > len(inst.candidates):
        raise InfeasibleCardinalityError(
            f"committee size {p} exceeds {len(inst.candidates)} candidates"
        )
    closure = self_approval_closure(inst)
    covered: set[int] = set()
    elected: list[int] = []
    remaining = set(inst.candidates)
    for _ in range(p):
        best_c = -1
        best_gain = -1
        for c in sorted(remaining):
            gain = len(closure.supporters[c] - covered)
            if gain > best_gain:
                best_c, best_gain = c, gain
        elected.append(best_c)
        remaining.discard(best_c)
        covered |= closure.supporters[best_c]
    return evaluate_committee(inst, elected)


def maximum_matching(d: DirectedGraph) -> tuple[tuple[int, int], ...]:
    """Maximum matching of the digraph's underlying simple undirected graph."""
    match = max_cardinality_matching(d.n, d.undirected_edges())
    return matching_pairs(match)


def matching_committee(inst: ElectionInstance) -> Committee:
    """Elect along a maximum matching of the approval digraph (non-secrecy).

    Every approval becomes an arc voter -> candidate (self-arcs dropped);
    each matched pair, taken in ascending order, elects an endpoint that
    the other endpoint approves and reserves that other endpoint as an
    externally represented partner.  Leftover seats go to the lowest-id
    candidates that are neither elected nor reserved, falling back to
    reserved partners only when no others remain.
    """
    if inst.setting != NON_SECRECY:
        raise WrongSettingError("matching committee needs open voter identities")
    p = inst.committee_size
    if p > len(inst.candidates):
        raise InfeasibleCardinalityError(
            f"committee size {p} exceeds {len(inst.candidates)} candidates"
        )
    ids = inst.voters | inst.candidates
    n = max(ids, default=-1) + 1
    arcs = set()
    for v in sorted(inst.voters):
        for c in sorted(inst.approvals[v]):
            if v != c:
                arcs.add((v, c))
    pairs = maximum_matching(DirectedGraph(n, arcs))

    elected: list[int] = []
    elected_set: set[int] = set()
    reserved: set[int] = set()
    for x, y in pairs:
        if len(elected) == p:
            break
        options = []
        for cand, partner in ((x, y), (y, x)):
            if (
                cand in inst.candidates
                and cand in inst.approvals.get(partner, frozenset())
                and cand not in elected_set
                and cand not in reserved
            ):
                options.append((cand, partner))
        if not options:
            continue
        cand, partner = min(options)
        elected.append(cand)
        elected_set.add(cand)
        reserved.add(partner)
    for c in sorted(inst.candidates):
        if len(elected) == p:
            break
        if c not in elected_set and c not in reserved:
            elected.append(c)
            elected_set.add(c)
    for c in sorted(inst.candidates):
        if len(elected) == p:
            break
        if c not in elected_set:
            elected.append(c)
            elected_set.add(c)
    return evaluate_committee(inst, elected)


def solve_ext_representation(inst: ElectionInstance) -> Committee:
    """Best committee the setting allows.

    Non-secrecy compares the greedy and matching committees by external
    count (ties go to greedy); rational-candidate has only the greedy.
    """
    best = greedy_committee(inst)
    if inst.setting == NON_SECRECY:
        matched = matching_committee(inst)
        if matched.ext_value > best.ext_value:
            best = matched
    return best
