"""External-influence maximization: approximate solvers with exact
certification for graph domination, approval-committee elections, and
0/1-valued object allocation."""

from .bounds import (
    APPROX_E,
    RATIO_TOLERANCE,
    aux_bound_delta0,
    aux_bound_delta1,
    ext_domination_bound,
    ext_representation_bound,
)
from .decomposition import (
    AuxiliaryGraph,
    SpiderClass,
    TreeComponent,
    build_auxiliary_graph,
    classify_component,
    decompose_tree,
    designate_center,
    solve_ext_domination,
)
from .domination import (
    DominationSolution,
    GreedyTrace,
    TieBreakPolicy,
    coverage_profile,
    dom_count,
    ext_count,
    greedy_dominators,
)
from .elections import (
    NON_SECRECY,
    RATIONAL_CANDIDATE,
    Committee,
    ElectionInstance,
    external_rep_count,
    greedy_committee,
    matching_committee,
    maximum_matching,
    represented_count,
    self_approval_closure,
    solve_ext_representation,
)
from .generators import (
    gen_classic,
    gen_random,
    gen_random_election,
    gen_reduction_graph,
)
from .graphs import (
    DirectedGraph,
    RootedTree,
    UndirectedGraph,
    k_hop_closed_neighborhood,
    spanning_forest,
    subtree_sizes,
)
from .optext import (
    Allocation,
    OptExtInstance,
    externality_of_allocation,
    reduce_and_solve,
)
from .oracle import (
    RatioReport,
    all_passed,
    certify,
    exact_ext_domination,
    exact_ext_representation,
    exact_maximum_matching,
)

__version__ = "0.1.0"
