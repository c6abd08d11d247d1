"""Command-line surface: solve, oracle, certify, decompose, gen.

    extdom solve --alg auxgreedy --p 2 --k 1 --delta 1 fixtures/path5.graph
    extdom oracle --p 2 --k 1 fixtures/path5.graph
    extdom decompose --delta 1 --k 1 fixtures/path5.graph
    extdom gen er --n 8 --prob 0.3 --seed 7 -o random.graph
    extdom certify --bound domination --count 100 --seed 7

Reports are plain text by default or JSON with --format json; JSON reports
carry the keys instance, algorithm, value, optimum, ratio, bound and
verdict.  Exit codes: 0 when everything passed, 1 when some certification
verdict failed, 2 on bad input.  The environment variable
EXTDOM_ORACLE_BUDGET overrides the default subset-enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from decimal import Decimal, getcontext
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable

from . import bounds
from .decomposition import (
    build_auxiliary_graph,
    classify_component,
    designate_center,
    solve_ext_domination,
)
from .domination import TieBreakPolicy, ext_count, greedy_dominators
from .elections import (
    NON_SECRECY,
    RATIONAL_CANDIDATE,
    ElectionInstance,
    greedy_committee,
    matching_committee,
    solve_ext_representation,
)
from .errors import (
    InfeasibleCardinalityError,
    InstanceError,
    OracleBudgetError,
    ParseError,
    SettingViolationError,
    StructureError,
    WrongSettingError,
)
from .generators import gen_classic, gen_random, gen_random_election, gen_reduction_graph
from .graphs import UndirectedGraph
from .io import (
    parse_election_file,
    parse_graph_file,
    write_election_file,
    write_graph_file,
)
from .optext import OptExtInstance, reduce_and_solve
from .oracle import (
    DEFAULT_BUDGET,
    RatioReport,
    all_passed,
    certify,
    exact_ext_domination,
    exact_ext_representation,
)

getcontext().prec = 50

GRAPH_ALGS = ("greedy", "auxgreedy", "optext")
ELECTION_ALGS = ("greedy-committee", "matching-committee", "best-committee")

USAGE_ERRORS = (
    ParseError,
    InstanceError,
    InfeasibleCardinalityError,
    SettingViolationError,
    WrongSettingError,
    StructureError,
    ValueError,
    OSError,
)


def _ratio_str(value: Fraction | None) -> str | None:
    if value is None:
        return None
    return str(
        (Decimal(value.numerator) / Decimal(value.denominator)).quantize(
            Decimal("0.000000000000")
        )
    )


def _default_budget() -> int:
    raw = os.environ.get("EXTDOM_ORACLE_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _is_election_file(path: str) -> bool:
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                return line.split()[0] == "election"
    return False


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, val in payload.items():
            print(f"{key}: {val}")


# ---------------------------------------------------------------- solve


def _cmd_solve(args) -> int:
    label = str(args.input)
    if args.alg in ELECTION_ALGS:
        inst = parse_election_file(args.input)
        if args.p is not None:
            inst = inst.with_committee_size(args.p)
        committee = {
            "greedy-committee": greedy_committee,
            "matching-committee": matching_committee,
            "best-committee": solve_ext_representation,
        }[args.alg](inst)
        _emit(
            {
                "instance": label,
                "algorithm": args.alg,
                "committee": sorted(committee.members),
                "represented": committee.rep_value,
                "value": committee.ext_value,
            },
            args.format,
        )
        return 0

    loaded = parse_graph_file(args.input)
    if not isinstance(loaded.graph, UndirectedGraph):
        raise InstanceError("domination solvers need an undirected graph")
    g = loaded.graph
    if args.alg == "optext":
        if args.ones is None:
            raise InstanceError("optext needs --ones (number of 1-valued objects)")
        total = g.n if args.objects is None else args.objects
        if args.ones > total:
            raise InstanceError("--ones cannot exceed the object count")
        valuation = {o: 1 if o < args.ones else 0 for o in range(total)}
        inst = OptExtInstance.normalized(
            g, list(range(total)), valuation, pad=not args.no_pad
        )
        alloc = reduce_and_solve(inst)
        _emit(
            {
                "instance": label,
                "algorithm": "optext",
                "assignment": {str(v): o for v, o in sorted(alloc.assign.items())},
                "value": alloc.externality,
            },
            args.format,
        )
        return 0
    if args.p is None:
        raise InstanceError("graph solvers need --p")
    if args.alg == "greedy":
        policy = (
            TieBreakPolicy.highest_id()
            if args.tie == "highest-id"
            else TieBreakPolicy.lowest_id()
        )
        trace = greedy_dominators(g, args.p, args.k, policy)
        dominators = list(trace.chosen)
        value = ext_count(g, dominators, args.k)
    else:
        solution = solve_ext_domination(g, args.p, args.k, args.delta)
        dominators = list(solution.dominators)
        value = solution.ext_value
    _emit(
        {
            "instance": label,
            "algorithm": args.alg,
            "dominators": sorted(dominators),
            "value": value,
        },
        args.format,
    )
    return 0


# ---------------------------------------------------------------- oracle


def _cmd_oracle(args) -> int:
    label = str(args.input)
    budget = args.budget or _default_budget()
    if _is_election_file(args.input):
        inst = parse_election_file(args.input)
        if args.p is not None:
            inst = inst.with_committee_size(args.p)
        result = exact_ext_representation(inst, budget=budget)
        _emit(
            {
                "instance": label,
                "algorithm": "exhaustive",
                "value": result.value,
                "witness": list(result.witness),
            },
            args.format,
        )
        return 0
    loaded = parse_graph_file(args.input)
    if not isinstance(loaded.graph, UndirectedGraph):
        raise InstanceError("the domination oracle needs an undirected graph")
    if args.p is None:
        raise InstanceError("the domination oracle needs --p")
    result = exact_ext_domination(loaded.graph, args.p, args.k, budget=budget)
    _emit(
        {
            "instance": label,
            "algorithm": "exhaustive",
            "value": result.value,
            "witness": list(result.witness),
            "optimal_count": result.optimal_count,
        },
        args.format,
    )
    return 0


# ---------------------------------------------------------------- decompose


def _cmd_decompose(args) -> int:
    loaded = parse_graph_file(args.input)
    if not isinstance(loaded.graph, UndirectedGraph):
        raise InstanceError("decomposition needs an undirected graph")
    aux = build_auxiliary_graph(loaded.graph, args.delta, args.k)
    rows = []
    for comp in aux.components:
        row: dict = {
            "vertices": sorted(comp.vertices),
            "root": comp.root,
            "absorbed_remainder": comp.absorbed_remainder,
        }
        if args.delta == 1 and args.k == 1 and len(comp) >= 3:
            shape = classify_component(comp)
            row["shape"] = f"spider({shape.leaf_children},{shape.path_children})"
            row["center"] = designate_center(comp)
        rows.append(row)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "instance": str(args.input),
                    "components": rows,
                    "centers": sorted(aux.centers),
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for i, row in enumerate(rows, start=1):
            bits = [f"component {i}: vertices={row['vertices']} root={row['root']}"]
            if "shape" in row:
                bits.append(f"shape={row['shape']} center={row['center']}")
            if row["absorbed_remainder"]:
                bits.append("absorbed-remainder")
            print(" ".join(bits))
    return 0


# ---------------------------------------------------------------- gen


def _cmd_gen(args) -> int:
    if args.family in ("path", "cycle", "star", "complete"):
        out = gen_classic(args.family, args.n)
        write_graph_file(out, args.output)
    elif args.family in ("er", "tree", "connected"):
        kind = "er-graph" if args.family == "er" else args.family
        out = gen_random(kind, args.n, args.prob, args.seed)
        write_graph_file(out, args.output)
    elif args.family == "reduction":
        base = parse_graph_file(args.base)
        if not isinstance(base.graph, UndirectedGraph):
            raise InstanceError("the reduction gadget needs an undirected base graph")
        out = gen_reduction_graph(base.graph, args.khops, args.q1, args.q2)
        write_graph_file(out, args.output)
    else:
        inst = gen_random_election(
            n_voters=args.voters,
            m_candidates=args.candidates,
            approval_prob=args.prob,
            overlap_fraction=args.overlap,
            require_other_approval=args.require_other_approval,
            seed=args.seed,
            setting=args.setting,
            committee_size=args.p,
        )
        write_election_file(inst, args.output)
    print(f"wrote {args.output}")
    return 0


# ---------------------------------------------------------------- certify

CaseIter = Iterable[tuple[str, Callable[[], tuple[int, int]]]]


def domination_cases(
    graphs: Iterable[tuple[str, UndirectedGraph]],
    k: int,
    budget: int,
    solver: Callable[[UndirectedGraph, int], int],
    p_values: Callable[[int], Iterable[int]] = lambda n: range(1, n),
) -> CaseIter:
    """One case per (graph, p): solver value vs exhaustive optimum."""
    for label, g in graphs:
        for p in p_values(g.n):

            def thunk(g=g, p=p):
                return solver(g, p), exact_ext_domination(g, p, k, budget).value

            yield f"{label} p={p}", thunk


def election_cases(
    instances: Iterable[tuple[str, ElectionInstance]],
    budget: int,
    solver: Callable[[ElectionInstance], int],
) -> CaseIter:
    for label, inst in instances:
        def thunk(inst=inst):
            return solver(inst), exact_ext_representation(inst, budget).value

        yield label, thunk


def sweep_graphs(
    count: int, n_min: int, n_max: int, seed: int, prob: float = 0.35
) -> list[tuple[str, UndirectedGraph]]:
    """Seeded stream of connected random graphs (random tree plus extras)."""
    out = []
    for i in range(count):
        n = n_min + (seed + i) % (n_max - n_min + 1)
        g = gen_random("connected", n, prob, seed + 7919 * i)
        out.append((f"connected n={n} seed={seed + 7919 * i}", g))
    return out


def sweep_elections(
    count: int,
    max_voters: int,
    max_candidates: int,
    seed: int,
    setting: str,
    require_other_approval: bool,
) -> list[tuple[str, ElectionInstance]]:
    out = []
    i = 0
    attempt = 0
    while i < count:
        s = seed + 104729 * attempt
        attempt += 1
        n = 2 + s % (max_voters - 1)
        m = 1 + (s // 7) % max_candidates
        if require_other_approval:
            m = min(m, n)
            overlap = 1.0
        else:
            overlap = ((s // 11) % 5) / 4.0
            if int(overlap * m) > n:
                overlap = 1.0 if m <= n else 0.0
        prob = 0.15 + ((s // 13) % 4) * 0.2
        inst = gen_random_election(
            n_voters=n,
            m_candidates=m,
            approval_prob=prob,
            overlap_fraction=overlap,
            require_other_approval=require_other_approval,
            seed=s,
            setting=setting,
            committee_size=1 + (s // 17) % m,
        )
        out.append((f"election n={n} m={m} seed={s}", inst))
        i += 1
    return out


def _solver_auxgreedy(k: int, delta: int) -> Callable[[UndirectedGraph, int], int]:
    def solve(g: UndirectedGraph, p: int) -> int:
        return solve_ext_domination(g, p, k, delta).ext_value

    return solve


def _solver_plain_greedy(k: int) -> Callable[[UndirectedGraph, int], int]:
    def solve(g: UndirectedGraph, p: int) -> int:
        trace = greedy_dominators(g, p, k, TieBreakPolicy.lowest_id())
        return ext_count(g, trace.chosen, k)

    return solve


def _solver_allocation(g: UndirectedGraph, p: int) -> int:
    valuation = {o: 1 if o < p else 0 for o in range(g.n)}
    inst = OptExtInstance(g, tuple(range(g.n)), valuation)
    return reduce_and_solve(inst).externality


BOUND_NAMES = (
    "domination",
    "domination-d0",
    "domination-d1",
    "domination-greedy",
    "representation",
    "representation-greedy",
    "allocation",
)

_BOUND_SOLVERS = {
    "domination": "auxgreedy",
    "domination-d0": "auxgreedy",
    "domination-d1": "auxgreedy",
    "domination-greedy": "greedy",
    "representation": "best-committee",
    "representation-greedy": "greedy-committee",
    "allocation": "optext",
}


def _certify_cases(args, budget: int) -> tuple[CaseIter, Fraction]:
    name = args.bound
    if name in ("domination", "allocation"):
        bound = bounds.ext_domination_bound()
        solver = (
            _solver_allocation if name == "allocation" else _solver_auxgreedy(1, 1)
        )
        graphs = _gather_graphs(args, default_n=(3, 9))
        return domination_cases(graphs, 1, budget, solver), bound
    if name in ("domination-d0", "domination-d1"):
        delta = 0 if name.endswith("d0") else 1
        k = args.k if args.k is not None else 2
        bound = (
            bounds.aux_bound_delta0(k) if delta == 0 else bounds.aux_bound_delta1(k)
        )
        graphs = _gather_graphs(args, default_n=(4, 10))
        return domination_cases(graphs, k, budget, _solver_auxgreedy(k, delta)), bound
    if name == "domination-greedy":
        k = args.k if args.k is not None else 1
        bound = bounds.ext_representation_bound()
        graphs = _gather_graphs(args, default_n=(2, 9))
        return domination_cases(graphs, k, budget, _solver_plain_greedy(k)), bound
    # election bounds
    bound = bounds.ext_representation_bound()
    require_other = name == "representation-greedy"
    if args.inputs:
        instances = [(str(p), parse_election_file(p)) for p in _expand_paths(args.inputs)]
    else:
        instances = sweep_elections(
            args.count,
            max_voters=10,
            max_candidates=8,
            seed=args.seed,
            setting=args.setting,
            require_other_approval=require_other,
        )
    if require_other:
        solver = lambda inst: greedy_committee(inst).ext_value
    else:
        solver = lambda inst: solve_ext_representation(inst).ext_value
    return election_cases(instances, budget, solver), bound


def _expand_paths(inputs) -> list[Path]:
    out: list[Path] = []
    for raw in inputs:
        path = Path(raw)
        if path.is_dir():
            out.extend(sorted(p for p in path.iterdir() if p.is_file()))
        else:
            out.append(path)
    return out


def _gather_graphs(args, default_n) -> list[tuple[str, UndirectedGraph]]:
    if args.inputs:
        graphs = []
        for p in _expand_paths(args.inputs):
            loaded = parse_graph_file(p)
            if not isinstance(loaded.graph, UndirectedGraph):
                raise InstanceError(f"{p}: certification sweeps need undirected graphs")
            graphs.append((str(p), loaded.graph))
        return graphs
    n_min = args.n_min or default_n[0]
    n_max = args.n_max or default_n[1]
    return sweep_graphs(args.count, n_min, n_max, args.seed, args.prob)


def _report_payload(report: RatioReport, algorithm: str) -> dict:
    return {
        "instance": report.label,
        "algorithm": algorithm,
        "value": report.algorithm_value,
        "optimum": report.optimal_value,
        "ratio": _ratio_str(report.ratio),
        "bound": _ratio_str(report.bound),
        "verdict": "pass" if report.passed else "fail",
        "vacuous": report.vacuous,
        "error": report.error,
    }


def _cmd_certify(args) -> int:
    budget = args.budget or _default_budget()
    cases, bound = _certify_cases(args, budget)
    reports = certify(cases, bound, bound_name=args.bound)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "bound": args.bound,
                    "bound_value": _ratio_str(bound),
                    "reports": [_report_payload(r, _BOUND_SOLVERS[args.bound]) for r in reports],
                    "verdict": "pass" if all_passed(reports) else "fail",
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for r in reports:
            if r.error:
                print(f"FAIL {r.label}: {r.error}")
            elif r.vacuous:
                print(f"pass {r.label}: optimum 0 (vacuous)")
            else:
                status = "pass" if r.passed else "FAIL"
                print(
                    f"{status} {r.label}: {r.algorithm_value}/{r.optimal_value}"
                    f" ratio={_ratio_str(r.ratio)} bound={_ratio_str(r.bound)}"
                )
        worst = min(
            (r.ratio for r in reports if r.ratio is not None), default=None
        )
        print(
            f"{len(reports)} instances, bound {args.bound} = {_ratio_str(bound)}, "
            f"worst ratio {_ratio_str(worst) if worst is not None else 'n/a'}: "
            f"{'ALL PASS' if all_passed(reports) else 'FAILURES'}"
        )
    return 0 if all_passed(reports) else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extdom",
        description="External-influence maximization: solvers, oracles, certification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="run one solver on one instance")
    sp.add_argument("--alg", required=True, choices=GRAPH_ALGS + ELECTION_ALGS)
    sp.add_argument("--p", type=int, default=None, help="dominators / committee size")
    sp.add_argument("--k", type=int, default=1, help="hop radius")
    sp.add_argument("--delta", type=int, default=1, choices=(0, 1))
    sp.add_argument("--tie", choices=("lowest-id", "highest-id"), default="lowest-id")
    sp.add_argument("--ones", type=int, default=None, help="1-valued object count")
    sp.add_argument("--objects", type=int, default=None, help="total object count")
    sp.add_argument("--no-pad", action="store_true", help="reject short object lists")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("input")
    sp.set_defaults(func=_cmd_solve)

    op = sub.add_parser("oracle", help="exact optimum by exhaustive enumeration")
    op.add_argument("--p", type=int, default=None)
    op.add_argument("--k", type=int, default=1)
    op.add_argument("--budget", type=int, default=None)
    op.add_argument("--format", choices=("text", "json"), default="text")
    op.add_argument("input")
    op.set_defaults(func=_cmd_oracle)

    dp = sub.add_parser("decompose", help="print decomposition components")
    dp.add_argument("--delta", type=int, default=1, choices=(0, 1))
    dp.add_argument("--k", type=int, default=1)
    dp.add_argument("--format", choices=("text", "json"), default="text")
    dp.add_argument("input")
    dp.set_defaults(func=_cmd_decompose)

    gp = sub.add_parser("gen", help="write a generated instance")
    gp.add_argument(
        "family",
        choices=(
            "path",
            "cycle",
            "star",
            "complete",
            "er",
            "tree",
            "connected",
            "reduction",
            "election",
        ),
    )
    gp.add_argument("--n", type=int, default=5)
    gp.add_argument("--prob", type=float, default=0.3)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--base", default=None, help="base graph for the reduction gadget")
    gp.add_argument("--khops", type=int, default=2)
    gp.add_argument("--q1", type=int, default=2, help="copies of the base graph")
    gp.add_argument("--q2", type=int, default=2, help="leaves per star")
    gp.add_argument("--voters", type=int, default=9)
    gp.add_argument("--candidates", type=int, default=3)
    gp.add_argument("--overlap", type=float, default=1.0)
    gp.add_argument("--require-other-approval", action="store_true")
    gp.add_argument("--setting", choices=(NON_SECRECY, RATIONAL_CANDIDATE), default=NON_SECRECY)
    gp.add_argument("--p", type=int, default=1)
    gp.add_argument("-o", "--output", required=True)
    gp.set_defaults(func=_cmd_gen)

    cp = sub.add_parser("certify", help="sweep instances against a named bound")
    cp.add_argument("--bound", required=True, choices=BOUND_NAMES)
    cp.add_argument(
        "--k",
        type=int,
        default=None,
        help="hop radius for the domination-d0/d1/greedy bounds (2, 2, 1)",
    )
    cp.add_argument("--count", type=int, default=100)
    cp.add_argument("--n-min", type=int, default=None)
    cp.add_argument("--n-max", type=int, default=None)
    cp.add_argument("--prob", type=float, default=0.35)
    cp.add_argument("--seed", type=int, default=1)
    cp.add_argument("--setting", choices=(NON_SECRECY, RATIONAL_CANDIDATE), default=NON_SECRECY)
    cp.add_argument("--budget", type=int, default=None)
    cp.add_argument("--format", choices=("text", "json"), default="text")
    cp.add_argument("inputs", nargs="*", help="instance files or directories")
    cp.set_defaults(func=_cmd_certify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OracleBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
