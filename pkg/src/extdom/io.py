"""Instance file formats.

Graph files:

    # comment lines start with '#'
    undirected <n> <m>        (or: directed <n> <m>)
    <u> <v>                   one line per edge or arc

Endpoints are either 0-based integer ids (all of them, each < n) or
arbitrary string labels; labels are assigned dense ids in order of first
appearance and the label table is returned alongside the graph.
Self-loops, duplicate edges and out-of-range ids are rejected with the
offending line number.

Election files:

    election <n_voters> <m_candidates> <setting> <p>
    candidates: c0 c1 ...                    (optional, declares Z)
    v<i>: c<j> c<j> ...                      one line per voter
    candidate-voters: v<i>=c<j> ...          (optional)

Voter and candidate numbers are free-form non-negative integers.  Under
non-secrecy the two token spaces name one shared namespace, so every
candidate-voter pair must match ids.  Under rational-candidate the pairs
map secret ballot ids to candidates, and every mapped candidate must
approve itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elections import NON_SECRECY, SETTINGS, ElectionInstance
from .errors import ParseError
from .graphs import DirectedGraph, UndirectedGraph


@dataclass(frozen=True)
class LoadedGraph:
    graph: UndirectedGraph | DirectedGraph
    labels: tuple[str, ...] | None

    @property
    def directed(self) -> bool:
        return isinstance(self.graph, DirectedGraph)


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def parse_graph_text(text: str) -> LoadedGraph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty graph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] not in ("undirected", "directed"):
        raise ParseError("expected header 'undirected <n> <m>' or 'directed <n> <m>'", lineno)
    try:
        n, m = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError("vertex and edge counts must be integers", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("counts must be non-negative", lineno)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}", lineno)

    rows: list[tuple[int, str, str]] = []
    for ln, line in body:
        toks = line.split()
        if len(toks) != 2:
            raise ParseError("expected two endpoints", ln)
        rows.append((ln, toks[0], toks[1]))

    def as_id(tok: str) -> int | None:
        try:
            return int(tok)
        except ValueError:
            return None

    all_int = all(as_id(a) is not None and as_id(b) is not None for _, a, b in rows)
    labels: tuple[str, ...] | None = None
    if all_int:
        ids = []
        for ln, a, b in rows:
            u, v = int(a), int(b)
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(f"vertex id {x} out of range 0..{n - 1}", ln)
            ids.append((ln, u, v))
    else:
        table: dict[str, int] = {}
        ids = []
        for ln, a, b in rows:
            pair = []
            for tok in (a, b):
                if tok not in table:
                    if len(table) == n:
                        raise ParseError(
                            f"label {tok!r} would be vertex {n}, but n = {n}", ln
                        )
                    table[tok] = len(table)
                pair.append(table[tok])
            ids.append((ln, pair[0], pair[1]))
        names = {i: s for s, i in table.items()}
        labels = tuple(names.get(i, f"v{i}") for i in range(n))

    directed = parts[0] == "directed"
    seen: set[tuple[int, int]] = set()
    pairs: list[tuple[int, int]] = []
    for ln, u, v in ids:
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", ln)
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate {'arc' if directed else 'edge'} {key}", ln)
        seen.add(key)
        pairs.append((u, v))
    graph = DirectedGraph(n, pairs) if directed else UndirectedGraph(n, pairs)
    return LoadedGraph(graph=graph, labels=labels)


def parse_graph_file(path) -> LoadedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def write_graph_text(graph: UndirectedGraph | DirectedGraph) -> str:
    directed = isinstance(graph, DirectedGraph)
    pairs = sorted(graph.arcs) if directed else sorted(graph.edges)
    kind = "directed" if directed else "undirected"
    lines = [f"{kind} {graph.n} {len(pairs)}"]
    lines.extend(f"{u} {v}" for u, v in pairs)
    return "\n".join(lines) + "\n"


def write_graph_file(graph: UndirectedGraph | DirectedGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_graph_text(graph))


def _voter_token(tok: str, lineno: int) -> int:
    if not tok.startswith("v") or not tok[1:].isdigit():
        raise ParseError(f"expected voter token 'v<int>', got {tok!r}", lineno)
    return int(tok[1:])


def _candidate_token(tok: str, lineno: int) -> int:
    if not tok.startswith("c") or not tok[1:].isdigit():
        raise ParseError(f"expected candidate token 'c<int>', got {tok!r}", lineno)
    return int(tok[1:])


def parse_election_text(text: str) -> ElectionInstance:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty election file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 5 or parts[0] != "election":
        raise ParseError(
            "expected header 'election <n_voters> <m_candidates> <setting> <p>'", lineno
        )
    try:
        n_voters, m_candidates, p = int(parts[1]), int(parts[2]), int(parts[4])
    except ValueError:
        raise ParseError("counts and committee size must be integers", lineno) from None
    setting = parts[3]
    if setting not in SETTINGS:
        raise ParseError(f"unknown setting {setting!r}, expected one of {SETTINGS}", lineno)

    approvals: dict[int, frozenset[int]] = {}
    declared: set[int] = set()
    cv_pairs: list[tuple[int, int, int]] = []
    saw_cv_line = False
    for ln, line in lines[1:]:
        if line.startswith("candidates:"):
            for tok in line.split(":", 1)[1].split():
                declared.add(_candidate_token(tok, ln))
            continue
        if line.startswith("candidate-voters:"):
            if saw_cv_line:
                raise ParseError("duplicate candidate-voters line", ln)
            saw_cv_line = True
            for tok in line.split(":", 1)[1].split():
                if "=" not in tok:
                    raise ParseError(f"expected 'v<i>=c<j>', got {tok!r}", ln)
                vtok, ctok = tok.split("=", 1)
                cv_pairs.append(
                    (ln, _voter_token(vtok, ln), _candidate_token(ctok, ln))
                )
            continue
        if ":" not in line:
            raise ParseError("expected 'v<i>: c<j> ...'", ln)
        head, rest = line.split(":", 1)
        voter = _voter_token(head.strip(), ln)
        if voter in approvals:
            raise ParseError(f"duplicate ballot for voter v{voter}", ln)
        approvals[voter] = frozenset(
            _candidate_token(tok, ln) for tok in rest.split()
        )

    if len(approvals) != n_voters:
        raise ParseError(
            f"expected {n_voters} voter lines, found {len(approvals)}", lineno
        )
    candidates = declared | {c for a in approvals.values() for c in a}
    candidates |= {c for _, _, c in cv_pairs}
    if len(candidates) != m_candidates:
        raise ParseError(
            f"header declares {m_candidates} candidates but the file names "
            f"{len(candidates)}; add a 'candidates:' line for silent ones",
            lineno,
        )
    voters = frozenset(approvals)
    cvm: dict[int, int] = {}
    for ln, v, c in cv_pairs:
        if v not in voters:
            raise ParseError(f"unknown voter v{v} in candidate-voters", ln)
        if c not in candidates:
            raise ParseError(f"unknown candidate c{c} in candidate-voters", ln)
        if c in cvm or v in cvm.values():
            raise ParseError(f"duplicate mapping for v{v}=c{c}", ln)
        if setting == NON_SECRECY and v != c:
            raise ParseError(
                f"non-secrecy shares one namespace, so v{v}=c{c} is contradictory", ln
            )
        cvm[c] = v
    return ElectionInstance(
        voters=voters,
        candidates=frozenset(candidates),
        approvals=approvals,
        setting=setting,
        committee_size=p,
        candidate_voter_map=cvm,
    )


def parse_election_file(path) -> ElectionInstance:
    with open(path, encoding="utf-8") as fh:
        return parse_election_text(fh.read())


def write_election_text(inst: ElectionInstance) -> str:
    lines = [
        f"election {len(inst.voters)} {len(inst.candidates)} "
        f"{inst.setting} {inst.committee_size}"
    ]
    lines.append("candidates: " + " ".join(f"c{c}" for c in sorted(inst.candidates)))
    for v in sorted(inst.voters):
        approved = " ".join(f"c{c}" for c in sorted(inst.approvals[v]))
        lines.append(f"v{v}: {approved}".rstrip())
    if inst.candidate_voter_map:
        pairs = " ".join(
            f"v{v}=c{c}" for c, v in sorted(inst.candidate_voter_map.items())
        )
        lines.append(f"candidate-voters: {pairs}")
    return "\n".join(lines) + "\n"


def write_election_file(inst: ElectionInstance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_election_text(inst))
