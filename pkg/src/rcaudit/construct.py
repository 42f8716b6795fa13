"""Constructive edge coloring within the minimum-degree bound, with a
full audit trail.

The recursion colors a connected graph G on n vertices with minimum
degree d using at most n - d colors. Let K be a maximal clique consisting
only of minimum-degree vertices (greedy over ascending ids, so the choice
is deterministic). Deleting K splits the rest into components G_1..G_t,
ordered so the lead component touches the largest part of K. Each
component is colored recursively with its own disjoint palette, every
K-to-G_i edge gets one fresh color c_i, and the edges inside K get:

- the lead cross color c_1, when every K vertex touches the lead
  component (full attachment), or, failing that, when every component's
  minimum degree sits exactly at d - |K| + 1 (the reused-color branch);
- a fresh color of their own, when some component has minimum degree at
  least d - |K| + 2;
- a fresh color after contracting K into a single vertex and recursing on
  the contracted graph, when only one K vertex touches each component
  (lift: an edge from K to w takes the color of the contracted edge to w).

The induction measure is n - d: every recursive call must strictly
decrease it, and every level must stay within its color budget. Both are
checked at run time and recorded in the trace; the final coloring is
handed to the rainbow verifier and the outcome stored at the trace root.
A violation of any of these checks is surfaced as a finding (with a
reproducer), never repaired silently: the reused-color branch in
particular is executed exactly as stated so that instances where it fails
verification show up as findings.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .graphs import (
    Graph,
    contract_set,
    delete_vertices,
    components,
    is_complete,
    is_connected,
    to_graph6,
)
from .rainbow import EdgeColoring, FailingPair, is_rainbow_connected

__all__ = [
    "Case",
    "ComponentRecord",
    "DecompositionRecord",
    "ContractionInfo",
    "AuditTrace",
    "ConstructionError",
    "Finding",
    "min_degree_clique",
    "decompose",
    "construct_coloring",
    "audit_construction",
    "run_construction",
    "trace_to_dict",
    "iter_trace",
    "measure_violations",
]


class Case(Enum):
    BASE = "base"
    FULL_ATTACHMENT = "full_attachment"
    NEW_CLIQUE_COLOR = "new_clique_color"
    REUSED_CLIQUE_COLOR = "reused_clique_color"
    CONTRACTION = "contraction"


@dataclass(frozen=True)
class ComponentRecord:
    """One component of G minus the clique, in the ids of that graph."""

    vertices: tuple[int, ...]
    size: int
    min_degree: int
    attachment: tuple[int, ...]  # clique vertices with a neighbor inside


@dataclass(frozen=True)
class DecompositionRecord:
    clique: tuple[int, ...]
    k: int
    components: tuple[ComponentRecord, ...]  # lead component first
    k1: int
    t: int
    case: Case


@dataclass(frozen=True)
class ContractionInfo:
    min_degree_after: int
    measure_after: int
    merged_label: str


@dataclass
class AuditTrace:
    """Recursion tree of the construction.

    vertex_labels names each local vertex in terms of the original input
    (contraction nodes label the merged vertex with the set it replaced),
    so traces stay checkable against the graph the user supplied.
    verification is populated at the root only.
    """

    case: Case
    n: int
    min_degree: int
    budget: int
    colors_used: int
    vertex_labels: tuple[str, ...]
    decomposition: DecompositionRecord | None = None
    children: tuple["AuditTrace", ...] = ()
    contraction: ContractionInfo | None = None
    verification: str | FailingPair | None = None


class ConstructionError(RuntimeError):
    """A structural invariant (measure decrease, color budget, degree
    bound) failed mid-construction. Carries whatever context exists."""

    def __init__(self, message: str, context: dict | None = None):
        super().__init__(message)
        self.context = context or {}


@dataclass(frozen=True)
class Finding:
    """A graph on which the construction did not deliver: either its
    coloring failed verification or an internal invariant broke."""

    kind: str  # "verification-failed" | "budget-exceeded" | "structural"
    graph6: str
    failing_pair: FailingPair | None
    trace: AuditTrace | None
    detail: str


def min_degree_clique(g: Graph) -> tuple[int, ...]:
    """Greedy maximal clique of minimum-degree vertices, ascending ids.

    Maximality holds against all minimum-degree vertices: anything
    skipped was non-adjacent to some earlier member. For a connected,
    non-complete graph the size is between 1 and the minimum degree.
    """
    if not is_connected(g):
        raise ValueError("clique selection requires a connected graph")
    if is_complete(g):
        raise ValueError("complete graph: base case, no decomposition clique")
    delta = min(g.degree(v) for v in range(g.n))
    clique: list[int] = []
    for v in range(g.n):
        if g.degree(v) == delta and all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    assert 1 <= len(clique) <= delta
    return tuple(clique)


def _validate_clique(g: Graph, clique: tuple[int, ...]) -> int:
    if not clique:
        raise ValueError("clique must be nonempty")
    delta = min(g.degree(v) for v in range(g.n))
    for v in clique:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
        if g.degree(v) != delta:
            raise ValueError(f"vertex {v} does not have minimum degree")
    for u, v in combinations(clique, 2):
        if not g.has_edge(u, v):
            raise ValueError(f"clique vertices {u} and {v} are not adjacent")
    cset = set(clique)
    for v in range(g.n):
        if v not in cset and g.degree(v) == delta:
            if all(g.has_edge(v, u) for u in clique):
                raise ValueError(f"clique is not maximal: vertex {v} extends it")
    return delta


def decompose(g: Graph, clique: tuple[int, ...]) -> DecompositionRecord:
    """Split G minus the clique into components and classify the level.

    Components are ordered by attachment size (descending), ties by
    minimum vertex id. Every component's minimum degree is checked
    against the floor d - k + 1 that clique maximality guarantees.
    """
    delta = _validate_clique(g, clique)
    k = len(clique)
    rest, kept = delete_vertices(g, clique)
    if rest.n == 0:
        raise ConstructionError(
            "deleting the clique removed every vertex of a non-complete graph"
        )
    part = components(rest)
    comps = []
    for block in part.blocks:
        orig = tuple(kept[v] for v in block)
        sub, _ = delete_vertices(g, set(range(g.n)) - set(orig))
        dmin = min(sub.degree(v) for v in range(sub.n))
        attachment = tuple(
            u for u in clique if any(g.has_edge(u, w) for w in orig)
        )
        comps.append(ComponentRecord(orig, len(orig), dmin, attachment))
    comps.sort(key=lambda c: (-len(c.attachment), c.vertices[0]))

    floor = delta - k + 1
    for c in comps:
        if c.min_degree < floor:
            raise ConstructionError(
                f"component {c.vertices} has minimum degree {c.min_degree}"
                f" below the guaranteed floor {floor}",
                {"clique": clique},
            )

    k1 = len(comps[0].attachment)
    t = len(comps)
    if set(comps[0].attachment) == set(clique):
        case = Case.FULL_ATTACHMENT
    elif k1 > 1 and any(c.min_degree >= delta - k + 2 for c in comps):
        case = Case.NEW_CLIQUE_COLOR
    elif k1 > 1:
        case = Case.REUSED_CLIQUE_COLOR
    else:
        if k < 2:
            raise ConstructionError(
                "contraction case reached with a single-vertex clique",
                {"clique": clique},
            )
        case = Case.CONTRACTION
    return DecompositionRecord(tuple(clique), k, tuple(comps), k1, t, case)


def _construct(g: Graph, labels: tuple[str, ...]) -> tuple[EdgeColoring, AuditTrace]:
    delta = min(g.degree(v) for v in range(g.n))
    budget = g.n - delta

    if is_complete(g):
        colors = {e: 0 for e in g.edges}
        used = 1 if colors else 0
        trace = AuditTrace(Case.BASE, g.n, delta, budget, used, labels)
        return EdgeColoring(colors), trace

    clique = min_degree_clique(g)
    rec = decompose(g, clique)

    if rec.case is Case.CONTRACTION:
        coloring, trace = _construct_contraction(g, labels, rec, delta, budget)
    else:
        coloring, trace = _construct_components(g, labels, rec, delta, budget)

    if trace.colors_used > budget:
        raise ConstructionError(
            f"color budget exceeded: {trace.colors_used} > {budget}"
            f" on vertices {labels}",
            {"trace": trace},
        )
    return coloring, trace


def _construct_components(
    g: Graph,
    labels: tuple[str, ...],
    rec: DecompositionRecord,
    delta: int,
    budget: int,
) -> tuple[EdgeColoring, AuditTrace]:
    all_vertices = set(range(g.n))
    colors: dict[tuple[int, int], int] = {}
    children: list[AuditTrace] = []
    offset = 0
    for comp in rec.components:
        measure = comp.size - comp.min_degree
        if measure >= budget:
            raise ConstructionError(
                f"measure did not decrease: component {comp.vertices} has"
                f" n-d = {measure}, parent has {budget}",
                {"decomposition": rec},
            )
        sub, kept = delete_vertices(g, all_vertices - set(comp.vertices))
        sublabels = tuple(labels[old] for old in kept)
        subcol, subtrace = _construct(sub, sublabels)
        for (a, b), c in subcol.colors.items():
            u, v = kept[a], kept[b]
            colors[(u, v) if u < v else (v, u)] = c + offset
        offset += subtrace.colors_used
        children.append(subtrace)

    fresh_base = offset
    for idx, comp in enumerate(rec.components):
        ci = fresh_base + idx
        for u in comp.attachment:
            for w in comp.vertices:
                if g.has_edge(u, w):
                    colors[(u, w) if u < w else (w, u)] = ci

    if rec.case is Case.NEW_CLIQUE_COLOR:
        clique_color = fresh_base + rec.t
        used = fresh_base + rec.t + 1
    else:
        # full attachment and the reused-color branch both put the lead
        # cross color on the clique edges
        clique_color = fresh_base
        used = fresh_base + rec.t
    for u, v in combinations(rec.clique, 2):
        colors[(u, v) if u < v else (v, u)] = clique_color

    trace = AuditTrace(
        rec.case, g.n, delta, budget, used, labels,
        decomposition=rec, children=tuple(children),
    )
    return EdgeColoring(colors), trace


def _construct_contraction(
    g: Graph,
    labels: tuple[str, ...],
    rec: DecompositionRecord,
    delta: int,
    budget: int,
) -> tuple[EdgeColoring, AuditTrace]:
    res = contract_set(g, rec.clique)
    delta_star = min(res.graph.degree(v) for v in range(res.graph.n))
    if delta_star < delta:
        # with single-vertex attachments the outside keeps its degrees and
        # the merged vertex collects one disjoint neighborhood per clique
        # member, so the minimum degree cannot drop
        raise ConstructionError(
            f"contraction lowered the minimum degree: {delta_star} < {delta}",
            {"decomposition": rec},
        )
    measure = res.graph.n - delta_star
    if measure >= budget:
        raise ConstructionError(
            f"measure did not decrease under contraction: {measure} >= {budget}",
            {"decomposition": rec},
        )
    merged_label = "merged(" + ",".join(labels[v] for v in rec.clique) + ")"
    child_labels: list[str] = [""] * res.graph.n
    for old in range(g.n):
        nid = res.origin_map[old]
        child_labels[nid] = merged_label if nid == res.merged_vertex else labels[old]
    subcol, subtrace = _construct(res.graph, tuple(child_labels))

    qstar = subtrace.colors_used
    colors: dict[tuple[int, int], int] = {}
    for u, v in g.edge_list():
        a, b = res.origin_map[u], res.origin_map[v]
        if a == b:
            colors[(u, v)] = qstar  # inside the clique: one fresh color
        else:
            colors[(u, v)] = subcol.color_of(a, b)

    trace = AuditTrace(
        Case.CONTRACTION, g.n, delta, budget, qstar + 1, labels,
        decomposition=rec,
        children=(subtrace,),
        contraction=ContractionInfo(delta_star, measure, merged_label),
    )
    return EdgeColoring(colors), trace


def construct_coloring(g: Graph) -> tuple[EdgeColoring, AuditTrace]:
    """Color a connected graph with at most n - min_degree colors.

    Returns the coloring and the audit trace; the root trace node records
    the rainbow verifier's outcome on the finished coloring. Structural
    invariant failures raise ConstructionError.
    """
    if g.n < 1:
        raise ValueError("construction requires at least one vertex")
    if not is_connected(g):
        raise ValueError("construction requires a connected graph")
    labels = tuple(str(v) for v in range(g.n))
    coloring, trace = _construct(g, labels)
    outcome = is_rainbow_connected(g, coloring)
    trace.verification = "pass" if not isinstance(outcome, FailingPair) else outcome
    return coloring, trace


def audit_construction(g: Graph) -> Finding | None:
    """Run the construction and report a Finding on any failure, None on a
    clean pass (coloring verified rainbow connected and within budget)."""
    finding, _, _ = run_construction(g)
    return finding


def run_construction(
    g: Graph,
) -> tuple[Finding | None, EdgeColoring | None, AuditTrace | None]:
    """audit_construction plus the artifacts, for callers that need the
    coloring and trace of a passing run too."""
    g6 = to_graph6(g)
    try:
        coloring, trace = construct_coloring(g)
    except ConstructionError as exc:
        trace = exc.context.get("trace")
        return Finding("structural", g6, None, trace, str(exc)), None, None
    if isinstance(trace.verification, FailingPair):
        pair = trace.verification
        detail = f"no rainbow path between {pair.u} and {pair.v}"
        return Finding("verification-failed", g6, pair, trace, detail), coloring, trace
    if trace.colors_used > trace.budget:
        detail = f"{trace.colors_used} colors exceed the budget {trace.budget}"
        return Finding("budget-exceeded", g6, None, trace, detail), coloring, trace
    return None, coloring, trace


def iter_trace(trace: AuditTrace):
    """Depth-first (parent, child) pairs over the recursion tree."""
    for child in trace.children:
        yield trace, child
        yield from iter_trace(child)


def measure_violations(trace: AuditTrace) -> list[str]:
    """Strict-decrease violations of the n - min_degree measure, plus any
    node over its color budget. Empty on a sound trace."""
    problems = []
    for parent, child in iter_trace(trace):
        if child.budget >= parent.budget:
            problems.append(
                f"child measure {child.budget} did not decrease below"
                f" parent measure {parent.budget}"
            )
    for node in _nodes(trace):
        if node.colors_used > node.budget:
            problems.append(
                f"node with {node.n} vertices used {node.colors_used} colors,"
                f" budget {node.budget}"
            )
        if node.contraction is not None:
            if node.contraction.measure_after >= node.budget:
                problems.append(
                    f"contraction measure {node.contraction.measure_after}"
                    f" did not decrease below {node.budget}"
                )
            if node.contraction.min_degree_after < node.min_degree:
                problems.append("contraction lowered the minimum degree")
    return problems


def _nodes(trace: AuditTrace):
    yield trace
    for child in trace.children:
        yield from _nodes(child)


def trace_to_dict(trace: AuditTrace) -> dict:
    """JSON-ready nested rendering; local ids are replaced by the
    original-input labels carried on each node."""
    labels = trace.vertex_labels
    out: dict = {
        "case": trace.case.value,
        "n": trace.n,
        "min_degree": trace.min_degree,
        "budget": trace.budget,
        "colors_used": trace.colors_used,
        "vertices": list(labels),
    }
    rec = trace.decomposition
    if rec is not None:
        out["clique"] = [labels[v] for v in rec.clique]
        out["k"] = rec.k
        out["k1"] = rec.k1
        out["t"] = rec.t
        out["components"] = [
            {
                "vertices": [labels[v] for v in c.vertices],
                "size": c.size,
                "min_degree": c.min_degree,
                "attachment": [labels[v] for v in c.attachment],
            }
            for c in rec.components
        ]
    if trace.contraction is not None:
        out["contraction"] = {
            "min_degree_after": trace.contraction.min_degree_after,
            "measure_after": trace.contraction.measure_after,
            "merged": trace.contraction.merged_label,
        }
    if trace.children:
        out["children"] = [trace_to_dict(c) for c in trace.children]
    if trace.verification is not None:
        if isinstance(trace.verification, FailingPair):
            out["verification"] = {
                "failing_pair": [trace.verification.u, trace.verification.v]
            }
        else:
            out["verification"] = trace.verification
    return out
