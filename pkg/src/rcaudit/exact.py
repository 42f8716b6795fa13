"""Exact rainbow connection number by iterative deepening.

For q = lower bound, lower bound + 1, ... search canonical colorings with
at most q colors for one that rainbow-connects the graph. Canonical means
restricted growth over the lexicographic edge order: edge i may use a
color at most one above the largest color on earlier edges, which removes
color relabelings without losing any coloring up to renaming. The
exhausted search at q - 1 doubles as the optimality certificate for a hit
at q.

Node and wall-time budgets cap each call so corpus sweeps never hang; a
budgeted give-up is reported as such, never as unsatisfiability.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

from .graphs import Graph, diameter, is_connected
from .rainbow import EdgeColoring, RainbowCertificate, is_rainbow_connected

__all__ = [
    "Budget",
    "SearchStats",
    "DecisionStatus",
    "DecisionResult",
    "ExactStatus",
    "ExactResult",
    "rc_lower_bound",
    "rc_decision",
    "rc_exact",
]


@dataclass(frozen=True)
class Budget:
    """Caps on a single search; None means unlimited."""

    max_nodes: int | None = None
    max_seconds: float | None = None


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    seconds: float


class DecisionStatus(Enum):
    SAT = "sat"
    UNSAT = "unsat"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class DecisionResult:
    status: DecisionStatus
    coloring: EdgeColoring | None
    nodes: int


class ExactStatus(Enum):
    EXACT = "exact"
    # budget ran out after at least one color count was fully refuted; the
    # reported value (last refuted count + 1) is a proven lower bound
    LOWER_BOUND_ONLY = "lower-bound-only"
    # budget ran out before refuting anything beyond the starting bound
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class ExactResult:
    status: ExactStatus
    value: int
    witness: EdgeColoring | None
    stats: SearchStats

    @property
    def exact(self) -> bool:
        return self.status is ExactStatus.EXACT


def rc_lower_bound(g: Graph) -> int:
    """max(diameter, 1): every rainbow path between a diametral pair needs
    at least diameter distinct colors. Non-complete graphs have diameter
    at least 2, so this already exceeds 1 exactly when it should."""
    if not is_connected(g):
        raise ValueError("lower bound requires a connected graph")
    return max(diameter(g), 1)


def _all_pairs_distances(g: Graph) -> list[list[int]]:
    dist = []
    for s in range(g.n):
        d = [-1] * g.n
        d[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in g.neighbors(v):
                if d[w] < 0:
                    d[w] = d[v] + 1
                    queue.append(w)
        dist.append(d)
    return dist


def _shortest_paths_as_edges(
    g: Graph,
    dist_from: list[list[int]],
    u: int,
    v: int,
    edge_index: dict[tuple[int, int], int],
    cap: int,
) -> list[tuple[int, ...]] | None:
    """All shortest u-v paths as tuples of edge indices; None when more
    than cap paths exist (the caller then skips tracking that pair)."""
    du = dist_from[u]
    target = du[v]
    out: list[tuple[int, ...]] = []
    stack: list[tuple[int, list[int]]] = [(v, [])]
    while stack:
        x, acc = stack.pop()
        if x == u:
            out.append(tuple(reversed(acc)))
            if len(out) > cap:
                return None
            continue
        for w in g.neighbors(x):
            if du[w] == du[x] - 1:
                e = edge_index[(w, x) if w < x else (x, w)]
                stack.append((w, acc + [e]))
    return out


class _PruneTables:
    """Fail-fast bookkeeping for pairs at distance exactly q.

    A pair at distance q can only be rainbow-connected along one of its
    length-q shortest paths; once every such path contains two assigned
    edges of equal color, no completion of the partial coloring can
    succeed. Tracking is capped per pair and in total; skipped pairs just
    weaken the prune, never its soundness.
    """

    PER_PAIR_CAP = 512
    TOTAL_CAP = 8192

    def __init__(self, g: Graph, q: int, edges: list[tuple[int, int]]):
        edge_index = {e: i for i, e in enumerate(edges)}
        dist = _all_pairs_distances(g)
        self.path_edges: list[tuple[int, ...]] = []
        self.path_pair: list[int] = []
        self.edge_paths: list[list[int]] = [[] for _ in edges]
        self.alive: list[int] = []
        self.dead_at: list[int] = []
        total = 0
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if dist[u][v] != q:
                    continue
                paths = _shortest_paths_as_edges(
                    g, dist, u, v, edge_index, self.PER_PAIR_CAP
                )
                if paths is None or total + len(paths) > self.TOTAL_CAP:
                    continue
                pair_id = len(self.alive)
                self.alive.append(len(paths))
                for p in paths:
                    pid = len(self.path_edges)
                    self.path_edges.append(p)
                    self.path_pair.append(pair_id)
                    self.dead_at.append(-1)
                    for e in p:
                        self.edge_paths[e].append(pid)
                total += len(paths)


def rc_decision(
    g: Graph,
    q: int,
    budget: Budget | None = None,
    prune: bool = True,
) -> DecisionResult:
    """Find a rainbow-connecting coloring with at most q colors, or prove
    none exists. Unsatisfiability is reported only after the canonical
    space is exhausted (pruned subtrees are provably solution-free)."""
    if q < 1:
        raise ValueError("color count must be at least 1")
    if not is_connected(g):
        raise ValueError("decision search requires a connected graph")
    edges = g.edge_list()
    m = len(edges)
    if m == 0:
        return DecisionResult(DecisionStatus.SAT, EdgeColoring({}), 0)

    budget = budget or Budget()
    deadline = (
        time.monotonic() + budget.max_seconds
        if budget.max_seconds is not None
        else None
    )

    tables: _PruneTables | None = None
    if prune:
        dist = _all_pairs_distances(g)
        if max(max(row) for row in dist) > q:
            # some pair is farther apart than q; no q-coloring can give it
            # a rainbow path, so the whole space is solution-free
            return DecisionResult(DecisionStatus.UNSAT, None, 0)
        tables = _PruneTables(g, q, edges)

    assignment = [-1] * m
    next_color = [0] * m
    max_plus = [0] * (m + 1)  # colors allowed at depth i: 0..min(max_plus[i], q-1)
    killed: list[list[int]] = [[] for _ in range(m)]
    nodes = 0
    i = 0

    def unassign(depth: int) -> None:
        if tables is not None:
            for pid in killed[depth]:
                tables.dead_at[pid] = -1
                tables.alive[tables.path_pair[pid]] += 1
            killed[depth].clear()
        assignment[depth] = -1

    while True:
        if i == m:
            coloring = EdgeColoring(dict(zip(edges, assignment)))
            if isinstance(is_rainbow_connected(g, coloring), RainbowCertificate):
                return DecisionResult(DecisionStatus.SAT, coloring, nodes)
            i -= 1
            unassign(i)
            continue
        c = next_color[i]
        if c > min(max_plus[i], q - 1):
            next_color[i] = 0
            if i == 0:
                return DecisionResult(DecisionStatus.UNSAT, None, nodes)
            i -= 1
            unassign(i)
            continue
        next_color[i] = c + 1
        nodes += 1
        if budget.max_nodes is not None and nodes > budget.max_nodes:
            return DecisionResult(DecisionStatus.BUDGET_EXHAUSTED, None, nodes)
        if (
            deadline is not None
            and nodes & 1023 == 1  # clock checked on the first node, then sparsely
            and time.monotonic() > deadline
        ):
            return DecisionResult(DecisionStatus.BUDGET_EXHAUSTED, None, nodes)

        assignment[i] = c
        dead_pair = False
        if tables is not None:
            for pid in tables.edge_paths[i]:
                if tables.dead_at[pid] >= 0:
                    continue
                for e in tables.path_edges[pid]:
                    if e != i and assignment[e] == c:
                        tables.dead_at[pid] = i
                        killed[i].append(pid)
                        pair = tables.path_pair[pid]
                        tables.alive[pair] -= 1
                        if tables.alive[pair] == 0:
                            dead_pair = True
                        break
        if dead_pair:
            unassign(i)
            continue
        max_plus[i + 1] = max(max_plus[i], c + 1)
        i += 1


def _remaining(budget: Budget, used_nodes: int, started: float) -> Budget | None:
    """Budget left for the next deepening level; None when spent."""
    max_nodes = None
    if budget.max_nodes is not None:
        max_nodes = budget.max_nodes - used_nodes
        if max_nodes <= 0:
            return None
    max_seconds = None
    if budget.max_seconds is not None:
        max_seconds = budget.max_seconds - (time.monotonic() - started)
        if max_seconds <= 0:
            return None
    return Budget(max_nodes, max_seconds)


def rc_exact(
    g: Graph, budget: Budget | None = None, prune: bool = True
) -> ExactResult:
    """Rainbow connection number with an optimal witness coloring.

    Exact status means a passing witness at the value plus a fully
    exhausted search one color below (or the value equals the lower
    bound). Budget exhaustion yields a lower bound instead.
    """
    if not is_connected(g):
        raise ValueError("rc is defined for connected graphs only")
    started = time.monotonic()
    budget = budget or Budget()
    if g.m == 0:
        # single vertex: the empty coloring is vacuously rainbow connected
        return ExactResult(
            ExactStatus.EXACT,
            0,
            EdgeColoring({}),
            SearchStats(0, time.monotonic() - started),
        )
    lb = rc_lower_bound(g)
    total_nodes = 0
    last_refuted: int | None = None
    q = lb
    while True:
        level_budget = _remaining(budget, total_nodes, started)
        if level_budget is None:
            break
        res = rc_decision(g, q, level_budget, prune)
        total_nodes += res.nodes
        if res.status is DecisionStatus.SAT:
            return ExactResult(
                ExactStatus.EXACT,
                q,
                res.coloring,
                SearchStats(total_nodes, time.monotonic() - started),
            )
        if res.status is DecisionStatus.UNSAT:
            last_refuted = q
            q += 1
            # a connected graph always admits the all-distinct coloring
            assert q <= g.m, "deepening ran past the trivial upper bound"
            continue
        break

    stats = SearchStats(total_nodes, time.monotonic() - started)
    if last_refuted is not None:
        return ExactResult(ExactStatus.LOWER_BOUND_ONLY, last_refuted + 1, None, stats)
    return ExactResult(ExactStatus.BUDGET_EXHAUSTED, lb, None, stats)
