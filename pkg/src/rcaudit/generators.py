"""Graph generators: the attachment counterexample family, named
families, random connected graphs, and exhaustive small corpora.

The counterexample family separates two degree-sum quantities. Take t
disjoint cliques on d+4 vertices each, hang two nonadjacent attachment
vertices off every clique (each joined to 2t clique vertices), and join
every attachment vertex to one shared low-degree clique on d-2t+1
vertices. Minimum degree lands on the shared clique (degree d),
attachments get d+1, and the whole graph's minimum nonadjacent degree
sum is 2(d+1), achieved by attachment pairs. Removing the shared clique
leaves one component per copy whose own minimum degree sum is 4t: that
is strictly below 2(d+1) - 2(k-1) = 4t+2 (refuting the claim that
component degree sums stay within 2(k-1) of the whole graph's) while
exactly meeting the corrected floor 2(d+1) - 2k = 4t.

Every structural fact is recounted on the generated graph, never assumed
from the formulas.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .graphs import (
    Graph,
    components,
    degree_stats,
    delete_vertices,
    is_connected,
)

__all__ = [
    "CounterexampleParams",
    "FamilyFacts",
    "InequalityReport",
    "gen_counterexample",
    "counterexample_inequalities",
    "gen_named",
    "gen_random_connected",
    "iter_connected_graphs",
    "random_corpus",
]


@dataclass(frozen=True)
class CounterexampleParams:
    """Family parameters: target minimum degree and copy count.

    Needs 2*copies <= min_degree so the shared clique is nonempty and the
    attachment degree stays below the block degrees. seed switches the
    attachment choice from first-by-id to uniformly random.
    """

    min_degree: int
    copies: int
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.min_degree < 2:
            raise ValueError("min_degree must be at least 2")
        if self.copies < 1:
            raise ValueError("copies must be at least 1")
        if 2 * self.copies > self.min_degree:
            raise ValueError(
                f"copies must satisfy 2*copies <= min_degree"
                f" (got copies={self.copies}, min_degree={self.min_degree})"
            )


@dataclass(frozen=True)
class FamilyFacts:
    """Recounted facts of a generated family instance. roles[v] is
    'block:i', 'attach:i:j' (j in 1..2), or 'clique'."""

    n: int
    clique_size: int
    min_degree_sum: int
    component_pair_degree_sum: int
    roles: tuple[str, ...]


@dataclass(frozen=True)
class InequalityReport:
    """Degree-sum comparison after removing the shared clique.

    component_sums holds each component's minimum nonadjacent degree sum
    s_i. The refuted claim asserts s_i >= min_degree_sum - 2(k-1); the
    corrected one asserts s_i >= min_degree_sum - 2k.
    """

    min_degree_sum: int
    clique_size: int
    refuted_bound: int
    corrected_bound: int
    component_sums: tuple[int, ...]
    refuted_claim_violated: bool
    corrected_claim_holds: bool
    corrected_claim_tight: bool


def gen_counterexample(params: CounterexampleParams) -> tuple[Graph, FamilyFacts]:
    d, t = params.min_degree, params.copies
    block = d + 4
    k = d - 2 * t + 1
    attach_base = t * block
    clique_base = attach_base + 2 * t
    n = clique_base + k

    rng = random.Random(params.seed) if params.seed is not None else None
    edges: list[tuple[int, int]] = []
    roles: list[str] = [""] * n

    for i in range(t):
        start = i * block
        for u, v in combinations(range(start, start + block), 2):
            edges.append((u, v))
        for v in range(start, start + block):
            roles[v] = f"block:{i + 1}"
        for j in (0, 1):
            a = attach_base + 2 * i + j
            roles[a] = f"attach:{i + 1}:{j + 1}"
            if rng is None:
                targets = range(start, start + 2 * t)
            else:
                targets = rng.sample(range(start, start + block), 2 * t)
            edges.extend((a, w) for w in targets)
            edges.extend((a, c) for c in range(clique_base, clique_base + k))
    for u, v in combinations(range(clique_base, clique_base + k), 2):
        edges.append((u, v))
    for v in range(clique_base, clique_base + k):
        roles[v] = "clique"

    g = Graph(n, edges)

    # recount everything the formulas predict
    if not is_connected(g):
        raise RuntimeError("generated family instance is disconnected")
    for v in range(n):
        deg = g.degree(v)
        if roles[v] == "clique" and deg != d:
            raise RuntimeError(f"clique vertex {v} has degree {deg}, expected {d}")
        if roles[v].startswith("attach") and deg != d + 1:
            raise RuntimeError(f"attachment {v} has degree {deg}, expected {d + 1}")
        if roles[v].startswith("block") and deg < d + 3:
            raise RuntimeError(f"block vertex {v} has degree {deg} < {d + 3}")
    stats = degree_stats(g)
    if stats.min_degree != d:
        raise RuntimeError(f"minimum degree {stats.min_degree}, expected {d}")
    if stats.min_degree_sum != 2 * (d + 1):
        raise RuntimeError(
            f"minimum degree sum {stats.min_degree_sum}, expected {2 * (d + 1)}"
        )

    facts = FamilyFacts(
        n=n,
        clique_size=k,
        min_degree_sum=2 * (d + 1),
        component_pair_degree_sum=4 * t,
        roles=tuple(roles),
    )
    return g, facts


def counterexample_inequalities(
    g: Graph, params: CounterexampleParams, facts: FamilyFacts
) -> InequalityReport:
    """Remove the shared clique, recompute each component's minimum
    nonadjacent degree sum, and compare against both claims."""
    clique_vertices = [v for v, r in enumerate(facts.roles) if r == "clique"]
    if len(clique_vertices) != facts.clique_size:
        raise ValueError("facts do not match the graph: clique size differs")
    rest, kept = delete_vertices(g, clique_vertices)
    part = components(rest)
    if len(part.blocks) != params.copies:
        raise ValueError(
            f"structure mismatch: expected {params.copies} components after"
            f" clique removal, found {len(part.blocks)}"
        )
    sums = []
    for blk in part.blocks:
        orig = {kept[v] for v in blk}
        expect_size = params.min_degree + 4 + 2
        if len(orig) != expect_size:
            raise ValueError(
                f"structure mismatch: component of size {len(orig)},"
                f" expected {expect_size}"
            )
        sub, _ = delete_vertices(rest, set(range(rest.n)) - set(blk))
        stats = degree_stats(sub)
        if stats.min_degree_sum is None:
            raise ValueError("structure mismatch: component is complete")
        sums.append(stats.min_degree_sum)

    sigma = degree_stats(g).min_degree_sum
    if sigma != facts.min_degree_sum:
        raise ValueError("facts do not match the graph: degree sum differs")
    k = facts.clique_size
    refuted = sigma - 2 * (k - 1)
    corrected = sigma - 2 * k
    return InequalityReport(
        min_degree_sum=sigma,
        clique_size=k,
        refuted_bound=refuted,
        corrected_bound=corrected,
        component_sums=tuple(sums),
        refuted_claim_violated=any(s < refuted for s in sums),
        corrected_claim_holds=all(s >= corrected for s in sums),
        corrected_claim_tight=all(s == corrected for s in sums),
    )


def gen_named(family: str, *sizes: int) -> Graph:
    """Standard families in canonical layout: path, cycle, complete,
    complete_bipartite (two sizes), star (total vertex count, center 0)."""
    if family == "path":
        (n,) = _expect_sizes(family, sizes, 1)
        if n < 1:
            raise ValueError("path needs at least 1 vertex")
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        (n,) = _expect_sizes(family, sizes, 1)
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        (n,) = _expect_sizes(family, sizes, 1)
        if n < 1:
            raise ValueError("complete graph needs at least 1 vertex")
        return Graph(n, combinations(range(n), 2))
    if family == "complete_bipartite":
        a, b = _expect_sizes(family, sizes, 2)
        if a < 1 or b < 1:
            raise ValueError("complete_bipartite needs two positive sizes")
        return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])
    if family == "star":
        (n,) = _expect_sizes(family, sizes, 1)
        if n < 1:
            raise ValueError("star needs at least 1 vertex")
        return Graph(n, [(0, v) for v in range(1, n)])
    raise ValueError(f"unknown family {family!r}")


def _expect_sizes(family: str, sizes: Sequence[int], want: int) -> Sequence[int]:
    if len(sizes) != want:
        raise ValueError(f"{family} takes {want} size argument(s), got {len(sizes)}")
    return sizes


def gen_random_connected(n: int, p: float, seed: int | None = None) -> Graph:
    """Rejection-sampled connected graph: resample the p-biased edge set
    until connected (up to 1000 tries), deterministic given the seed."""
    if n < 1:
        raise ValueError("need at least 1 vertex")
    if not 0 < p <= 1:
        raise ValueError("edge probability must be in (0, 1]")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(1000):
        edges = [e for e in pairs if rng.random() < p]
        g = Graph(n, edges)
        if is_connected(g):
            return g
    raise RuntimeError(
        "1000 consecutive samples were disconnected; increase the edge probability"
    )


def iter_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on exactly n vertices, in ascending
    edge-mask order over the lexicographic pair list."""
    if n < 1:
        raise ValueError("need at least 1 vertex")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[j] for j in range(len(pairs)) if mask >> j & 1]
        g = Graph(n, edges)
        if is_connected(g):
            yield g


def random_corpus(
    count: int, n_lo: int, n_hi: int, seed: int
) -> list[Graph]:
    """Seeded corpus of connected graphs with sizes drawn from
    [n_lo, n_hi] and edge probability from [0.15, 0.85]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        p = rng.uniform(0.15, 0.85)
        out.append(gen_random_connected(n, p, seed=rng.randrange(2**32)))
    return out
