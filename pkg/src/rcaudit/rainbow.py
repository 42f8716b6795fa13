"""Rainbow-connectivity checking.

A path is rainbow when its edges carry pairwise distinct colors; a
colored graph is rainbow connected when every vertex pair has a rainbow
path. The verifier returns per-pair witness paths, or the
lexicographically first pair with none.

The search runs over (vertex, used-color-set) states expanded breadth
first, so states are visited in nondecreasing color-set size. States do
not track visited vertices: any repeated vertex on a distinct-color walk
could be cut out, giving a shorter distinct-color walk, so the first walk
reaching a target is necessarily a simple path. Color sets are Python
ints used as bit sets over a dense re-indexing of the color ids, which
handles any number of colors with one representation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Mapping

from .graphs import Graph, GraphFormatError, components

__all__ = [
    "EdgeColoring",
    "RainbowCertificate",
    "FailingPair",
    "CertificateCheck",
    "rainbow_path",
    "is_rainbow_connected",
    "verify_certificate",
    "parse_coloring",
    "coloring_to_text",
    "certificate_to_jsonl",
]


@dataclass(frozen=True)
class EdgeColoring:
    """Total map from edges to nonnegative color ids.

    The number of colors is derived: one past the largest assigned id,
    zero for an edgeless coloring.
    """

    colors: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        normalized: dict[tuple[int, int], int] = {}
        for (u, v), c in self.colors.items():
            if u == v:
                raise ValueError(f"cannot color loop at vertex {u}")
            if c < 0:
                raise ValueError(f"negative color {c} on edge ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key in normalized and normalized[key] != c:
                raise ValueError(f"conflicting colors for edge {key}")
            normalized[key] = c
        object.__setattr__(self, "colors", normalized)

    @property
    def num_colors(self) -> int:
        return 1 + max(self.colors.values()) if self.colors else 0

    def color_of(self, u: int, v: int) -> int:
        return self.colors[(u, v) if u < v else (v, u)]


@dataclass(frozen=True)
class FailingPair:
    """Vertex pair with no rainbow path; u < v."""

    u: int
    v: int


@dataclass(frozen=True)
class RainbowCertificate:
    """One witness path per unordered vertex pair, keyed by (u, v), u < v."""

    witnesses: dict[tuple[int, int], tuple[int, ...]]


@dataclass(frozen=True)
class CertificateCheck:
    """Boolean outcome plus the first violation when false."""

    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _require_total(g: Graph, coloring: EdgeColoring) -> None:
    for e in g.edges:
        if e not in coloring.colors:
            raise ValueError(f"coloring is not total: edge {e} has no color")
    for e in coloring.colors:
        if e not in g.edges:
            raise ValueError(f"coloring assigns a color to non-edge {e}")


def _color_bits(g: Graph, coloring: EdgeColoring) -> dict[tuple[int, int], int]:
    distinct = sorted(set(coloring.colors.values()))
    index = {c: i for i, c in enumerate(distinct)}
    bits: dict[tuple[int, int], int] = {}
    for (u, v), c in coloring.colors.items():
        b = 1 << index[c]
        bits[(u, v)] = b
        bits[(v, u)] = b
    return bits


def _witnesses_from(
    g: Graph,
    bits: Mapping[tuple[int, int], int],
    source: int,
    targets: set[int],
) -> dict[int, tuple[int, ...]]:
    """Earliest rainbow walk from source to each reachable target.

    BFS over (vertex, color-set) states with deterministic expansion
    (neighbors ascending); stops once every target is found.
    """
    want = set(targets)
    found: dict[int, tuple[int, ...]] = {}
    start = (source, 0)
    parent: dict[tuple[int, int], tuple[int, int] | None] = {start: None}
    queue: list[tuple[int, int]] = [start]
    head = 0
    while head < len(queue) and want:
        state = queue[head]
        head += 1
        v, mask = state
        if v in want:
            want.discard(v)
            path = []
            cur: tuple[int, int] | None = state
            while cur is not None:
                path.append(cur[0])
                cur = parent[cur]
            found[v] = tuple(reversed(path))
        for w in g.neighbors(v):
            b = bits[(v, w)]
            if mask & b:
                continue
            nxt = (w, mask | b)
            if nxt not in parent:
                parent[nxt] = state
                queue.append(nxt)
    return found


def rainbow_path(
    g: Graph, coloring: EdgeColoring, s: int, t: int
) -> tuple[int, ...] | None:
    """Shortest rainbow path from s to t, or None when none exists."""
    for x in (s, t):
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} not in graph")
    if s == t:
        raise ValueError("endpoints must differ")
    _require_total(g, coloring)
    found = _witnesses_from(g, _color_bits(g, coloring), s, {t})
    return found.get(t)


def is_rainbow_connected(
    g: Graph, coloring: EdgeColoring
) -> RainbowCertificate | FailingPair:
    """Certificate with a witness per pair, or the lexicographically first
    failing pair. Disconnected graphs immediately yield the first
    cross-component pair."""
    _require_total(g, coloring)
    if g.n <= 1:
        return RainbowCertificate({})
    part = components(g)
    if len(part.blocks) > 1:
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if part.block_index[u] != part.block_index[v]:
                    return FailingPair(u, v)
    bits = _color_bits(g, coloring)
    witnesses: dict[tuple[int, int], tuple[int, ...]] = {}
    for s in range(g.n - 1):
        found = _witnesses_from(g, bits, s, set(range(s + 1, g.n)))
        for t in range(s + 1, g.n):
            if t not in found:
                return FailingPair(s, t)
            witnesses[(s, t)] = found[t]
    return RainbowCertificate(witnesses)


def verify_certificate(
    g: Graph, coloring: EdgeColoring, cert: RainbowCertificate
) -> CertificateCheck:
    """Check a certificate independently of how it was produced: full pair
    coverage, each witness a simple path in g, and no repeated color."""
    expected = {(u, v) for u in range(g.n) for v in range(u + 1, g.n)}
    keys = set(cert.witnesses)
    if keys != expected:
        missing = sorted(expected - keys)
        if missing:
            return CertificateCheck(False, f"pair {missing[0]} has no witness")
        extra = sorted(keys - expected)
        return CertificateCheck(False, f"unexpected witness for pair {extra[0]}")
    for u, v in sorted(expected):
        path = cert.witnesses[(u, v)]
        if len(path) < 2 or path[0] != u or path[-1] != v:
            return CertificateCheck(
                False, f"pair ({u}, {v}): witness endpoints do not match"
            )
        if len(set(path)) != len(path):
            return CertificateCheck(
                False, f"pair ({u}, {v}): witness repeats a vertex"
            )
        seen_colors: set[int] = set()
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                return CertificateCheck(
                    False, f"pair ({u}, {v}): ({a}, {b}) is not an edge"
                )
            try:
                c = coloring.color_of(a, b)
            except KeyError:
                return CertificateCheck(
                    False, f"pair ({u}, {v}): edge ({a}, {b}) has no color"
                )
            if c in seen_colors:
                return CertificateCheck(
                    False, f"pair ({u}, {v}): color {c} repeats on witness"
                )
            seen_colors.add(c)
    return CertificateCheck(True)


def parse_coloring(text: str, g: Graph) -> EdgeColoring:
    """Parse the "u v color" line format against a host graph. Unknown
    edges and duplicate assignments are errors; totality is checked by the
    verifier, not here."""
    colors: dict[tuple[int, int], int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 3:
            raise GraphFormatError(
                f"coloring: line {lineno}: expected 'u v color', got {stripped!r}"
            )
        try:
            u, v, c = (int(p) for p in parts)
        except ValueError:
            raise GraphFormatError(
                f"coloring: line {lineno}: expected integers, got {stripped!r}"
            ) from None
        if not g.has_edge(u, v):
            raise GraphFormatError(
                f"coloring: line {lineno}: ({u}, {v}) is not an edge"
            )
        if c < 0:
            raise GraphFormatError(f"coloring: line {lineno}: negative color {c}")
        key = (u, v) if u < v else (v, u)
        if key in colors:
            raise GraphFormatError(
                f"coloring: line {lineno}: duplicate assignment for edge {u} {v}"
            )
        colors[key] = c
    return EdgeColoring(colors)


def coloring_to_text(coloring: EdgeColoring) -> str:
    lines = [f"{u} {v} {c}" for (u, v), c in sorted(coloring.colors.items())]
    return "\n".join(lines) + ("\n" if lines else "")


def _witness_records(
    cert: RainbowCertificate, coloring: EdgeColoring
) -> Iterator[dict]:
    for (u, v), path in sorted(cert.witnesses.items()):
        colors = [coloring.color_of(a, b) for a, b in zip(path, path[1:])]
        yield {"pair": [u, v], "path": list(path), "colors": colors}


def certificate_to_jsonl(cert: RainbowCertificate, coloring: EdgeColoring) -> str:
    """One JSON witness record per line, pairs in lexicographic order."""
    lines = [
        json.dumps(rec, sort_keys=True, separators=(",", ":"))
        for rec in _witness_records(cert, coloring)
    ]
    return "\n".join(lines) + ("\n" if lines else "")
