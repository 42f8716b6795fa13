"""Per-graph bound reports and corpus sweeps.

A report collects the graph's degree statistics, the constructive
coloring (with verification outcome), the exact rainbow connection
number (or a budgeted lower bound), and the slack of two upper bounds:
n - min_degree, which is proven and asserted nonnegative whenever the
solver is exact, and n - min_degree_sum/2, whose truth is an open
question: its slack is reported in exact rational arithmetic and a
negative value surfaces as a finding, never as a crash.

Sweeps aggregate reports deterministically (findings sorted by graph6)
and record per-graph errors without aborting the corpus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .construct import Finding, decompose, min_degree_clique, run_construction, trace_to_dict
from .exact import Budget, ExactStatus, rc_exact
from .graphs import Graph, degree_stats, is_connected, to_graph6

__all__ = [
    "AuditOptions",
    "BoundReport",
    "CorpusFinding",
    "AggregateStats",
    "CorpusResult",
    "audit_graph",
    "audit_corpus",
    "check_report",
    "findings_for_report",
]


@dataclass(frozen=True)
class AuditOptions:
    budget: Budget = Budget()
    prune: bool = True


@dataclass(frozen=True)
class CorpusFinding:
    """Anomaly with a replayable reproducer (the graph6 string)."""

    kind: str  # construction-failure | negative-degree-sum-slack | solver-disagreement
    graph6: str
    detail: dict


@dataclass
class BoundReport:
    graph6: str
    n: int
    m: int
    min_degree: int
    min_degree_sum: int | None
    rc_status: str
    rc_value: int
    rc_nodes: int
    rc_seconds: float
    construct_colors: int | None
    construct_verified: bool
    construction_failure: dict | None
    min_degree_bound: int
    min_degree_slack: int | None
    degree_sum_bound: Fraction | None
    degree_sum_slack: Fraction | None
    top_components: int | None
    weakened_degree_sum_bound: Fraction | None

    def to_dict(self) -> dict:
        """JSON-ready rendering. Rationals become exact 'p/q' strings and
        wall-clock time is omitted so identical runs serialize
        identically."""
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "min_degree": self.min_degree,
            "min_degree_sum": self.min_degree_sum,
            "rc_status": self.rc_status,
            "rc_value": self.rc_value,
            "rc_nodes": self.rc_nodes,
            "construct_colors": self.construct_colors,
            "construct_verified": self.construct_verified,
            "construction_failure": self.construction_failure,
            "min_degree_bound": self.min_degree_bound,
            "min_degree_slack": self.min_degree_slack,
            "degree_sum_bound": _frac(self.degree_sum_bound),
            "degree_sum_slack": _frac(self.degree_sum_slack),
            "top_components": self.top_components,
            "weakened_degree_sum_bound": _frac(self.weakened_degree_sum_bound),
        }


@dataclass(frozen=True)
class AggregateStats:
    total: int
    complete_graphs: int
    exact: int
    not_exact: int
    construction_failures: int
    errors: int
    min_min_degree_slack: int | None
    mean_min_degree_slack: Fraction | None
    min_degree_sum_slack: Fraction | None
    mean_degree_sum_slack: Fraction | None
    degree_sum_slack_count: int

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "complete_graphs": self.complete_graphs,
            "exact": self.exact,
            "not_exact": self.not_exact,
            "construction_failures": self.construction_failures,
            "errors": self.errors,
            "min_min_degree_slack": self.min_min_degree_slack,
            "mean_min_degree_slack": _frac(self.mean_min_degree_slack),
            "min_degree_sum_slack": _frac(self.min_degree_sum_slack),
            "mean_degree_sum_slack": _frac(self.mean_degree_sum_slack),
            "degree_sum_slack_count": self.degree_sum_slack_count,
        }


@dataclass(frozen=True)
class CorpusResult:
    aggregate: AggregateStats
    findings: tuple[CorpusFinding, ...]
    reports: tuple[BoundReport, ...]
    errors: tuple[tuple[str, str], ...]  # (label, message)


def _frac(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _finding_dict(finding: Finding) -> dict:
    out = {"kind": finding.kind, "detail": finding.detail}
    if finding.failing_pair is not None:
        out["failing_pair"] = [finding.failing_pair.u, finding.failing_pair.v]
    if finding.trace is not None:
        out["trace"] = trace_to_dict(finding.trace)
    return out


def audit_graph(
    g: Graph, opts: AuditOptions | None = None, strict: bool = True
) -> BoundReport:
    """Full bound report for one connected graph.

    With strict=True the proven-bound invariants are asserted (a negative
    min-degree slack with an exact solve is a solver bug, not a result);
    corpus sweeps use strict=False and turn violations into findings.
    """
    if not is_connected(g):
        raise ValueError("audit requires a connected graph")
    opts = opts or AuditOptions()
    stats = degree_stats(g)
    finding, _, trace = run_construction(g)
    rc = rc_exact(g, opts.budget, opts.prune)

    bound1 = g.n - stats.min_degree
    exact = rc.status is ExactStatus.EXACT
    slack1 = bound1 - rc.value if exact else None
    if stats.min_degree_sum is None:
        ds_bound = ds_slack = weakened = None
        t_top = None
    else:
        ds_bound = Fraction(g.n) - Fraction(stats.min_degree_sum, 2)
        ds_slack = ds_bound - rc.value if exact else None
        t_top = decompose(g, min_degree_clique(g)).t
        weakened = ds_bound + t_top

    report = BoundReport(
        graph6=to_graph6(g),
        n=g.n,
        m=g.m,
        min_degree=stats.min_degree,
        min_degree_sum=stats.min_degree_sum,
        rc_status=rc.status.value,
        rc_value=rc.value,
        rc_nodes=rc.stats.nodes,
        rc_seconds=rc.stats.seconds,
        construct_colors=trace.colors_used if trace is not None else None,
        construct_verified=finding is None,
        construction_failure=_finding_dict(finding) if finding is not None else None,
        min_degree_bound=bound1,
        min_degree_slack=slack1,
        degree_sum_bound=ds_bound,
        degree_sum_slack=ds_slack,
        top_components=t_top,
        weakened_degree_sum_bound=weakened,
    )
    if strict:
        violations = check_report(report)
        if violations:
            raise AssertionError("; ".join(violations))
    return report


def check_report(report: BoundReport) -> list[str]:
    """Violations of the proven invariants: the verified construction must
    fit under n - min_degree, and an exact rc can neither exceed that
    bound nor a verified coloring's color count."""
    problems = []
    if report.construct_verified and report.construct_colors is not None:
        if report.construct_colors > report.min_degree_bound:
            problems.append(
                f"verified construction used {report.construct_colors} colors,"
                f" above the bound {report.min_degree_bound}"
            )
    if report.min_degree_slack is not None and report.min_degree_slack < 0:
        problems.append(
            f"exact rc {report.rc_value} exceeds the proven bound"
            f" {report.min_degree_bound}"
        )
    if (
        report.rc_status == ExactStatus.EXACT.value
        and report.construct_verified
        and report.construct_colors is not None
        and report.construct_colors < report.rc_value
    ):
        problems.append(
            f"verified coloring with {report.construct_colors} colors"
            f" undercuts the claimed optimum {report.rc_value}"
        )
    return problems


def findings_for_report(report: BoundReport) -> list[CorpusFinding]:
    out = []
    if not report.construct_verified:
        out.append(
            CorpusFinding(
                "construction-failure",
                report.graph6,
                report.construction_failure or {},
            )
        )
    for violation in check_report(report):
        out.append(
            CorpusFinding("solver-disagreement", report.graph6, {"detail": violation})
        )
    if report.degree_sum_slack is not None and report.degree_sum_slack < 0:
        out.append(
            CorpusFinding(
                "negative-degree-sum-slack",
                report.graph6,
                {
                    "degree_sum_bound": _frac(report.degree_sum_bound),
                    "rc_value": report.rc_value,
                    "degree_sum_slack": _frac(report.degree_sum_slack),
                },
            )
        )
    return out


def audit_corpus(
    graphs: Iterable[Graph], opts: AuditOptions | None = None
) -> CorpusResult:
    """Audit every graph, aggregate, and collect findings.

    Per-graph exceptions are recorded, not fatal. The aggregate and the
    sorted findings are independent of processing order.
    """
    opts = opts or AuditOptions()
    reports: list[BoundReport] = []
    findings: list[CorpusFinding] = []
    errors: list[tuple[str, str]] = []
    for idx, g in enumerate(graphs):
        try:
            label = to_graph6(g)
        except Exception:
            label = f"entry-{idx}"
        try:
            report = audit_graph(g, opts, strict=False)
        except Exception as exc:
            errors.append((label, str(exc)))
            continue
        reports.append(report)
        findings.extend(findings_for_report(report))

    slack1 = [r.min_degree_slack for r in reports if r.min_degree_slack is not None]
    slack2 = [r.degree_sum_slack for r in reports if r.degree_sum_slack is not None]
    exact = sum(1 for r in reports if r.rc_status == ExactStatus.EXACT.value)
    aggregate = AggregateStats(
        total=len(reports),
        complete_graphs=sum(1 for r in reports if r.min_degree_sum is None),
        exact=exact,
        not_exact=len(reports) - exact,
        construction_failures=sum(1 for r in reports if not r.construct_verified),
        errors=len(errors),
        min_min_degree_slack=min(slack1) if slack1 else None,
        mean_min_degree_slack=(
            Fraction(sum(slack1), len(slack1)) if slack1 else None
        ),
        min_degree_sum_slack=min(slack2) if slack2 else None,
        mean_degree_sum_slack=(sum(slack2) / len(slack2)) if slack2 else None,
        degree_sum_slack_count=len(slack2),
    )
    findings.sort(key=lambda f: (f.graph6, f.kind))
    return CorpusResult(aggregate, tuple(findings), tuple(reports), tuple(errors))
