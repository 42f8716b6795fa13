"""Rainbow-connection toolkit.

Colorings within the n - min_degree bound built by a recursive clique
decomposition, an exact solver with canonical-search symmetry breaking,
a rainbow-connectivity verifier with per-pair witnesses, the attachment
counterexample family for the degree-sum recursion claim, and bound
audits over graph corpora.
"""

from .audit import (
    AggregateStats,
    AuditOptions,
    BoundReport,
    CorpusFinding,
    CorpusResult,
    audit_corpus,
    audit_graph,
)
from .construct import (
    AuditTrace,
    Case,
    ConstructionError,
    Finding,
    audit_construction,
    construct_coloring,
    decompose,
    min_degree_clique,
    run_construction,
    trace_to_dict,
)
from .exact import (
    Budget,
    DecisionResult,
    DecisionStatus,
    ExactResult,
    ExactStatus,
    rc_decision,
    rc_exact,
    rc_lower_bound,
)
from .generators import (
    CounterexampleParams,
    FamilyFacts,
    InequalityReport,
    counterexample_inequalities,
    gen_counterexample,
    gen_named,
    gen_random_connected,
    iter_connected_graphs,
    random_corpus,
)
from .graphs import (
    ComponentPartition,
    ContractionResult,
    DegreeStats,
    Graph,
    GraphFormatError,
    components,
    contract_set,
    degree_stats,
    delete_vertices,
    diameter,
    is_complete,
    is_connected,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .rainbow import (
    CertificateCheck,
    EdgeColoring,
    FailingPair,
    RainbowCertificate,
    certificate_to_jsonl,
    coloring_to_text,
    is_rainbow_connected,
    parse_coloring,
    rainbow_path,
    verify_certificate,
)

__version__ = "0.1.0"
