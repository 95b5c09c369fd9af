"""Graph parameters coarsely tied to tree-length: oracles, bounds, ledger."""

from .graph import (
    EdgeListError,
    Graph,
    all_pairs_distances,
    components_after_removal,
    disk,
    eccentricity,
    is_chordal,
    parse_graph,
)
from .generate import FAMILIES, GeneratorSpec, SplitMix64, generate, generate_family
from .layering import (
    CanonicalTree,
    LayeringMetrics,
    LayeringPartition,
    LayeringTree,
    canonical_tree,
    cluster_metrics,
    cluster_metrics_all,
    layering_partition,
    layering_tree,
    tree_additive_deviation,
)
from .treedec import (
    DecompositionMetrics,
    OracleResult,
    TreeDecomposition,
    Violation,
    decomposition_from_ordering,
    decomposition_metrics,
    elimination_bag,
    expanded_cluster_decomposition,
    tl_tb_oracle,
    validate_decomposition,
)
from .params import *  # noqa: F401,F403 - re-export the parameter toolkit
from .report import (
    LEDGER_ROWS,
    CorpusResult,
    LedgerResult,
    ParameterReport,
    ParamEntry,
    ReportOptions,
    compute_report,
    expand_corpus_spec,
    report_to_json,
    run_corpus,
    verify_ledger,
)

__version__ = "0.1.0"
