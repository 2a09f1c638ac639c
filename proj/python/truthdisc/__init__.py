"""Truth discovery over conflicting multi-source claims.

The compiled core exposes dataset indexing, the twelve resolution
algorithms plus the majority-voting baseline, quality metrics, the
synthetic scenario generator, and the LTM/MLE dataset reformatters.
"""

from ._core import (
    Dataset,
    TruthDiscError,
    algorithms,
    compute_metrics,
    generate_scenario,
    index_dataset,
    load_claims,
    load_ground_truth,
    reformat_for_ltm,
    reformat_for_mle,
    run,
    save_claims,
)

__all__ = [
    "Dataset",
    "TruthDiscError",
    "algorithms",
    "compute_metrics",
    "generate_scenario",
    "index_dataset",
    "load_claims",
    "load_ground_truth",
    "reformat_for_ltm",
    "reformat_for_mle",
    "run",
    "save_claims",
]
