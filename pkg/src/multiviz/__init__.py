"""Multiplex network analysis, local simplification and vector sociograms."""

from .model import (
    MultiplexNetwork,
    SimpleGraph,
    LayerStats,
    MultinetParseError,
    parse_multinet,
    write_multinet,
    flatten,
    neighbors,
    layer_stats,
)
from .metrics import (
    METRIC_KINDS,
    MetricTable,
    JaccardMatrix,
    degree,
    neighborhood,
    relevance,
    xrelevance,
    jaccard,
    jaccard_matrix,
    metric_table,
    metric_value,
    transitivity,
    degree_distribution,
)
from .simplify import (
    MERGE_KINDS,
    MergeSpec,
    SweepResult,
    local_merge,
    node_pass_counts,
    null_sample,
    sweep,
)
from .generate import GeneratorSpec, generate, matched_uniform_probability
from .layout import LayoutParams, force_layout, slice_layouts

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
