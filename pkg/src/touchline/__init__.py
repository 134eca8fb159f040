"""Decision support for football tactics.

Team state and tactical strategy templates live in one shared 14-attribute
space; recommendations come from ranking templates by a context-adapted
weighted distance, with per-attribute diagnostics explaining each choice.
"""

from .attributes import (
    ALL_ATTRIBUTES,
    AttributeCategory,
    AttributeId,
    AttributeVector,
    MatchState,
    ParamSet,
    PartialAttributeVector,
    from_categorical,
    make_vector,
    project,
)
from .context_tree import (
    AggregationNode,
    ContextTree,
    LeafMetric,
    aggregate_node,
    apply_fatigue_discount,
    evaluate_tree,
    normalize_leaf,
)
from .distance import (
    CombineMode,
    ContextMultipliers,
    GapEstimate,
    WeightVector,
    adapted_distance,
    combine,
    compute_multipliers,
    euclidean,
    normalize_weights,
    prototype_multiplier,
)
from .library import (
    StrategyCategory,
    StrategyLibrary,
    StrategyTemplate,
    builtin_canonical,
    load_default_library,
    load_library,
    perturb_template,
)
from .recommend import (
    Diagnostics,
    RankedEntry,
    Recommendation,
    WhatIfResult,
    diagnostics,
    estimate_gaps,
    rank_strategies,
    whatif,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_ATTRIBUTES",
    "AggregationNode",
    "AttributeCategory",
    "AttributeId",
    "AttributeVector",
    "CombineMode",
    "ContextMultipliers",
    "ContextTree",
    "Diagnostics",
    "GapEstimate",
    "LeafMetric",
    "MatchState",
    "ParamSet",
    "PartialAttributeVector",
    "RankedEntry",
    "Recommendation",
    "StrategyCategory",
    "StrategyLibrary",
    "StrategyTemplate",
    "WeightVector",
    "WhatIfResult",
    "adapted_distance",
    "aggregate_node",
    "apply_fatigue_discount",
    "builtin_canonical",
    "combine",
    "compute_multipliers",
    "diagnostics",
    "estimate_gaps",
    "euclidean",
    "evaluate_tree",
    "from_categorical",
    "load_default_library",
    "load_library",
    "make_vector",
    "normalize_leaf",
    "normalize_weights",
    "perturb_template",
    "project",
    "prototype_multiplier",
    "rank_strategies",
    "whatif",
]
