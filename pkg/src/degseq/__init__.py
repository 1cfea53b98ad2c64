"""Exact enumeration of labeled graphs with a prescribed degree sequence."""

from degseq.core import (
    ContractError,
    MemoCache,
    RecursionStats,
    canonicalize,
    count,
    count_leaves,
    count_naive,
    k_subsets,
    reduce,
)
from degseq.families import (
    binary_tree_count,
    bipartite_count_eq8,
    bipartite_count_raw,
    moon_tree_count,
    regular_count,
)
from degseq.realizability import erdos_gallai, havel_hakimi

__all__ = [
    "ContractError",
    "MemoCache",
    "RecursionStats",
    "binary_tree_count",
    "bipartite_count_eq8",
    "bipartite_count_raw",
    "canonicalize",
    "count",
    "count_leaves",
    "count_naive",
    "erdos_gallai",
    "havel_hakimi",
    "k_subsets",
    "moon_tree_count",
    "reduce",
    "regular_count",
]
