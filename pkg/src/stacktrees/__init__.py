"""Ordered trees as 231-avoiding permutations, and their edit distance."""

from .codec import decode, encode
from .distance import (
    DistanceResult,
    bfs_oracle_distance,
    common_pattern,
    pattern_contains,
    perm_distance,
    tree_edit_distance,
)
from .edits import (
    EditOp,
    delete_at,
    insert_empty,
    insert_inner,
    insert_left,
    insert_right,
    neighbors,
    shift_bar,
)
from .factors import (
    CompactClass,
    FactorSpan,
    classify_compact,
    complete_factors,
    is_compact,
    is_complete,
)
from .perms import (
    NotStackSortable,
    is_stack_sortable,
    largest_common_pattern_bruteforce,
    lds_length,
    lis_length,
    normalize,
    parse_perm,
    pattern_occurs,
)
from .trees import (
    OrderedTree,
    enumerate_subtrees,
    height,
    leaf_count,
    parse_tree,
    serialize_tree,
)

__version__ = "0.1.0"

__all__ = [
    "bfs_oracle_distance",
    "classify_compact",
    "common_pattern",
    "CompactClass",
    "complete_factors",
    "decode",
    "delete_at",
    "DistanceResult",
    "EditOp",
    "encode",
    "enumerate_subtrees",
    "FactorSpan",
    "height",
    "insert_empty",
    "insert_inner",
    "insert_left",
    "insert_right",
    "is_compact",
    "is_complete",
    "is_stack_sortable",
    "largest_common_pattern_bruteforce",
    "lds_length",
    "leaf_count",
    "lis_length",
    "neighbors",
    "normalize",
    "NotStackSortable",
    "OrderedTree",
    "parse_perm",
    "parse_tree",
    "pattern_contains",
    "pattern_occurs",
    "perm_distance",
    "serialize_tree",
    "shift_bar",
    "tree_edit_distance",
]
