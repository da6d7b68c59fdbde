"""Linear orderings of combinatorial cubes.

Core layers: parameter-word algebra (:mod:`cubeorder.words`), rank-table
orderings (:mod:`cubeorder.orders`), level trees and their induced
orderings (:mod:`cubeorder.trees`), interval relations and tree
reconstruction (:mod:`cubeorder.intervals`), uniformity and classification
(:mod:`cubeorder.uniformity`), affine-cube and coloring searches
(:mod:`cubeorder.ramsey`), and order-space sweeps (:mod:`cubeorder.sweep`).
The FastAPI app in :mod:`cubeorder.service` exposes everything over HTTP
and the CLI in :mod:`cubeorder.cli` is a thin client for it.
"""

from .intervals import (
    IntervalRelation,
    TreeLikeReport,
    closure,
    intervals_of,
    is_tree_like,
    reconstruct_tree,
    relation_from_order,
    relation_from_tree,
)
from .orders import (
    EQUAL,
    GREATER,
    LESS,
    BaseOrder,
    LinearOrder,
    alphabet_restriction,
    base_from_order,
    compare,
    lex_order,
    orders_equal,
    restrict,
)
from .ramsey import (
    AffineCube,
    EdgeColoring,
    ThreeAPReport,
    enumerate_affine_cubes,
    find_monochromatic_affine_cube,
    find_monochromatic_cube_via_subcube_coloring,
    find_monotone_affine_cube,
    gen_3ap_free,
    incomparable,
    incomparable_set,
    is_proper,
    projection,
    sequence_to_coloring,
    sequence_to_order,
    subcube_image,
    verify_no_monotone_3ap,
)
from .sweep import SweepConfig, SweepResult, run_sweep
from .trees import (
    LEAF,
    LevelTree,
    TreeNode,
    enumerate_trees,
    flat_tree,
    interval_node,
    interval_span,
    mirror,
    ordered_bell,
    tree_compare,
    tree_from_json,
    tree_order,
    tree_to_json,
)
from .uniformity import (
    Classification,
    UniformityReport,
    classify_uniform,
    find_ordered_subcube,
    find_uniform_subcube,
    is_d_uniform,
    is_uniform,
)
from .words import (
    DimensionError,
    ParameterWord,
    Word,
    all_words,
    canonicalize,
    compose,
    enumerate_subcubes,
    identity_parameter_word,
    is_canonical,
    substitute,
    word_code,
    word_from_code,
)

__all__ = [name for name in dir() if not name.startswith("_")]
