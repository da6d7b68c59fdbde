"""Independent re-verification of search witnesses.

Every witness the service emits is re-checked from scratch here before it
leaves the process.  These functions deliberately avoid the cached pattern
tables the searches run on: restrictions are rebuilt substitution by
substitution and cube elements re-derived from the generators.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .orders import BaseOrder, LinearOrder, orders_equal, restrict
from .ramsey import (
    DECREASING,
    INCREASING,
    AffineCube,
    EdgeColoring,
    check_sequence,
)
from .trees import LevelTree, tree_order
from .words import ParameterWord


def verify_ordered_subcube(
    order: LinearOrder, pattern: ParameterWord, tree: LevelTree, base: BaseOrder
) -> bool:
    """The restriction along ``pattern`` equals the (tree, base) ordering."""
    return orders_equal(restrict(order, pattern), tree_order(tree, base, pattern.d))


def verify_monotone_cube(
    values: Sequence[int], cube: AffineCube, direction: str
) -> bool:
    """The cube is proper, lies in range, and its values run monotonically."""
    seq = check_sequence(values)
    points = sorted(set(cube.points))
    if len(points) != 2**cube.d:
        return False
    if points[0] < 1 or points[-1] > len(seq):
        return False
    vals = [seq[i - 1] for i in points]
    if direction == INCREASING:
        return all(a < b for a, b in zip(vals, vals[1:]))
    if direction == DECREASING:
        return all(a > b for a, b in zip(vals, vals[1:]))
    return False


def verify_monochromatic_cube(
    coloring: EdgeColoring, cube: AffineCube, color: int
) -> bool:
    """The cube is proper, lies in range, and all element pairs share the color."""
    points = sorted(set(cube.points))
    if len(points) != 2**cube.d:
        return False
    if points[0] < 1 or points[-1] > coloring.m:
        return False
    return all(
        coloring.color_of(a, b) == color for a, b in itertools.combinations(points, 2)
    )
