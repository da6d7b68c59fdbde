"""Plane trees with priority levels and the cube orderings they induce.

A :class:`LevelTree` is a rooted plane tree in which every internal node has
at least two children (the Schroder condition) and carries a positive
integer level; levels strictly decrease along every path away from the
root, while nodes in different branches may share a level.  Levels are kept
normalized: the set of levels in use is exactly ``{1, .., L}``.  Two trees
are equal exactly when they have the same plane shape and the same
normalized levels.

With k leaves and a :class:`~cubeorder.orders.BaseOrder` on {1..k}, the i-th
leaf in plane order is identified with the i-th smallest symbol.  For two
distinct leaves the *interval node* is their lowest common ancestor, and a
linear ordering of [k]^n falls out: compare two words at the leftmost
position whose leaf-pair node has maximal level, using the base order
there.  The flat tree (one internal node) recovers the lexicographic
ordering; deeper trees give genuinely different orderings that are still
stable under restriction to subcubes.

The number of such trees with k leaves is the (k-1)-st ordered Bell number.

JSON form: ``{"level": L, "children": [...]}`` for internal nodes and the
string ``"leaf"`` for leaves; leaf labels are implied by plane order plus a
base order.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Union

from .orders import EQUAL, GREATER, LESS, BaseOrder, LinearOrder
from .words import DimensionError, Word, all_words, word_code

LEAF = "leaf"

Node = Union["TreeNode", str]


@dataclass(frozen=True)
class TreeNode:
    """Internal node: a level and an ordered tuple of children."""

    level: int
    children: tuple[Node, ...]

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError(f"levels must be positive, got {self.level}")
        if len(self.children) < 2:
            raise ValueError("internal nodes need at least two children")
        for child in self.children:
            if isinstance(child, TreeNode):
                if child.level >= self.level:
                    raise ValueError(
                        f"child level {child.level} not below parent level {self.level}"
                    )
            elif child != LEAF:
                raise ValueError(f"bad child {child!r}")


def _levels_used(node: Node, out: set[int]) -> None:
    if isinstance(node, TreeNode):
        out.add(node.level)
        for child in node.children:
            _levels_used(child, out)


def _relabel(node: Node, mapping: dict[int, int]) -> Node:
    if not isinstance(node, TreeNode):
        return node
    return TreeNode(mapping[node.level], tuple(_relabel(c, mapping) for c in node.children))


def normalize_levels(node: Node) -> Node:
    """Compress the levels in use to exactly 1..L, preserving their order."""
    used: set[int] = set()
    _levels_used(node, used)
    mapping = {lvl: i + 1 for i, lvl in enumerate(sorted(used))}
    return _relabel(node, mapping)


def _count_leaves(node: Node) -> int:
    if not isinstance(node, TreeNode):
        return 1
    return sum(_count_leaves(c) for c in node.children)


@dataclass(frozen=True)
class LevelTree:
    """A level-decorated plane tree; the constructor normalizes levels, so
    trees differing only in unnormalized level values compare equal."""

    root: Node

    def __post_init__(self) -> None:
        if self.root != LEAF and not isinstance(self.root, TreeNode):
            raise ValueError(f"bad root {self.root!r}")
        object.__setattr__(self, "root", normalize_levels(self.root))

    @cached_property
    def k(self) -> int:
        """Number of leaves."""
        return _count_leaves(self.root)

    @cached_property
    def pair_levels(self) -> dict[tuple[int, int], int]:
        """Level of the interval node for every leaf position pair a < b."""
        return {
            (a, b): interval_node(self, a, b).level
            for a in range(1, self.k + 1)
            for b in range(a + 1, self.k + 1)
        }


def flat_tree(k: int) -> LevelTree:
    """The single-internal-node tree; its induced ordering is lexicographic."""
    if k == 1:
        return LevelTree(LEAF)
    return LevelTree(TreeNode(1, (LEAF,) * k))


def mirror(tree: LevelTree) -> LevelTree:
    """Reverse every child list; induces the mirror-image orderings."""

    def rec(node: Node) -> Node:
        if not isinstance(node, TreeNode):
            return node
        return TreeNode(node.level, tuple(rec(c) for c in reversed(node.children)))

    return LevelTree(rec(tree.root))


def _descend(tree: LevelTree, a: int, b: int) -> tuple[TreeNode, int, int]:
    """The lowest common ancestor of leaf positions a < b, with the plane
    span (lo, hi) of leaves below it."""
    if a == b:
        raise ValueError("interval node requires two distinct leaves")
    if a > b:
        a, b = b, a
    if not 1 <= a < b <= tree.k:
        raise ValueError(f"leaf positions ({a}, {b}) outside 1..{tree.k}")
    node = tree.root
    lo, hi = 1, tree.k
    while True:
        # Leaves under each child occupy consecutive positions.
        pos = lo
        for child in node.children:
            width = _count_leaves(child)
            if pos <= a and b <= pos + width - 1:
                if not isinstance(child, TreeNode):
                    raise AssertionError("two distinct leaves cannot share a leaf child")
                node, lo, hi = child, pos, pos + width - 1
                break
            pos += width
        else:
            return node, lo, hi


def interval_node(tree: LevelTree, a: int, b: int) -> TreeNode:
    """The bottommost node containing both leaf positions (their LCA)."""
    return _descend(tree, a, b)[0]


def interval_span(tree: LevelTree, a: int, b: int) -> tuple[int, int]:
    """Plane positions (lo, hi) of the leaves under the interval node."""
    _, lo, hi = _descend(tree, a, b)
    return lo, hi


def tree_compare(tree: LevelTree, base: BaseOrder, w: Word, w2: Word) -> int:
    """Compare two words of [k]^n under the tree-induced ordering.

    Among the positions where the words differ, take the leftmost one whose
    leaf-pair interval node has maximal level, and compare the two symbols
    there in the base order.
    """
    if base.k != tree.k:
        raise DimensionError(f"base order on {base.k} symbols against tree with {tree.k} leaves")
    if w.k != tree.k or w2.k != tree.k or w.n != w2.n:
        raise DimensionError(
            f"words from [{w.k}]^{w.n} and [{w2.k}]^{w2.n} against tree with {tree.k} leaves"
        )
    levels = tree.pair_levels
    pos = base.position
    best_index = -1
    best_level = 0
    for i, (a, b) in enumerate(zip(w.symbols, w2.symbols)):
        if a == b:
            continue
        pa, pb = pos(a), pos(b)
        level = levels[(pa, pb) if pa < pb else (pb, pa)]
        if level > best_level:
            best_level = level
            best_index = i
    if best_index < 0:
        return EQUAL
    return LESS if base.compare(w.symbols[best_index], w2.symbols[best_index]) < 0 else GREATER


def tree_order(tree: LevelTree, base: BaseOrder, n: int) -> LinearOrder:
    """Rank table of the tree-induced ordering on [k]^n."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    k = tree.k
    words = list(all_words(k, n))
    key = functools.cmp_to_key(lambda u, v: tree_compare(tree, base, u, v))
    ranks = [0] * len(words)
    for rank, w in enumerate(sorted(words, key=key)):
        ranks[word_code(w)] = rank
    return LinearOrder(k, n, tuple(ranks))


@lru_cache(maxsize=None)
def ordered_bell(n: int) -> int:
    """Number of ordered set partitions of an n-set:
    a(n) = sum over i of C(n, i) * a(n - i), a(0) = 1."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 1
    return sum(math.comb(n, i) * ordered_bell(n - i) for i in range(1, n + 1))


# Shape enumeration.  A shape is a nested tuple: LEAF for a leaf, otherwise
# a tuple of child shapes (length >= 2).  Order: number of children
# ascending, then composition of leaf counts lexicographically, then child
# shapes in product order.

Shape = Union[str, tuple]


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _shapes(k: int) -> tuple[Shape, ...]:
    if k == 1:
        return (LEAF,)
    out: list[Shape] = []
    for parts in range(2, k + 1):
        for comp in _compositions(k, parts):
            for kids in itertools.product(*(_shapes(c) for c in comp)):
                out.append(kids)
    return tuple(out)


def _shape_nodes(shape: Shape, parent: int | None, parents: list[int | None]) -> None:
    """Record the parent index of each internal node in preorder."""
    if shape == LEAF:
        return
    index = len(parents)
    parents.append(parent)
    for child in shape:
        _shape_nodes(child, index, parents)


def _level_assignments(parents: list[int | None]) -> Iterator[tuple[int, ...]]:
    """All normalized level maps: each node strictly below its parent and
    the levels in use exactly 1..max."""
    count = len(parents)

    def rec(i: int, levels: list[int]) -> Iterator[tuple[int, ...]]:
        if i == count:
            top = max(levels)
            if set(levels) == set(range(1, top + 1)):
                yield tuple(levels)
            return
        parent = parents[i]
        cap = count if parent is None else levels[parent] - 1
        for level in range(1, cap + 1):
            levels.append(level)
            yield from rec(i + 1, levels)
            levels.pop()

    yield from rec(0, [])


def _build(shape: Shape, levels: tuple[int, ...], counter: list[int]) -> Node:
    if shape == LEAF:
        return LEAF
    level = levels[counter[0]]
    counter[0] += 1
    return TreeNode(level, tuple(_build(child, levels, counter) for child in shape))


def enumerate_trees(k: int) -> Iterator[LevelTree]:
    """Every level tree with k leaves exactly once, levels normalized.

    Deterministic order: shapes as documented above, then level maps in
    lexicographic order.  The count is ordered_bell(k - 1).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    for shape in _shapes(k):
        if shape == LEAF:
            yield LevelTree(LEAF)
            continue
        parents: list[int | None] = []
        _shape_nodes(shape, None, parents)
        for levels in _level_assignments(parents):
            yield LevelTree(_build(shape, levels, [0]))


def tree_to_json(tree: LevelTree) -> Union[dict, str]:
    def rec(node: Node) -> Union[dict, str]:
        if not isinstance(node, TreeNode):
            return LEAF
        return {"level": node.level, "children": [rec(c) for c in node.children]}

    return rec(tree.root)


def tree_from_json(data: Union[dict, str]) -> LevelTree:
    def rec(item: Union[dict, str]) -> Node:
        if item == LEAF:
            return LEAF
        if not isinstance(item, dict) or set(item) != {"level", "children"}:
            raise ValueError(f"bad tree node {item!r}")
        return TreeNode(int(item["level"]), tuple(rec(c) for c in item["children"]))

    return LevelTree(rec(data))
