"""The interval relation of a cube ordering and tree reconstruction.

Given an ordering of [k]^n whose subcube restrictions agree (a uniform
ordering), relabel the alphabet so that the induced order on single
symbols is 1 < 2 < ... < k.  On the nontrivial subintervals [a, b] of
{1..k} (a < b) define

    [a, b] <= [c, d]   exactly when the word cb precedes the word da

in the induced ordering of pairs.  For orderings induced by a level tree
this relation compares the levels of the interval nodes, and it is always
*tree-like*: transitive, comparable (any two intervals relate one way or
the other), and ultrametric ([a, c] is equivalent to the larger of [a, b]
and [b, c] whenever a < b < c).

A tree-like relation determines a level tree.  The *closure* of [a, b]
widens it as far as possible without leaving its equivalence class; the
closures of all pairs form a laminar family, which nests into a plane tree
whose levels are the equivalence classes sorted by the relation.  This
module extracts the relation, checks tree-likeness (reporting a concrete
violating tuple on failure), computes closures, and rebuilds the tree.

JSON form: ``{"k": ..., "intervals": [[a, b], ...], "matrix": [[...], ...]}``
with ``matrix[i][j]`` true when interval i relates below interval j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .orders import LinearOrder, base_from_order, orders_equal, restrict
from .trees import LEAF, LevelTree, Node, TreeNode
from .words import DimensionError, Word, enumerate_subcubes, word_code


def intervals_of(k: int) -> tuple[tuple[int, int], ...]:
    """Nontrivial subintervals of {1..k} in lexicographic endpoint order."""
    return tuple((a, b) for a in range(1, k + 1) for b in range(a + 1, k + 1))


@dataclass(frozen=True)
class TreeLikeReport:
    """Verdict of the three tree-likeness axioms; falsy when one fails."""

    ok: bool
    axiom: str | None = None
    witness: tuple[tuple[int, int], ...] | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "tree-like"
        parts = ", ".join(f"[{a},{b}]" for a, b in self.witness)
        return f"{self.axiom} fails on {parts}"


@dataclass(frozen=True)
class IntervalRelation:
    """Binary relation on the nontrivial subintervals of {1..k}, as a dense
    boolean matrix indexed per :func:`intervals_of`."""

    k: int
    matrix: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        count = len(intervals_of(self.k))
        if len(self.matrix) != count or any(len(row) != count for row in self.matrix):
            raise DimensionError(f"matrix must be {count}x{count} for k={self.k}")

    @cached_property
    def _index(self) -> dict[tuple[int, int], int]:
        return {iv: i for i, iv in enumerate(intervals_of(self.k))}

    def holds(self, ab: tuple[int, int], cd: tuple[int, int]) -> bool:
        """Whether [a, b] relates weakly below [c, d]."""
        return self.matrix[self._index[ab]][self._index[cd]]

    def equiv(self, ab: tuple[int, int], cd: tuple[int, int]) -> bool:
        return self.holds(ab, cd) and self.holds(cd, ab)

    @cached_property
    def tree_like_report(self) -> TreeLikeReport:
        return _check_tree_like(self)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "intervals": [list(iv) for iv in intervals_of(self.k)],
            "matrix": [list(row) for row in self.matrix],
        }

    @classmethod
    def from_json(cls, data: dict) -> "IntervalRelation":
        k = int(data["k"])
        if [tuple(iv) for iv in data["intervals"]] != list(intervals_of(k)):
            raise ValueError("interval legend does not match the canonical enumeration")
        return cls(k, tuple(tuple(bool(x) for x in row) for row in data["matrix"]))


def relation_from_order(order: LinearOrder) -> IntervalRelation:
    """Extract the interval relation from an ordering of [k]^n, n >= 2.

    The alphabet is first relabeled through the base order recovered from
    the single-letter restriction, so intervals always refer to positions
    in the induced alphabet order.  For n > 2 the pair ordering is read off
    the first canonical 2-subcube; agreement with the second one is checked
    as a cheap non-uniformity trap.
    """
    if order.n < 2:
        raise DimensionError(f"interval relation needs n >= 2, got n={order.n}")
    k = order.k
    if order.n == 2:
        pair_order = order
    else:
        stream = enumerate_subcubes(order.n, k, 2)
        first = next(stream)
        pair_order = restrict(order, first)
        second = next(stream, None)
        if second is not None and not orders_equal(pair_order, restrict(order, second)):
            raise ValueError(
                "pair restrictions disagree between the first two 2-subcubes; "
                "the ordering is not uniform"
            )
    sigma = base_from_order(pair_order).perm

    def pair_rank(x: int, y: int) -> int:
        # rank of the two-letter word (position x)(position y)
        return pair_order.ranks[word_code(Word((sigma[x - 1], sigma[y - 1]), k))]

    ivs = intervals_of(k)
    matrix = tuple(
        tuple(pair_rank(c, b) < pair_rank(d, a) for (c, d) in ivs)
        for (a, b) in ivs
    )
    return IntervalRelation(k, matrix)


def relation_from_tree(tree: LevelTree) -> IntervalRelation:
    """The relation comparing interval-node levels; tree-like by construction."""
    k = tree.k
    ivs = intervals_of(k)
    level = {iv: tree.pair_levels[iv] for iv in ivs}
    matrix = tuple(tuple(level[ab] <= level[cd] for cd in ivs) for ab in ivs)
    return IntervalRelation(k, matrix)


def _check_tree_like(rel: IntervalRelation) -> TreeLikeReport:
    ivs = intervals_of(rel.k)
    for x, y in itertools.product(ivs, repeat=2):
        if not (rel.holds(x, y) or rel.holds(y, x)):
            return TreeLikeReport(False, "comparability", (x, y))
    for x, y, z in itertools.product(ivs, repeat=3):
        if rel.holds(x, y) and rel.holds(y, z) and not rel.holds(x, z):
            return TreeLikeReport(False, "transitivity", (x, y, z))
    for a, b, c in itertools.combinations(range(1, rel.k + 1), 3):
        ab, bc, ac = (a, b), (b, c), (a, c)
        top = ab if rel.holds(bc, ab) else bc
        if not rel.equiv(ac, top):
            return TreeLikeReport(False, "ultrametric", (ab, bc, ac))
    return TreeLikeReport(True)


def is_tree_like(rel: IntervalRelation) -> TreeLikeReport:
    """Check transitivity, comparability, and the ultrametric property."""
    return rel.tree_like_report


def _require_tree_like(rel: IntervalRelation) -> None:
    report = rel.tree_like_report
    if not report:
        raise ValueError(f"relation is not tree-like: {report.describe()}")


def closure(rel: IntervalRelation, a: int, b: int) -> tuple[int, int]:
    """The widest interval equivalent to [a, b].

    The left endpoint is the least a' with [a', b] equivalent to [a, b] and
    the right endpoint the greatest b' with [a, b'] equivalent to [a, b].
    For tree-like relations this is the interval-node span: equivalent to
    the input and idempotent.
    """
    if not 1 <= a < b <= rel.k:
        raise ValueError(f"need 1 <= a < b <= {rel.k}, got ({a}, {b})")
    _require_tree_like(rel)
    ab = (a, b)
    lo = min(x for x in range(1, b) if rel.equiv((x, b), ab))
    hi = max(y for y in range(a + 1, rel.k + 1) if rel.equiv((a, y), ab))
    return lo, hi


def reconstruct_tree(rel: IntervalRelation) -> LevelTree:
    """Build the level tree whose interval relation is ``rel``.

    Nodes are the closures of all nontrivial intervals.  They form a
    laminar family (checked), nest into a plane tree, and take their levels
    from the equivalence classes sorted by the relation.
    """
    _require_tree_like(rel)
    k = rel.k
    if k == 1:
        return LevelTree(LEAF)

    nodes = sorted({closure(rel, a, b) for a, b in intervals_of(k)})
    for x, y in itertools.combinations(nodes, 2):
        nested = (x[0] <= y[0] and y[1] <= x[1]) or (y[0] <= x[0] and x[1] <= y[1])
        disjoint = x[1] < y[0] or y[1] < x[0]
        if not (nested or disjoint):
            raise AssertionError(f"closures {x} and {y} overlap without nesting")

    # Equivalence classes of the node intervals, sorted bottom class first.
    classes: list[list[tuple[int, int]]] = []
    for node in nodes:
        for cls in classes:
            if rel.equiv(node, cls[0]):
                cls.append(node)
                break
        else:
            classes.append([node])
    reps = [cls[0] for cls in classes]
    classes = sorted(classes, key=lambda cls: sum(rel.holds(cls[0], r) for r in reps), reverse=True)
    level_of = {node: i + 1 for i, cls in enumerate(classes) for node in cls}

    node_set = set(nodes)

    def build(lo: int, hi: int) -> TreeNode:
        children: list[Node] = []
        pos = lo
        while pos <= hi:
            inner = [
                e for e in range(pos + 1, hi + 1)
                if (pos, e) in node_set and (pos, e) != (lo, hi)
            ]
            if inner:
                end = max(inner)
                children.append(build(pos, end))
                pos = end + 1
            else:
                children.append(LEAF)
                pos += 1
        return TreeNode(level_of[(lo, hi)], tuple(children))

    if (1, k) not in node_set:
        raise AssertionError("closure of the full interval must be a node")
    return LevelTree(build(1, k))
