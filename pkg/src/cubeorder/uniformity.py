"""Uniformity testing, ordered-subcube witness searches, and classification.

An ordering of [k]^n is *d-uniform* when the restrictions to all canonical
d-subcubes induce one and the same ordering of [k]^d, and *uniform* when
this holds for every d.  Uniform orderings for n >= 3 are exactly the
tree-induced ones up to one dimension: classification recovers the base
order and the interval relation, rebuilds the level tree, and the rebuilt
ordering agrees with the input on every (n-1)-subcube.  Agreement on the
full cube is checked and reported as well; it is expected for tree-built
inputs but is not part of the guarantee.

Witness searches enumerate subcubes in the deterministic order of
:func:`cubeorder.words.enumerate_subcubes` and return the least witness, so
serial and chunked parallel runs agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .intervals import is_tree_like, reconstruct_tree, relation_from_order
from .orders import BaseOrder, LinearOrder, base_from_order, orders_equal, restrict
from .trees import LevelTree, enumerate_trees, flat_tree, tree_order
from .words import DimensionError, ParameterWord, enumerate_subcubes, subcube_index_arrays

Family = Literal["lex", "tree"]
FAMILY_LEX: Family = "lex"
FAMILY_TREE: Family = "tree"


def _restriction_pattern(ranks: tuple[int, ...], codes: tuple[int, ...]) -> tuple[int, ...]:
    """Normalized rank pattern of a restriction: the rank table an order
    built from these comparison keys would have."""
    values = [ranks[c] for c in codes]
    rank = {v: i for i, v in enumerate(sorted(values))}
    return tuple(rank[v] for v in values)


@dataclass(frozen=True)
class DUniformity:
    """Verdict for a single dimension, with a differing subcube pair on
    failure; falsy when not uniform."""

    d: int
    ok: bool
    counterexample: tuple[ParameterWord, ParameterWord] | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class UniformityReport:
    k: int
    n: int
    results: tuple[DUniformity, ...]

    @property
    def uniform(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> tuple[DUniformity, ...]:
        return tuple(r for r in self.results if not r.ok)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "uniform": self.uniform,
            "verdicts": {str(r.d): r.ok for r in self.results},
            "counterexamples": [
                {"d": r.d, "patterns": [str(r.counterexample[0]), str(r.counterexample[1])]}
                for r in self.failures
            ],
        }


def is_d_uniform(order: LinearOrder, d: int) -> DUniformity:
    """Whether all d-subcube restrictions induce the same order on [k]^d."""
    if not 1 <= d <= order.n:
        raise DimensionError(f"d={d} outside 1..{order.n}")
    arrays = subcube_index_arrays(order.k, order.n, d)
    first_p, first_codes = arrays[0]
    reference = _restriction_pattern(order.ranks, first_codes)
    for p, codes in arrays[1:]:
        if _restriction_pattern(order.ranks, codes) != reference:
            return DUniformity(d, False, (first_p, p))
    return DUniformity(d, True)


def is_uniform(order: LinearOrder) -> UniformityReport:
    """Aggregate d-uniformity for every d = 1..n."""
    return UniformityReport(
        order.k, order.n, tuple(is_d_uniform(order, d) for d in range(1, order.n + 1))
    )


def find_uniform_subcube(order: LinearOrder, d: int) -> ParameterWord | None:
    """Least canonical d-subcube whose restriction is a uniform order.

    Exhaustive; ``None`` means verified absence (possible at small n).  The
    first candidate tried is the all-ones prefix followed by the wildcards,
    which is both the heuristically promising seed and the least word in
    enumeration order.
    """
    if not 1 <= d <= order.n:
        raise DimensionError(f"d={d} outside 1..{order.n}")
    for p in enumerate_subcubes(order.n, order.k, d):
        if is_uniform(restrict(order, p)).uniform:
            return p
    return None


@dataclass(frozen=True)
class OrderedSubcubeWitness:
    """A subcube whose restriction matches a known ordering family member."""

    pattern: ParameterWord
    tree: LevelTree
    base: BaseOrder


@lru_cache(maxsize=None)
def _candidate_orders(
    k: int, d: int, family: Family
) -> tuple[tuple[LevelTree, BaseOrder, tuple[int, ...]], ...]:
    """Rank tables of all family orderings of [k]^d, in deterministic order
    (trees in enumeration order, bases lexicographically; lex family keeps
    only the flat tree)."""
    import itertools

    trees = [flat_tree(k)] if family == FAMILY_LEX else list(enumerate_trees(k))
    out = []
    for tree in trees:
        for perm in itertools.permutations(range(1, k + 1)):
            base = BaseOrder(perm)
            out.append((tree, base, tree_order(tree, base, d).ranks))
    return tuple(out)


def find_ordered_subcube(
    order: LinearOrder, d: int, family: Family = FAMILY_TREE
) -> OrderedSubcubeWitness | None:
    """Least canonical d-subcube whose restriction equals a lexicographic
    ordering (family "lex") or any tree-induced ordering (family "tree").

    ``None`` is an exhaustively verified absence.  When several (tree,
    base) pairs induce the same ordering (possible only at d = 1) the first
    in candidate order is reported.
    """
    if not 1 <= d <= order.n:
        raise DimensionError(f"d={d} outside 1..{order.n}")
    if family not in (FAMILY_LEX, FAMILY_TREE):
        raise ValueError(f"unknown family {family!r}")
    candidates = _candidate_orders(order.k, d, family)
    for p, codes in subcube_index_arrays(order.k, order.n, d):
        pattern = _restriction_pattern(order.ranks, codes)
        for tree, base, ranks in candidates:
            if pattern == ranks:
                return OrderedSubcubeWitness(p, tree, base)
    return None


@dataclass(frozen=True)
class Classification:
    """Result of classifying a uniform ordering against the tree family."""

    tree: LevelTree
    base: BaseOrder
    subcube_agreement: bool
    full_cube_equal: bool


def classify_uniform(order: LinearOrder) -> Classification:
    """Recover the (tree, base) pair behind a uniform ordering, n >= 3.

    The base order comes from the single-letter restriction and the tree
    from the interval relation of the pair restriction.  The rebuilt
    ordering is guaranteed to agree with the input on every canonical
    (n-1)-subcube; that agreement and full-cube equality are both checked
    and reported.  Non-uniform input and n < 3 are rejected.
    """
    if order.n < 3:
        raise DimensionError(f"classification needs n >= 3, got n={order.n}")
    report = is_uniform(order)
    if not report.uniform:
        failure = report.failures[0]
        raise ValueError(
            f"ordering is not uniform: restrictions to {failure.counterexample[0]} "
            f"and {failure.counterexample[1]} differ (d={failure.d})"
        )
    base = base_from_order(order)
    rel = relation_from_order(order)
    tree_like = is_tree_like(rel)
    if not tree_like:
        raise ValueError(f"interval relation is not tree-like: {tree_like.describe()}")
    tree = reconstruct_tree(rel)
    model = tree_order(tree, base, order.n)
    agreement = all(
        _restriction_pattern(order.ranks, codes) == _restriction_pattern(model.ranks, codes)
        for _, codes in subcube_index_arrays(order.k, order.n, order.n - 1)
    )
    return Classification(tree, base, agreement, orders_equal(order, model))
