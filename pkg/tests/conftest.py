import itertools

import pytest

from cubeorder import (
    LEAF,
    BaseOrder,
    LevelTree,
    LinearOrder,
    TreeNode,
    all_words,
)

# The k=3 example ordering: group symbols {1, 2} below the root.
LEFT_COMB = LevelTree(TreeNode(2, (TreeNode(1, (LEAF, LEAF)), LEAF)))
RIGHT_COMB = LevelTree(TreeNode(2, (LEAF, TreeNode(1, (LEAF, LEAF)))))


def merge_then_lex_order(n: int) -> LinearOrder:
    """Independent oracle for the LEFT_COMB ordering of [3]^n: compare the
    words with symbol 1 relabeled to 2 lexicographically, ties broken by
    plain lex."""

    def key(w):
        return (tuple(2 if s == 1 else s for s in w.symbols), w.symbols)

    words = list(all_words(3, n))
    ranking = {key_: i for i, key_ in enumerate(sorted(key(w) for w in words))}
    return LinearOrder(3, n, tuple(ranking[key(w)] for w in words))


def all_base_orders(k: int):
    for perm in itertools.permutations(range(1, k + 1)):
        yield BaseOrder(perm)


@pytest.fixture(scope="session")
def left_comb() -> LevelTree:
    return LEFT_COMB
