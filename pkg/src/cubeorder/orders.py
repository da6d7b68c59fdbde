"""Linear orderings of the cube [k]^n as first-class values.

An ordering is stored dense: a rank table assigning each of the k^n words a
distinct rank in [0, k^n).  Words index the table through their code (base-k
digits, symbol 1 as digit 0, first slot most significant), so serialized
tables are portable.  Restriction to a canonical d-subcube reads the ranks
of the image words and compresses them, giving an ordering of [k]^d under
the canonical bijection.

JSON form: ``{"k": ..., "n": ..., "ranks": [...]}`` with ranks indexed by
word code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import (
    DimensionError,
    ParameterWord,
    Word,
    all_words,
    enumerate_subcubes,
    is_canonical,
    substitute,
    word_code,
)

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class BaseOrder:
    """A total order on the alphabet {1..k}; ``perm`` lists symbols from
    smallest to largest, so ``perm=(2, 1)`` means 2 < 1."""

    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{len(self.perm)}")

    @property
    def k(self) -> int:
        return len(self.perm)

    @classmethod
    def natural(cls, k: int) -> "BaseOrder":
        return cls(tuple(range(1, k + 1)))

    def position(self, symbol: int) -> int:
        """1-based position of a symbol: the smallest symbol has position 1."""
        return self.perm.index(symbol) + 1

    def compare(self, a: int, b: int) -> int:
        pa, pb = self.position(a), self.position(b)
        return LESS if pa < pb else GREATER if pa > pb else EQUAL


@dataclass(frozen=True)
class LinearOrder:
    """A total order on [k]^n: ``ranks[word_code(w)]`` is the rank of w."""

    k: int
    n: int
    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        size = self.k**self.n
        if len(self.ranks) != size:
            raise DimensionError(f"rank table has {len(self.ranks)} entries, expected {size}")
        if sorted(self.ranks) != list(range(size)):
            raise ValueError("ranks must be a bijection onto [0, k^n)")

    @classmethod
    def from_rank_values(cls, k: int, n: int, values: list[int]) -> "LinearOrder":
        """Build from arbitrary distinct comparison keys by compressing them
        to ranks 0..k^n-1."""
        if len(set(values)) != len(values):
            raise ValueError("comparison keys must be distinct")
        rank = {v: i for i, v in enumerate(sorted(values))}
        return cls(k, n, tuple(rank[v] for v in values))

    def rank_of(self, w: Word) -> int:
        if w.k != self.k or w.n != self.n:
            raise DimensionError(f"word from [{w.k}]^{w.n} against order on [{self.k}]^{self.n}")
        return self.ranks[word_code(w)]

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "ranks": list(self.ranks)}

    @classmethod
    def from_json(cls, data: dict) -> "LinearOrder":
        return cls(int(data["k"]), int(data["n"]), tuple(int(r) for r in data["ranks"]))


def compare(order: LinearOrder, w: Word, w2: Word) -> int:
    """LESS/EQUAL/GREATER (-1/0/1) according to the rank table."""
    ra, rb = order.rank_of(w), order.rank_of(w2)
    return LESS if ra < rb else GREATER if ra > rb else EQUAL


def lex_order(base: BaseOrder, n: int) -> LinearOrder:
    """The lexicographic ordering: words compared at the least differing
    index under ``base``."""
    k = base.k
    ranks = []
    for w in all_words(k, n):
        r = 0
        for s in w.symbols:
            r = r * k + base.position(s) - 1
        ranks.append(r)
    return LinearOrder(k, n, tuple(ranks))


def restrict(order: LinearOrder, p: ParameterWord) -> LinearOrder:
    """The ordering induced on [k]^d by a canonical d-parameter word:
    ``w < w'`` exactly when the image of w precedes the image of w'."""
    if not is_canonical(p):
        raise ValueError(f"restriction requires a canonical parameter word, got {p}")
    if p.n != order.n or p.k != order.k:
        raise DimensionError(f"parameter word over [{p.k}]^{p.n} against order on [{order.k}]^{order.n}")
    values = [order.ranks[word_code(substitute(p, w))] for w in all_words(order.k, p.d)]
    return LinearOrder.from_rank_values(order.k, p.d, values)


def orders_equal(a: LinearOrder, b: LinearOrder) -> bool:
    """Whether two orders agree as comparison relations.  Rank tables are
    kept normalized, so this is table equality."""
    if a.k != b.k or a.n != b.n:
        raise DimensionError(f"orders on [{a.k}]^{a.n} and [{b.k}]^{b.n} are incomparable")
    return a.ranks == b.ranks


def base_from_order(order: LinearOrder) -> BaseOrder:
    """The alphabet order induced by the restriction to single letters.

    Uses the first canonical 1-subcube in enumeration order; for orders
    whose 1-subcube restrictions all agree the choice is irrelevant.
    """
    p = next(iter(enumerate_subcubes(order.n, order.k, 1)))
    symbols = sorted(
        range(1, order.k + 1),
        key=lambda s: order.ranks[word_code(substitute(p, Word((s,), order.k)))],
    )
    return BaseOrder(tuple(symbols))


def alphabet_restriction(order: LinearOrder, symbols: tuple[int, ...]) -> LinearOrder:
    """The ordering induced on [s]^n by the words using only ``symbols``.

    ``symbols`` must be strictly increasing; its i-th entry plays the role
    of symbol i.  This is restriction to a sub-alphabet, not to a subcube.
    """
    s = len(symbols)
    if list(symbols) != sorted(set(symbols)) or not all(1 <= x <= order.k for x in symbols):
        raise ValueError(f"{symbols} is not an increasing tuple of symbols of [1, {order.k}]")
    values = []
    for w in all_words(s, order.n):
        image = Word(tuple(symbols[x - 1] for x in w.symbols), order.k)
        values.append(order.ranks[word_code(image)])
    return LinearOrder.from_rank_values(s, order.n, values)
