"""Words over a finite alphabet and parameter words with wildcard slots.

A word of length ``n`` over the alphabet ``{1, ..., k}`` is a point of the
n-dimensional cube.  A parameter word additionally contains wildcard slots
``*1 .. *d`` (each appearing at least once); substituting symbols for the
wildcards carves a combinatorial d-dimensional subcube out of the ambient
cube.  A parameter word is *canonical* when the first occurrence of ``*1``
precedes the first occurrence of ``*2``, which precedes ``*3``, and so on;
canonical words give a fixed bijection between a subcube and the d-cube.

Text form: symbols are the digits ``'1'..'9'`` and wildcards the lowercase
letters ``'a'..'z'`` with ``'a'`` standing for the first wildcard (so
``"21aba3"`` has symbol slots 2, 1, 3 and wildcard ``*1`` at positions 3 and
5, ``*2`` at position 4).  This is unambiguous for k <= 9 and d <= 26, which
covers everything this package targets.  Round-tripping through the text
form is exact.

All types are immutable and all operations are pure functions, so values can
be shared freely across threads and enumeration streams can be split into
deterministic chunks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

WILDCARD_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class DimensionError(ValueError):
    """Two combinatorial objects have incompatible sizes."""


@dataclass(frozen=True)
class Word:
    """A length-n word over the alphabet {1..k}."""

    symbols: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.k}")
        for s in self.symbols:
            if not 1 <= s <= self.k:
                raise ValueError(f"symbol {s} outside alphabet [1, {self.k}]")

    @property
    def n(self) -> int:
        return len(self.symbols)

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "Word":
        """Parse digits '1'..'9'; ``k`` defaults to the largest symbol seen."""
        symbols = []
        for ch in text:
            if not ch.isdigit() or ch == "0":
                raise ValueError(f"invalid word character {ch!r} in {text!r}")
            symbols.append(int(ch))
        if k is None:
            k = max(symbols, default=1)
        return cls(tuple(symbols), k)

    def __str__(self) -> str:
        if any(s > 9 for s in self.symbols):
            raise ValueError("text form only supports symbols up to 9")
        return "".join(str(s) for s in self.symbols)


@dataclass(frozen=True)
class ParameterWord:
    """A word over {1..k} with d wildcard slots, each wildcard occurring at
    least once.

    Slots are stored as integers: a positive value is a symbol, a negative
    value ``-j`` is the wildcard ``*j``.  The wildcard indices present must
    be exactly 1..d for some 1 <= d <= n.
    """

    slots: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.k}")
        wildcards = set()
        for s in self.slots:
            if s > 0:
                if s > self.k:
                    raise ValueError(f"symbol {s} outside alphabet [1, {self.k}]")
            elif s < 0:
                wildcards.add(-s)
            else:
                raise ValueError("slot value 0 is neither symbol nor wildcard")
        if not wildcards:
            raise ValueError("parameter word must contain at least one wildcard")
        d = max(wildcards)
        if wildcards != set(range(1, d + 1)):
            missing = sorted(set(range(1, d + 1)) - wildcards)
            raise ValueError(f"wildcard indices {missing} missing below *{d}")

    @property
    def n(self) -> int:
        return len(self.slots)

    @property
    def d(self) -> int:
        return max(-s for s in self.slots if s < 0)

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "ParameterWord":
        """Parse the digit/letter text form ('a' is the first wildcard)."""
        slots = []
        for ch in text:
            if ch.isdigit() and ch != "0":
                slots.append(int(ch))
            elif ch in WILDCARD_LETTERS:
                slots.append(-(WILDCARD_LETTERS.index(ch) + 1))
            else:
                raise ValueError(f"invalid slot character {ch!r} in {text!r}")
        if k is None:
            k = max((s for s in slots if s > 0), default=1)
        return cls(tuple(slots), k)

    def __str__(self) -> str:
        out = []
        for s in self.slots:
            if s > 0:
                if s > 9:
                    raise ValueError("text form only supports symbols up to 9")
                out.append(str(s))
            else:
                out.append(WILDCARD_LETTERS[-s - 1])
        return "".join(out)


def identity_parameter_word(k: int, d: int) -> ParameterWord:
    """The word ``*1 *2 ... *d``: substitution through it is the identity."""
    return ParameterWord(tuple(-j for j in range(1, d + 1)), k)


def substitute(p: ParameterWord, w: Union[Word, ParameterWord]) -> Union[Word, ParameterWord]:
    """Fill the wildcards of ``p`` with the slots of ``w``.

    ``w`` must have length equal to the number of wildcards of ``p``.  When
    ``w`` is itself a parameter word its wildcards pass through, which is
    exactly :func:`compose`.  The output alphabet is the larger of the two
    input alphabets.
    """
    if isinstance(w, ParameterWord):
        return compose(p, w)
    if w.n != p.d:
        raise DimensionError(f"substituted word has length {w.n}, expected {p.d}")
    symbols = tuple(s if s > 0 else w.symbols[-s - 1] for s in p.slots)
    return Word(symbols, max(p.k, w.k))


def compose(p: ParameterWord, q: ParameterWord) -> ParameterWord:
    """Substitute the parameter word ``q`` into ``p``, wildcards passing through.

    The result describes the subcube-of-a-subcube: first select with ``p``,
    then with ``q`` inside it.  Composing canonical words yields a canonical
    word.
    """
    if q.n != p.d:
        raise DimensionError(f"inner word has length {q.n}, expected {p.d}")
    slots = tuple(s if s > 0 else q.slots[-s - 1] for s in p.slots)
    return ParameterWord(slots, max(p.k, q.k))


def is_canonical(p: ParameterWord) -> bool:
    """True when wildcard first occurrences appear in the order *1, *2, ..."""
    next_new = 1
    for s in p.slots:
        if s < 0 and -s >= next_new:
            if -s != next_new:
                return False
            next_new += 1
    return True


def canonicalize(p: ParameterWord) -> ParameterWord:
    """Relabel wildcards by order of first occurrence.

    The symbol slots and the partition of positions into wildcard classes
    are unchanged, so the induced subcube is the same set of words.
    Idempotent, and the identity on canonical input.
    """
    relabel: dict[int, int] = {}
    slots = []
    for s in p.slots:
        if s > 0:
            slots.append(s)
        else:
            j = relabel.setdefault(-s, len(relabel) + 1)
            slots.append(-j)
    return ParameterWord(tuple(slots), p.k)


def all_words(k: int, n: int) -> Iterator[Word]:
    """All words of [k]^n in code order (see :func:`word_code`)."""
    for symbols in itertools.product(range(1, k + 1), repeat=n):
        yield Word(symbols, k)


def word_code(w: Word) -> int:
    """Index of a word in [0, k^n): base-k digits with symbol 1 as digit 0,
    first slot most significant.  This is also the packed integer form used
    by the search loops."""
    code = 0
    for s in w.symbols:
        code = code * w.k + (s - 1)
    return code


def word_from_code(code: int, k: int, n: int) -> Word:
    if not 0 <= code < k**n:
        raise ValueError(f"code {code} outside [0, {k**n})")
    symbols = [0] * n
    for i in range(n - 1, -1, -1):
        code, digit = divmod(code, k)
        symbols[i] = digit + 1
    return Word(tuple(symbols), k)


def enumerate_subcubes(n: int, k: int, d: int) -> Iterator[ParameterWord]:
    """Every canonical d-parameter word of length n over [k], exactly once.

    Order: slot values are ordered symbol 1 < ... < symbol k < *1 < ... < *d
    and words are emitted in lexicographic order of their slot sequences.
    The order is deterministic, so parallel consumers can split the stream
    into index ranges and still agree on the least witness.
    """
    if d < 1:
        raise DimensionError(f"need at least one wildcard, got d={d}")
    if d > n:
        raise DimensionError(f"cannot fit {d} wildcards in {n} slots")
    values = list(range(1, k + 1)) + [-j for j in range(1, d + 1)]
    for slots in itertools.product(values, repeat=n):
        wildcards = {-s for s in slots if s < 0}
        if len(wildcards) != d:
            continue
        p = ParameterWord(slots, k)
        if is_canonical(p):
            yield p


@lru_cache(maxsize=None)
def subcube_index_arrays(k: int, n: int, d: int) -> tuple[tuple[ParameterWord, tuple[int, ...]], ...]:
    """For each canonical d-subcube of [k]^n, the codes of its image words.

    Entry ``(p, codes)`` lists ``word_code(substitute(p, w))`` for ``w``
    ranging over [k]^d in code order.  Cached because uniformity checks and
    sweeps reuse these arrays across many orderings.
    """
    out = []
    for p in enumerate_subcubes(n, k, d):
        codes = tuple(word_code(substitute(p, w)) for w in all_words(k, d))
        out.append((p, codes))
    return tuple(out)


# Packed fixed-width encodings for the hot search paths.  Words use 2 bits
# per slot (k <= 4), parameter words 3 bits per slot (k + d <= 8); both
# require n <= 31 so the result stays within a machine word.  The sequence
# form remains the source of truth; these are lossless round-trips.

def pack_word(w: Word) -> int:
    if w.k > 4 or w.n > 31:
        raise ValueError("packed words require k <= 4 and n <= 31")
    packed = 0
    for s in w.symbols:
        packed = (packed << 2) | (s - 1)
    return packed


def unpack_word(packed: int, k: int, n: int) -> Word:
    symbols = [0] * n
    for i in range(n - 1, -1, -1):
        symbols[i] = (packed & 0b11) + 1
        packed >>= 2
    return Word(tuple(symbols), k)


def pack_parameter_word(p: ParameterWord) -> int:
    if p.k + p.d > 8 or p.n > 31:
        raise ValueError("packed parameter words require k + d <= 8 and n <= 31")
    packed = 0
    for s in p.slots:
        value = s - 1 if s > 0 else p.k + (-s - 1)
        packed = (packed << 3) | value
    return packed


def unpack_parameter_word(packed: int, k: int, n: int) -> ParameterWord:
    slots = [0] * n
    for i in range(n - 1, -1, -1):
        value = packed & 0b111
        slots[i] = value + 1 if value < k else -(value - k + 1)
        packed >>= 3
    return ParameterWord(tuple(slots), k)
