"""Scans over the space of linear orderings of [k]^n.

Exhaustive mode walks all (k^n)! rank tables in lexicographic order (only
allowed while k^n <= 8); sample mode draws seeded random orderings.  Each
ordering passes through a fast uniformity filter; the rare survivors are
re-verified through the restriction machinery (an independent code path),
checked against the two-letter lexicographic property and the tree
classification when n >= 3, and reported.  Any ordering violating an
expected invariant is kept as a specimen, as is any uniform ordering whose
classification does not extend to full-cube equality.

Sampling uses ``random.Random`` (the Mersenne Twister) with the string seed
``"{seed}:{index}"`` per draw, so results depend only on (seed, index) and
parallel chunking cannot change the output.  Worker count changes wall time
only: chunks are merged in index order.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .orders import (
    BaseOrder,
    LinearOrder,
    alphabet_restriction,
    base_from_order,
    lex_order,
    orders_equal,
    restrict,
)
from .uniformity import FAMILY_LEX, _candidate_orders, _restriction_pattern, classify_uniform
from .words import subcube_index_arrays

GENERATOR_NAME = 'random.Random (Mersenne Twister), string seed "{seed}:{index}" per draw'

MAX_EXHAUSTIVE_POINTS = 8  # 8! = 40320 orderings


@dataclass(frozen=True)
class SweepConfig:
    k: int
    n: int
    mode: str  # "exhaustive" | "sample"
    seed: int | None = None
    samples: int | None = None
    d: int = 2  # dimension for the lex-subcube hit rate
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "sample"):
            raise ValueError(f"unknown sweep mode {self.mode!r}")
        size = self.k**self.n
        if self.mode == "exhaustive" and size > MAX_EXHAUSTIVE_POINTS:
            raise ValueError(
                f"exhaustive sweep needs k^n <= {MAX_EXHAUSTIVE_POINTS}, got {size}; "
                "use sample mode with a seed"
            )
        if self.mode == "sample":
            if self.seed is None:
                raise ValueError("sample mode requires a seed")
            if not self.samples or self.samples < 1:
                raise ValueError("sample mode requires a positive sample count")
        if not 1 <= self.d <= self.n:
            raise ValueError(f"hit-rate dimension d={self.d} outside 1..{self.n}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


@dataclass
class SweepResult:
    config: SweepConfig
    orders_scanned: int = 0
    uniform_count: int = 0
    uniform_orders: list[list[int]] = field(default_factory=list)
    lex_witness_hits: int = 0
    violations: list[dict] = field(default_factory=list)
    notable: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        cfg = self.config
        doc = {
            "k": cfg.k,
            "n": cfg.n,
            "mode": cfg.mode,
            "d": cfg.d,
            "orders_scanned": self.orders_scanned,
            "uniform_count": self.uniform_count,
            "uniform_orders": self.uniform_orders,
            "lex_witness_hits": self.lex_witness_hits,
            "violations": self.violations,
            "notable": self.notable,
        }
        if cfg.mode == "sample":
            doc["seed"] = cfg.seed
            doc["samples"] = cfg.samples
            doc["generator"] = GENERATOR_NAME
        return doc


def _uniform_filter(ranks: tuple[int, ...], k: int, n: int) -> bool:
    """Pattern-based uniformity test with early exit; equivalent to
    :func:`cubeorder.uniformity.is_uniform` (checked on survivors)."""
    for d in range(1, n + 1):
        arrays = subcube_index_arrays(k, n, d)
        reference = _restriction_pattern(ranks, arrays[0][1])
        for _, codes in arrays[1:]:
            if _restriction_pattern(ranks, codes) != reference:
                return False
    return True


def _verify_uniform_by_restriction(order: LinearOrder) -> bool:
    """Slow-path uniformity check building every restriction as an order."""
    for d in range(1, order.n + 1):
        subcubes = subcube_index_arrays(order.k, order.n, d)
        reference = restrict(order, subcubes[0][0])
        for p, _ in subcubes[1:]:
            if not orders_equal(restrict(order, p), reference):
                return False
    return True


def _lex_hit(ranks: tuple[int, ...], k: int, n: int, d: int) -> bool:
    candidates = [c for _, _, c in _candidate_orders(k, d, FAMILY_LEX)]
    for _, codes in subcube_index_arrays(k, n, d):
        if _restriction_pattern(ranks, codes) in candidates:
            return True
    return False


def _inspect_uniform_order(order: LinearOrder, result: SweepResult) -> None:
    """Invariant checks applied to a uniform survivor (n >= 3)."""
    serialized = list(order.ranks)
    if order.n < 3:
        return
    base = base_from_order(order)
    for i in range(order.k):
        for j in range(i + 1, order.k):
            x, y = sorted((base.perm[i], base.perm[j]))
            two = alphabet_restriction(order, (x, y))
            expected_base = BaseOrder((1, 2) if base.position(x) < base.position(y) else (2, 1))
            if not orders_equal(two, lex_order(expected_base, order.n)):
                result.violations.append(
                    {
                        "ranks": serialized,
                        "kind": "two-letter-not-lex",
                        "detail": f"symbols ({x}, {y})",
                    }
                )
                return
    try:
        classification = classify_uniform(order)
    except ValueError as exc:
        result.violations.append(
            {"ranks": serialized, "kind": "classification-failed", "detail": str(exc)}
        )
        return
    if not classification.subcube_agreement:
        result.violations.append(
            {"ranks": serialized, "kind": "subcube-agreement-failed", "detail": ""}
        )
    elif not classification.full_cube_equal:
        result.notable.append(
            {"ranks": serialized, "kind": "uniform-without-full-equality", "detail": ""}
        )


def _scan_ranks(rank_tables: Iterator[tuple[int, ...]], config: SweepConfig, result: SweepResult) -> None:
    k, n = config.k, config.n
    for ranks in rank_tables:
        result.orders_scanned += 1
        if _lex_hit(ranks, k, n, config.d):
            result.lex_witness_hits += 1
        if _uniform_filter(ranks, k, n):
            order = LinearOrder(k, n, ranks)
            if not _verify_uniform_by_restriction(order):
                result.violations.append(
                    {
                        "ranks": list(ranks),
                        "kind": "filter-verification-mismatch",
                        "detail": "fast filter and restriction check disagree",
                    }
                )
                continue
            result.uniform_count += 1
            result.uniform_orders.append(list(ranks))
            _inspect_uniform_order(order, result)


def _exhaustive_chunk(config: SweepConfig, start: int, stop: int) -> SweepResult:
    size = config.k**config.n
    tables = itertools.islice(itertools.permutations(range(size)), start, stop)
    result = SweepResult(config)
    _scan_ranks(tables, config, result)
    return result


def _sample_chunk(config: SweepConfig, start: int, stop: int) -> SweepResult:
    size = config.k**config.n
    def tables() -> Iterator[tuple[int, ...]]:
        for index in range(start, stop):
            rng = random.Random(f"{config.seed}:{index}")
            ranks = list(range(size))
            rng.shuffle(ranks)
            yield tuple(ranks)
    result = SweepResult(config)
    _scan_ranks(tables(), config, result)
    return result


def _chunk_worker(payload: tuple[SweepConfig, int, int]) -> SweepResult:
    config, start, stop = payload
    if config.mode == "exhaustive":
        return _exhaustive_chunk(config, start, stop)
    return _sample_chunk(config, start, stop)


def _merge(into: SweepResult, part: SweepResult) -> None:
    into.orders_scanned += part.orders_scanned
    into.uniform_count += part.uniform_count
    into.uniform_orders.extend(part.uniform_orders)
    into.lex_witness_hits += part.lex_witness_hits
    into.violations.extend(part.violations)
    into.notable.extend(part.notable)


def run_sweep(config: SweepConfig) -> SweepResult:
    """Run the sweep; identical configs give identical results regardless
    of the worker count."""
    import math

    total = math.factorial(config.k**config.n) if config.mode == "exhaustive" else config.samples
    if config.jobs == 1:
        return _chunk_worker((config, 0, total))
    bounds = [total * i // config.jobs for i in range(config.jobs + 1)]
    payloads = [
        (config, bounds[i], bounds[i + 1])
        for i in range(config.jobs)
        if bounds[i] < bounds[i + 1]
    ]
    result = SweepResult(config)
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        for part in pool.map(_chunk_worker, payloads):
            _merge(result, part)
    return result
