import itertools
import json

import pytest

from cubeorder import (
    BaseOrder,
    LinearOrder,
    SweepConfig,
    is_uniform,
    lex_order,
    run_sweep,
)


class TestConfig:
    def test_exhaustive_size_guard(self):
        with pytest.raises(ValueError, match="exhaustive"):
            SweepConfig(2, 4, "exhaustive")

    def test_sample_requires_seed(self):
        with pytest.raises(ValueError, match="seed"):
            SweepConfig(2, 3, "sample", samples=5)

    def test_sample_requires_samples(self):
        with pytest.raises(ValueError, match="sample count"):
            SweepConfig(2, 3, "sample", seed=1)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            SweepConfig(2, 3, "everything")


class TestExhaustive:
    def test_two_by_two_counts(self):
        result = run_sweep(SweepConfig(2, 2, "exhaustive"))
        assert result.orders_scanned == 24
        # oracle: filter all 24 rank tables through the library check
        expected = [
            list(ranks)
            for ranks in itertools.permutations(range(4))
            if is_uniform(LinearOrder(2, 2, ranks)).uniform
        ]
        assert result.uniform_orders == expected
        assert result.uniform_count == len(expected) == 4

    def test_two_cubed_uniform_set_is_lex(self):
        result = run_sweep(SweepConfig(2, 3, "exhaustive"))
        assert result.orders_scanned == 40320
        expected = {tuple(lex_order(BaseOrder(p), 3).ranks) for p in ((1, 2), (2, 1))}
        assert {tuple(o) for o in result.uniform_orders} == expected
        assert result.violations == []
        assert result.notable == []

    def test_jobs_do_not_change_output(self):
        serial = run_sweep(SweepConfig(2, 2, "exhaustive", jobs=1))
        parallel = run_sweep(SweepConfig(2, 2, "exhaustive", jobs=3))
        assert json.dumps(serial.to_json(), sort_keys=True) == json.dumps(
            parallel.to_json(), sort_keys=True
        )


class TestSample:
    def test_reproducible(self):
        first = run_sweep(SweepConfig(2, 3, "sample", seed=7, samples=50))
        second = run_sweep(SweepConfig(2, 3, "sample", seed=7, samples=50))
        assert first.to_json() == second.to_json()

    def test_jobs_do_not_change_output(self):
        serial = run_sweep(SweepConfig(2, 3, "sample", seed=3, samples=60, jobs=1))
        parallel = run_sweep(SweepConfig(2, 3, "sample", seed=3, samples=60, jobs=4))
        assert serial.to_json() == parallel.to_json()

    def test_seed_changes_output(self):
        a = run_sweep(SweepConfig(2, 3, "sample", seed=1, samples=50))
        b = run_sweep(SweepConfig(2, 3, "sample", seed=2, samples=50))
        assert a.to_json() != b.to_json()

    def test_generator_documented(self):
        doc = run_sweep(SweepConfig(2, 2, "sample", seed=1, samples=3)).to_json()
        assert "Mersenne Twister" in doc["generator"]
