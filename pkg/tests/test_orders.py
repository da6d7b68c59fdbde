import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from cubeorder import (
    EQUAL,
    GREATER,
    LESS,
    BaseOrder,
    DimensionError,
    LinearOrder,
    ParameterWord,
    Word,
    alphabet_restriction,
    base_from_order,
    compare,
    compose,
    enumerate_subcubes,
    identity_parameter_word,
    lex_order,
    orders_equal,
    restrict,
    tree_order,
)
from conftest import all_base_orders, merge_then_lex_order


def random_order(k, n, seed):
    ranks = list(range(k**n))
    random.Random(seed).shuffle(ranks)
    return LinearOrder(k, n, tuple(ranks))


class TestCompare:
    def test_equal_word(self):
        order = lex_order(BaseOrder.natural(2), 2)
        w = Word.parse("12")
        assert compare(order, w, w) == EQUAL

    def test_lex_first_differing_index(self):
        order = lex_order(BaseOrder.natural(2), 2)
        assert compare(order, Word.parse("12"), Word.parse("21")) == LESS

    def test_rank_table_lookup(self):
        # 12 gets rank 0, 11 gets rank 3
        order = LinearOrder(2, 2, (3, 0, 1, 2))
        eleven = Word.parse("11", k=2)
        assert compare(order, Word.parse("12"), eleven) == LESS
        assert compare(order, eleven, Word.parse("12")) == GREATER

    def test_dimension_mismatch(self):
        order = lex_order(BaseOrder.natural(2), 2)
        with pytest.raises(DimensionError):
            compare(order, Word.parse("1"), Word.parse("11"))


class TestLexOrder:
    def test_natural_base(self):
        assert lex_order(BaseOrder.natural(2), 2).ranks == (0, 1, 2, 3)

    def test_reversed_base(self):
        assert lex_order(BaseOrder((2, 1)), 2).ranks == (3, 2, 1, 0)

    def test_single_slot_is_base(self):
        order = lex_order(BaseOrder.natural(3), 1)
        assert order.ranks == (0, 1, 2)

    def test_n_zero(self):
        assert lex_order(BaseOrder.natural(2), 0).ranks == (0,)


class TestRestrict:
    def test_lex_restriction_is_lex(self):
        # stability of the lexicographic ordering under every subcube
        for k, n in ((2, 4), (2, 5), (3, 3)):
            base = BaseOrder.natural(k)
            order = lex_order(base, n)
            for d in range(1, min(n, 3) + 1):
                for p in enumerate_subcubes(n, k, d):
                    assert orders_equal(restrict(order, p), lex_order(base, d))

    def test_identity_restriction(self):
        order = random_order(2, 3, seed=5)
        assert orders_equal(restrict(order, identity_parameter_word(2, 3)), order)

    def test_left_comb_restriction(self, left_comb):
        # restriction of the example [3]^3 ordering to 1** is itself on [3]^2
        order3 = merge_then_lex_order(3)
        restricted = restrict(order3, ParameterWord.parse("1ab", k=3))
        assert orders_equal(restricted, merge_then_lex_order(2))

    def test_non_canonical_rejected(self):
        order = lex_order(BaseOrder.natural(2), 2)
        with pytest.raises(ValueError):
            restrict(order, ParameterWord.parse("ba", k=2))

    def test_dimension_mismatch(self):
        order = lex_order(BaseOrder.natural(2), 2)
        with pytest.raises(DimensionError):
            restrict(order, ParameterWord.parse("abc", k=2))

    def test_restriction_chain_equals_composition(self):
        # restricting twice is restricting along the composed subcube
        cases = [(2, 4, 3, 2), (2, 5, 3, 2), (3, 3, 2, 1)]
        for k, n, d1, d2 in cases:
            order = random_order(k, n, seed=n * 10 + k)
            for p in itertools.islice(enumerate_subcubes(n, k, d1), 8):
                for q in itertools.islice(enumerate_subcubes(d1, k, d2), 8):
                    lhs = restrict(restrict(order, p), q)
                    rhs = restrict(order, compose(p, q))
                    assert orders_equal(lhs, rhs)

    @settings(max_examples=25)
    @given(st.integers(0, 10**6))
    def test_restriction_chain_random_orders(self, seed):
        order = random_order(2, 4, seed=seed)
        for p in itertools.islice(enumerate_subcubes(4, 2, 2), 5):
            for q in enumerate_subcubes(2, 2, 1):
                assert orders_equal(
                    restrict(restrict(order, p), q), restrict(order, compose(p, q))
                )


class TestOrdersEqual:
    def test_reflexive(self):
        order = random_order(2, 2, seed=1)
        assert orders_equal(order, order)

    def test_different_bases_differ(self):
        assert not orders_equal(
            lex_order(BaseOrder.natural(2), 1), lex_order(BaseOrder((2, 1)), 1)
        )

    def test_rank_values_compressed(self):
        order = random_order(2, 2, seed=2)
        doubled = LinearOrder.from_rank_values(2, 2, [2 * r for r in order.ranks])
        assert orders_equal(order, doubled)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            orders_equal(random_order(2, 2, 0), random_order(2, 3, 0))


class TestBaseFromOrder:
    def test_lex_base_recovery(self):
        for k in (2, 3):
            for base in all_base_orders(k):
                assert base_from_order(lex_order(base, 3)) == base

    def test_tree_order_base_recovery(self, left_comb):
        for base in all_base_orders(3):
            assert base_from_order(tree_order(left_comb, base, 2)) == base


class TestAlphabetRestriction:
    def test_two_letter_lex(self):
        order = lex_order(BaseOrder.natural(3), 2)
        two = alphabet_restriction(order, (1, 3))
        assert orders_equal(two, lex_order(BaseOrder.natural(2), 2))

    def test_bad_symbols(self):
        order = lex_order(BaseOrder.natural(3), 2)
        with pytest.raises(ValueError):
            alphabet_restriction(order, (3, 1))


class TestValidationAndJson:
    def test_rank_bijection_required(self):
        with pytest.raises(ValueError):
            LinearOrder(2, 2, (0, 1, 1, 3))
        with pytest.raises(DimensionError):
            LinearOrder(2, 2, (0, 1, 2))

    def test_from_rank_values_requires_distinct(self):
        with pytest.raises(ValueError):
            LinearOrder.from_rank_values(2, 1, [7, 7])

    def test_json_round_trip(self):
        order = random_order(3, 2, seed=9)
        assert LinearOrder.from_json(order.to_json()) == order

    def test_base_order_validation(self):
        with pytest.raises(ValueError):
            BaseOrder((1, 3))
