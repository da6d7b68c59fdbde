import itertools
import random

import pytest

from cubeorder import (
    AffineCube,
    BaseOrder,
    DimensionError,
    EdgeColoring,
    ParameterWord,
    Word,
    all_words,
    enumerate_affine_cubes,
    enumerate_subcubes,
    find_monochromatic_affine_cube,
    find_monochromatic_cube_via_subcube_coloring,
    find_monotone_affine_cube,
    gen_3ap_free,
    incomparable,
    incomparable_set,
    is_proper,
    lex_order,
    orders_equal,
    projection,
    sequence_to_coloring,
    sequence_to_order,
    subcube_image,
    substitute,
    verify_no_monotone_3ap,
)
from cubeorder.ramsey import (
    MONOTONE_CUBE_LEAST_NONWITNESS,
    check_sequence,
    least_nonwitness_permutation,
    parse_sequence_text,
)

# Backtracked two-coloring of the complete graph on 8 vertices with no
# monochromatic proper affine 2-cube (first-fit over edges in lex order).
K8_AVOIDER = EdgeColoring(
    8,
    2,
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 1, 2, 2, 1, 2, 2, 2),
)


def brute_force_cube_sets(m):
    """Independent characterization of proper affine 2-cube element sets:
    quadruples a < b < c < d with a + d = b + c."""
    return {
        (a, b, c, d)
        for a, b, c, d in itertools.combinations(range(1, m + 1), 4)
        if a + d == b + c
    }


class TestAffineCube:
    def test_proper_examples(self):
        assert is_proper(AffineCube(1, (1, 2)))
        assert AffineCube(1, (1, 2)).elements == (1, 2, 3, 4)
        assert not is_proper(AffineCube(0, (1, 1)))
        assert is_proper(AffineCube(5, (2,)))
        assert AffineCube(5, (2,)).elements == (5, 7)

    def test_positive_generators_required(self):
        with pytest.raises(ValueError):
            AffineCube(1, (0,))

    def test_json_round_trip(self):
        cube = AffineCube(3, (1, 4))
        assert AffineCube.from_json(cube.to_json()) == cube

    def test_enumeration_matches_brute_force(self):
        for m in (4, 6, 9):
            enumerated = {cube.elements for cube in enumerate_affine_cubes(m, 2)}
            assert enumerated == brute_force_cube_sets(m)

    def test_enumeration_order(self):
        cubes = list(enumerate_affine_cubes(6, 2))
        keys = [(max(c.elements), c.x0, c.xs) for c in cubes]
        assert keys == sorted(keys)


class TestProjection:
    def test_formula_values(self):
        assert projection(Word.parse("11", k=2)) == 4
        assert projection(Word.parse("22")) == 8
        assert projection(Word.parse("1", k=2)) == 1

    def test_rejects_other_symbols(self):
        with pytest.raises(ValueError):
            projection(Word.parse("13", k=3))

    def test_injective_into_range(self):
        for n in (1, 2, 3, 4):
            images = [projection(w) for w in all_words(2, n)]
            assert len(set(images)) == len(images)
            assert all(1 <= v <= 3**n for v in images)


class TestSubcubeImage:
    def test_double_wildcard(self):
        cube = subcube_image(ParameterWord.parse("aa", k=2))
        assert (cube.x0, cube.xs) == (4, (4,))

    def test_prefix_symbol(self):
        cube = subcube_image(ParameterWord.parse("1a", k=2))
        assert (cube.x0, cube.xs) == (4, (1,))

    def test_matches_brute_force_image(self):
        for n in range(1, 6):
            for d in range(1, min(n, 3) + 1):
                for p in enumerate_subcubes(n, 2, d):
                    cube = subcube_image(p)
                    assert cube.proper
                    image = sorted(projection(substitute(p, w)) for w in all_words(2, d))
                    assert list(cube.elements) == image

    def test_requires_binary_alphabet(self):
        with pytest.raises(ValueError):
            subcube_image(ParameterWord.parse("3a"))


class TestSequenceToOrder:
    def test_identity_sequence_is_lex(self):
        order = sequence_to_order(range(1, 10), 2)
        assert orders_equal(order, lex_order(BaseOrder.natural(2), 2))

    def test_reversed_sequence_is_mirror_lex(self):
        order = sequence_to_order(range(9, 0, -1), 2)
        assert orders_equal(order, lex_order(BaseOrder((2, 1)), 2))

    def test_random_sequence_matches_pairwise_oracle(self):
        values = random.Random(11).sample(range(-1000, 1000), 9)
        order = sequence_to_order(values, 2)
        words = list(all_words(2, 2))
        for u, v in itertools.combinations(words, 2):
            assert (order.rank_of(u) < order.rank_of(v)) == (
                values[projection(u) - 1] < values[projection(v) - 1]
            )

    def test_length_guard(self):
        with pytest.raises(DimensionError):
            sequence_to_order(range(8), 2)

    def test_distinctness_required(self):
        with pytest.raises(ValueError):
            check_sequence([1, 1])


class TestFindMonotoneCube:
    def test_sorted_input(self):
        cube, direction = find_monotone_affine_cube((1, 2, 3, 4), 2)
        assert (cube.x0, cube.xs, direction) == (1, (1, 2), "increasing")

    def test_pair_dimension(self):
        cube, direction = find_monotone_affine_cube((2, 1), 1)
        assert (cube.elements, direction) == ((1, 2), "decreasing")

    def test_absence_matches_brute_force(self):
        seq = MONOTONE_CUBE_LEAST_NONWITNESS[6]
        assert find_monotone_affine_cube(seq, 2) is None
        for a, b, c, d in brute_force_cube_sets(6):
            vals = (seq[a - 1], seq[b - 1], seq[c - 1], seq[d - 1])
            assert not (vals[0] < vals[1] < vals[2] < vals[3])
            assert not (vals[0] > vals[1] > vals[2] > vals[3])

    def test_regression_constants_reproduce(self):
        for m in (4, 5, 6, 7):
            assert least_nonwitness_permutation(m) == MONOTONE_CUBE_LEAST_NONWITNESS[m]


class TestThreeApFree:
    def test_doubling_steps(self):
        assert gen_3ap_free(0) == (0,)
        assert gen_3ap_free(1) == (0, 1)
        assert gen_3ap_free(2) == (0, 3, 1, 4)
        assert gen_3ap_free(3) == (0, 9, 3, 12, 1, 10, 4, 13)

    def test_lengths(self):
        for t in range(7):
            assert len(gen_3ap_free(t)) == 2**t

    def test_generated_sequences_verify(self):
        for t in range(7):
            assert verify_no_monotone_3ap(gen_3ap_free(t))

    def test_violation_reported(self):
        report = verify_no_monotone_3ap((1, 2, 3))
        assert not report
        assert report.progression == (1, 2, 3)
        assert report.direction == "increasing"

    def test_decreasing_violation(self):
        report = verify_no_monotone_3ap((5, 9, 4, 0, 3))
        assert not report
        assert report.progression == (2, 3, 4)
        assert report.direction == "decreasing"

    def test_small_clean_case(self):
        assert verify_no_monotone_3ap((0, 3, 1, 4))


class TestColoring:
    def test_sequence_to_coloring_cases(self):
        assert sequence_to_coloring((1, 2, 3)).colors == (1, 1, 1)
        assert sequence_to_coloring((3, 2, 1)).colors == (2, 2, 2)
        col = sequence_to_coloring((2, 1, 3))
        assert (col.color_of(1, 2), col.color_of(1, 3), col.color_of(2, 3)) == (2, 1, 1)

    def test_color_of_is_symmetric(self):
        col = sequence_to_coloring((2, 1, 3))
        assert col.color_of(3, 1) == col.color_of(1, 3)

    def test_json_round_trip(self):
        col = sequence_to_coloring((4, 1, 3, 2))
        back = EdgeColoring.from_json(col.to_json())
        assert back == col

    def test_missing_edge_rejected(self):
        with pytest.raises(ValueError):
            EdgeColoring.from_json({"m": 3, "r": 2, "edges": [[1, 2, 1]]})

    def test_bad_color_rejected(self):
        with pytest.raises(ValueError):
            EdgeColoring(3, 2, (1, 3, 1))


class TestFindMonochromaticCube:
    def test_single_color_k4(self):
        col = EdgeColoring(4, 2, (1,) * 6)
        cube, color = find_monochromatic_affine_cube(col, 1)
        assert (cube.x0, cube.xs, color) == (1, (1,), 1)

    def test_agrees_with_monotone_search_on_sorted_input(self):
        cube, color = find_monochromatic_affine_cube(sequence_to_coloring((1, 2, 3, 4)), 2)
        assert cube.elements == (1, 2, 3, 4)
        assert color == 1

    def test_k8_avoider_has_no_witness(self):
        assert find_monochromatic_affine_cube(K8_AVOIDER, 2) is None

    def test_k8_avoider_is_reproduced_by_first_fit(self):
        # rebuild the frozen specimen with the same greedy backtracking
        m = 8
        pairs = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
        pair_index = {p: i for i, p in enumerate(pairs)}
        cube_edges = [
            [pair_index[e] for e in itertools.combinations(elements, 2)]
            for elements in brute_force_cube_sets(m)
        ]
        by_edge = [[] for _ in pairs]
        for edges in cube_edges:
            for e in edges:
                by_edge[e].append(edges)
        colors = [0] * len(pairs)

        def violated(e):
            return any(
                colors[es[0]] and all(colors[x] == colors[es[0]] for x in es)
                for es in by_edge[e]
            )

        def fill(e):
            if e == len(pairs):
                return True
            for c in (1, 2):
                colors[e] = c
                if not violated(e) and fill(e + 1):
                    return True
            colors[e] = 0
            return False

        assert fill(0)
        assert tuple(colors) == K8_AVOIDER.colors

    def test_cross_oracle_existence_sample(self):
        rng = random.Random(99)
        for _ in range(40):
            m = rng.randint(1, 24)
            values = rng.sample(range(-(10**6), 10**6), m)
            monotone = find_monotone_affine_cube(values, 2)
            mono = find_monochromatic_affine_cube(sequence_to_coloring(values), 2)
            assert (monotone is None) == (mono is None)


class TestMonotoneReduction:
    def test_lex_subcube_pulls_back_to_monotone_subsequence(self):
        # a lexicographically ordered subcube of the sequence-induced
        # ordering projects to a monotone subsequence on a proper cube
        from cubeorder import find_ordered_subcube

        rng = random.Random(17)
        cases = [list(range(1, 10)), list(range(9, 0, -1))]
        cases += [rng.sample(range(1000), 27) for _ in range(5)]
        found = 0
        for values in cases:
            n = 2 if len(values) < 27 else 3
            order = sequence_to_order(values, n)
            witness = find_ordered_subcube(order, 2, "lex")
            if witness is None:
                continue
            found += 1
            cube = subcube_image(witness.pattern)
            assert cube.proper
            vals = [values[i - 1] for i in cube.elements]
            increasing = all(a < b for a, b in zip(vals, vals[1:]))
            decreasing = all(a > b for a, b in zip(vals, vals[1:]))
            assert increasing or decreasing
        assert found >= 2  # the sorted and reverse-sorted cases always hit


class TestIncomparableSet:
    def test_dimension_one(self):
        words = incomparable_set(1)
        assert [str(w) for w in words] == ["12", "21"]
        assert [projection(w) for w in words] == [5, 7]

    def test_dimension_two(self):
        words = incomparable_set(2)
        assert {str(w) for w in words} == {"1212", "1221", "2112", "2121"}
        for u, v in itertools.combinations(words, 2):
            assert incomparable(u, v)

    def test_incomparable_definition(self):
        assert incomparable(Word.parse("12"), Word.parse("21"))
        assert not incomparable(Word.parse("11", k=2), Word.parse("12"))

    def test_sizes_and_projection_cubes(self):
        # the projection image is the affine cube with base point at the
        # all-(1,2)-blocks word and generator 2 * 3^(2d-2i) per block
        for d in (1, 2, 3):
            words = incomparable_set(d)
            assert len(words) == 2**d
            points = sorted(projection(w) for w in words)
            assert len(set(points)) == 2**d
            x0 = points[0]
            generators = [2 * 3 ** (2 * d - 2 * i) for i in range(1, d + 1)]
            expected = {x0 + sum(subset) for subset in _subsets(generators)}
            assert set(points) == expected


def _subsets(values):
    values = list(values)
    for mask in range(2 ** len(values)):
        yield [values[i] for i in range(len(values)) if mask >> i & 1]


class TestSubcubeColoringRoute:
    def test_minimal_case(self):
        col = EdgeColoring(9, 2, (1,) * 36)
        cube, color = find_monochromatic_cube_via_subcube_coloring(col, 1)
        assert (cube.x0, cube.xs, color) == (5, (2,), 1)

    def test_too_small_graph_is_inconclusive(self):
        col = EdgeColoring(8, 2, (1,) * 28)
        assert find_monochromatic_cube_via_subcube_coloring(col, 1) is None

    def test_dimension_two_over_81_vertices(self):
        col = EdgeColoring(81, 2, (1,) * (81 * 40))
        found = find_monochromatic_cube_via_subcube_coloring(col, 2)
        assert found is not None
        cube, color = found
        assert color == 1 and cube.d == 2 and cube.proper
        assert find_monochromatic_affine_cube(col, 2) is not None

    def test_found_witnesses_agree_with_direct_search(self):
        rng = random.Random(5)
        for m in (9, 12, 27):
            values = rng.sample(range(1000), m)
            col = sequence_to_coloring(values)
            via = find_monochromatic_cube_via_subcube_coloring(col, 1)
            direct = find_monochromatic_affine_cube(col, 1)
            assert direct is not None
            if via is not None:
                cube, color = via
                assert all(
                    col.color_of(a, b) == color
                    for a, b in itertools.combinations(cube.elements, 2)
                )


class TestSequenceParsing:
    def test_newline_format(self):
        assert parse_sequence_text("1\n5\n-3\n") == (1, 5, -3)

    def test_json_format(self):
        assert parse_sequence_text("[1, 5, -3]") == (1, 5, -3)

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            parse_sequence_text("1\n1\n")
