import math
from itertools import product

import numpy as np
import pytest

from src.errors import BudgetExceededError, InvalidArgumentError
from src.holonomy.geodesics import (
    bound_NR_compactified,
    compactified_ratio_bound,
    count_NR,
    enumerate_closed_walk_classes,
    enumerate_geodesics,
    geodesic_rows,
    systole,
    trace_cutoff,
    walk_length_cutoff,
)
from src.holonomy.turn_word import (
    ConjugacyType,
    HolonomyMatrix,
    TurnWord,
    classify_matrix,
    word_to_matrix,
)
from src.ribbon.ribbon_graph import sample_configuration, surface_invariants

SYSTOLE_THETA = 2 * math.acosh(1.5)


def _random_words(count, max_length, seed=0):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        length = int(rng.integers(1, max_length + 1))
        yield TurnWord(''.join(rng.choice(['L', 'R'], size=length)))


class TestTurnWord:

    def test_generators_product(self):
        assert word_to_matrix(TurnWord("LR")).as_tuple() == (2, 1, 1, 1)
        assert word_to_matrix(TurnWord("LR")).trace == 3

    def test_determinant_one(self):
        for word in _random_words(10_000, 12):
            assert word_to_matrix(word).determinant == 1

    def test_trace_invariant_under_rotation_and_reversal(self):
        for word in _random_words(500, 12, seed=1):
            trace = word_to_matrix(word).trace
            rotated = TurnWord(word.letters[1:] + word.letters[:1])
            assert word_to_matrix(rotated).trace == trace
            assert word_to_matrix(word.reversed_swapped()).trace == trace

    @pytest.mark.parametrize("k", range(2, 13))
    def test_minimal_mixed_trace(self, k):
        traces = [
            word_to_matrix(TurnWord(''.join(letters))).trace
            for letters in product('LR', repeat=k)
            if len(set(letters)) == 2
        ]
        assert min(traces) == k + 1
        assert word_to_matrix(TurnWord('L' * (k - 1) + 'R')).trace == k + 1
        if k % 2 == 0:
            assert word_to_matrix(TurnWord('LR' * (k // 2))).trace >= k + 1

    def test_canonical_form(self):
        assert TurnWord("RL").canonical() == TurnWord("LR")
        assert TurnWord("RLL").canonical() == TurnWord("LLR")
        assert TurnWord("LRR").canonical() == TurnWord("LLR")

    def test_primitive_and_pure(self):
        assert not TurnWord("LRLR").is_primitive
        assert TurnWord("LLR").is_primitive
        assert TurnWord("LLL").is_pure

    @pytest.mark.parametrize("letters", ["", "LRX"])
    def test_invalid_words(self, letters):
        with pytest.raises(InvalidArgumentError):
            TurnWord(letters)

    def test_determinant_checked(self):
        with pytest.raises(InvalidArgumentError):
            HolonomyMatrix(1, 1, 1, 1)


class TestClassification:

    def test_hyperbolic(self):
        result = classify_matrix(word_to_matrix(TurnWord("LR")))
        assert result.kind == ConjugacyType.HYPERBOLIC
        assert result.length == pytest.approx(SYSTOLE_THETA)

    def test_parabolic(self):
        assert classify_matrix(word_to_matrix(TurnWord("LLL"))).kind == ConjugacyType.PARABOLIC

    def test_elliptic(self):
        assert classify_matrix(HolonomyMatrix(0, -1, 1, 0)).kind == ConjugacyType.ELLIPTIC


class TestCutoffs:

    def test_trace_cutoff(self):
        assert trace_cutoff(2.0) == pytest.approx(2 * math.cosh(1.0))

    def test_walk_length_cutoff(self):
        assert walk_length_cutoff(2.0) == 2
        assert walk_length_cutoff(2 * math.acosh(2.0)) == 3
        assert walk_length_cutoff(0.1) == 1

    def test_overflowing_R(self):
        with pytest.raises(InvalidArgumentError):
            trace_cutoff(1500.0)
        with pytest.raises(InvalidArgumentError):
            walk_length_cutoff(1500.0)


class TestGeodesics:

    def test_theta_systoles(self, theta):
        geodesics = enumerate_geodesics(theta, 2.0)
        assert len(geodesics) == 3
        assert {geo.word.letters for geo in geodesics} == {"LR"}
        assert all(geo.trace == 3 for geo in geodesics)
        assert all(geo.length == pytest.approx(SYSTOLE_THETA) for geo in geodesics)

    def test_planar_theta_has_no_short_geodesics(self, theta_planar):
        assert count_NR(theta_planar, 2.0) == 0

    def test_pure_turn_classes_are_the_cusps(self, theta, theta_planar):
        assert len(enumerate_closed_walk_classes(theta_planar, 2).parabolic) == 3
        assert len(enumerate_closed_walk_classes(theta, 6).parabolic) == surface_invariants(theta).cusps

    def test_cusp_classes_match_faces_on_samples(self):
        for seed in range(5):
            g = sample_configuration(3, seed)
            classes = enumerate_closed_walk_classes(g, 18, trace_cap=2.5)
            assert len(classes.parabolic) == surface_invariants(g).cusps

    def test_count_is_monotone_in_R(self):
        g = sample_configuration(8, 11)
        counts = [count_NR(g, R) for R in (1.0, 2.0, 3.0, 4.0)]
        assert counts == sorted(counts)

    def test_isomorphism_invariance(self):
        g = sample_configuration(4, 9)
        perm = np.random.default_rng(2).permutation(g.num_darts).tolist()
        assert count_NR(g.relabel(perm), 3.5) == count_NR(g, 3.5)

    def test_systole(self, theta, theta_planar):
        assert systole(theta, 2.0) == pytest.approx(SYSTOLE_THETA)
        assert systole(theta_planar, 2.0) is None

    def test_rows_sorted_by_length(self):
        rows = geodesic_rows(enumerate_geodesics(sample_configuration(6, 4), 3.5))
        lengths = [float(row["length"]) for row in rows]
        assert lengths == sorted(lengths)
        assert all(set(row) == {"word", "trace", "length"} for row in rows)

    def test_invalid_R(self, theta):
        with pytest.raises(InvalidArgumentError):
            enumerate_geodesics(theta, 0.0)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_geodesics(sample_configuration(32, 0), 6.0, max_walks=10)

    @pytest.mark.parametrize("R", [60.0, 1500.0, math.inf])
    def test_huge_R_exceeds_budget(self, theta, R):
        with pytest.raises(BudgetExceededError) as exc:
            count_NR(theta, R, max_walks=1000)
        assert exc.value.cap == 1000


class TestBrooksBound:

    def test_bound_is_count_at_twice_R(self):
        for seed in range(10):
            g = sample_configuration(10, seed)
            assert bound_NR_compactified(g, 1.5).bound == count_NR(g, 3.0)

    def test_ratio_needs_hyperbolic_compactification(self, theta):
        assert compactified_ratio_bound(theta, 1.0) is None

    def test_ratio_value(self):
        g = next(
            g for g in (sample_configuration(10, s) for s in range(100))
            if surface_invariants(g).hyperbolic_compactification
        )
        expected = 2.0 * count_NR(g, 3.0) / surface_invariants(g).vol_S
        assert compactified_ratio_bound(g, 1.5) == pytest.approx(expected)
