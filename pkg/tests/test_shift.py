from fractions import Fraction

import numpy as np
import pytest

from src.config.models.unimodular import BlockSystemConfig, ShiftMeasureConfig
from src.errors import ConfigError, InvalidArgumentError
from src.factories.shift_measure import ShiftMeasureFactory
from src.unimodular.shift import (
    BernoulliShift,
    BlockSystem,
    MarkovShift,
    PeriodicShift,
    reweight,
    sample_pointed_sequence,
    sample_pointed_sequences,
    shift_mtp_check,
    window_graph,
    window_volume,
)
from src.unimodular.transports import get_transport


class TestMeasures:

    def test_bernoulli(self):
        nu = BernoulliShift(Fraction(1, 3))
        assert nu.marginal_one() == Fraction(1, 3)
        assert not nu.is_induced_from_lattice()
        assert BernoulliShift(1).is_induced_from_lattice()

    def test_markov_stationary_law(self):
        nu = MarkovShift([[0.75, 0.25], [0.5, 0.5]])
        assert nu.stationary == (Fraction(2, 3), Fraction(1, 3))
        assert nu.marginal_one() == Fraction(1, 3)
        assert not nu.is_induced_from_lattice()

    def test_alternating_markov_chain_is_periodic(self):
        nu = MarkovShift([[0, 1], [1, 0]])
        assert nu.marginal_one() == Fraction(1, 2)
        assert nu.is_induced_from_lattice()
        word = nu.sample_window(3, np.random.default_rng(0))
        assert all(a != b for a, b in zip(word, word[1:]))

    @pytest.mark.parametrize("matrix", [[[1, 0], [0, 1]], [[0.5, 0.6], [0.5, 0.5]], [[1, 0, 0], [0, 1, 0]]])
    def test_invalid_markov(self, matrix):
        with pytest.raises(InvalidArgumentError):
            MarkovShift(matrix)

    def test_periodic(self):
        nu = PeriodicShift("011")
        assert nu.marginal_one() == Fraction(2, 3)
        assert nu.is_induced_from_lattice()
        word = ''.join(str(b) for b in nu.sample_given_center(0, 2, np.random.default_rng(1)))
        assert word == "11011"

    @pytest.mark.parametrize("word", ["", "012"])
    def test_invalid_periodic(self, word):
        with pytest.raises(InvalidArgumentError):
            PeriodicShift(word)

    def test_markov_conditioned_window_keeps_center(self):
        nu = MarkovShift([[0.9, 0.1], [0.3, 0.7]])
        rng = np.random.default_rng(4)
        assert all(nu.sample_given_center(1, 4, rng)[4] == 1 for _ in range(20))


class TestReweighting:

    def test_bernoulli_half(self):
        assert reweight(BernoulliShift(0.5), BlockSystem(1, 2)).p_one == Fraction(2, 3)
        assert reweight(BernoulliShift(Fraction(1, 2)), BlockSystem(1, 3)).p_one == Fraction(3, 4)

    def test_equal_volumes_leave_law_unchanged(self):
        nu = PeriodicShift("0111")
        assert reweight(nu, BlockSystem(2, 2)).p_one == nu.marginal_one()

    def test_empirical_frequency(self):
        law = reweight(BernoulliShift(0.5), BlockSystem(1, 2))
        pointed = sample_pointed_sequences(law, 2, 20_000, seed=7)
        frequency = np.mean([p.word[2] for p in pointed])
        assert frequency == pytest.approx(2 / 3, abs=0.02)

    def test_deterministic_given_seed(self):
        law = reweight(MarkovShift([[0.9, 0.1], [0.3, 0.7]]), BlockSystem(1, 2))
        assert sample_pointed_sequence(law, 4, 11) == sample_pointed_sequence(law, 4, 11)
        assert len(sample_pointed_sequence(law, 4, 11).word) == 9

    def test_block_volumes(self):
        blocks = BlockSystem(1.0, 2.0)
        assert window_volume([1, 0, 1], blocks) == 5.0
        with pytest.raises(InvalidArgumentError):
            BlockSystem(0, 1)


class TestShiftMassTransport:

    def test_window_graph(self):
        graph, root = window_graph([1, 0, 1, 1, 0])
        assert root == 0
        assert sorted(graph.nodes) == [-2, -1, 0, 1, 2]
        assert graph.nodes[-2]['label'] == 1 and graph.nodes[2]['label'] == 0

    def test_label_drop_balances(self):
        report = shift_mtp_check(BernoulliShift(0.5), get_transport('label-drop'), 4, 4000, seed=3)
        assert report.mean_out == pytest.approx(0.25, abs=0.05)
        assert report.within_3_sigma

    @pytest.mark.parametrize("matrix, seed", [([[0.9, 0.1], [0.3, 0.7]], 5), ([[0.2, 0.8], [0.6, 0.4]], 11)])
    def test_label_drop_balances_markov(self, matrix, seed):
        chain = MarkovShift(matrix)
        report = shift_mtp_check(chain, get_transport('label-drop'), 4, 4000, seed=seed)
        stationary_one = float(chain.marginal_one())
        # massa uscente attesa: P(alpha_0 = 1, alpha_1 = 0)
        assert report.mean_out == pytest.approx(stationary_one * matrix[1][0], abs=0.03)
        assert report.within_3_sigma
        assert report.to_dict()["within_3_sigma"] is True

    def test_periodic_alternation(self):
        report = shift_mtp_check(PeriodicShift("10"), get_transport('label-drop'), 3, 200, seed=1)
        assert report.mean_out + report.mean_in == pytest.approx(1.0)

    def test_window_must_exceed_radius(self):
        with pytest.raises(InvalidArgumentError):
            shift_mtp_check(BernoulliShift(0.5), get_transport('degree-increase'), 2, 100, seed=0)


class TestFactory:

    def test_creates_each_kind(self):
        assert isinstance(ShiftMeasureFactory.create_measure(ShiftMeasureConfig(kind='bernoulli', p=0.2)),
                          BernoulliShift)
        assert isinstance(ShiftMeasureFactory.create_measure(
            ShiftMeasureConfig(kind='markov', matrix=[[0.5, 0.5], [0.5, 0.5]])), MarkovShift)
        assert isinstance(ShiftMeasureFactory.create_measure(ShiftMeasureConfig(kind='periodic', word='01')),
                          PeriodicShift)

    def test_missing_parameter(self):
        with pytest.raises(ConfigError):
            ShiftMeasureFactory.create_measure(ShiftMeasureConfig(kind='bernoulli'))

    def test_unknown_kind(self):
        with pytest.raises(ConfigError):
            ShiftMeasureFactory.create_measure(ShiftMeasureConfig(kind='gibbs', p=0.5))

    def test_blocks(self):
        assert ShiftMeasureFactory.create_blocks(BlockSystemConfig(vol0=1, vol1=4)).volume(1) == 4
