import numpy as np
import pytest

from src.errors import BudgetExceededError, InvalidArgumentError
from src.ribbon.ribbon_graph import (
    RibbonGraph,
    count_circuits,
    enumerate_all_n1,
    faces,
    sample_configuration,
    surface_invariants,
)


class TestSurfaceInvariants:

    def test_theta_is_once_punctured_torus(self, theta):
        inv = surface_invariants(theta)
        assert (inv.faces, inv.genus, inv.cusps) == (1, 1, 1)
        assert inv.vol_S_units == 2
        assert inv.vol_SC_units == 0
        assert not inv.hyperbolic_compactification

    def test_planar_theta_is_thrice_punctured_sphere(self, theta_planar):
        inv = surface_invariants(theta_planar)
        assert (inv.faces, inv.genus, inv.cusps) == (3, 0, 3)
        assert inv.euler_characteristic == 2 - 2 * inv.genus
        assert inv.identities_hold()

    def test_dumbbell_faces(self, dumbbell):
        assert sorted(len(f) for f in faces(dumbbell)) == [1, 1, 4]
        assert surface_invariants(dumbbell).genus == 0

    def test_volume_in_units_of_pi(self, theta):
        inv = surface_invariants(theta)
        assert inv.vol_S == pytest.approx(2 * np.pi)
        assert inv.to_dict()["vol_S_over_pi"] == 2

    def test_identities_on_random_samples(self):
        for n in range(1, 65):
            for seed in range(16):
                inv = surface_invariants(sample_configuration(n, seed))
                assert inv.identities_hold(), (n, seed)
                assert inv.faces % 2 == n % 2

    def test_relabel_preserves_invariants(self):
        g = sample_configuration(6, 3)
        perm = np.random.default_rng(0).permutation(g.num_darts).tolist()
        assert surface_invariants(g.relabel(perm)) == surface_invariants(g)


class TestSampling:

    def test_deterministic_given_seed(self):
        assert sample_configuration(8, 42) == sample_configuration(8, 42)
        assert sample_configuration(8, 42) != sample_configuration(8, 43)

    def test_sample_is_valid_trivalent_graph(self):
        g = sample_configuration(10, 5)
        assert g.num_darts == 60
        assert all(len(cycle) == 3 for cycle in g.vertices())
        assert len(g.edges()) == 30

    @pytest.mark.parametrize("n", [0, -1])
    def test_rejects_non_positive_n(self, n):
        with pytest.raises(InvalidArgumentError):
            sample_configuration(n, 0)

    def test_accepts_large_seed(self):
        assert sample_configuration(2, 2 ** 70).n == 2


class TestValidation:

    def test_alpha_with_fixed_point_rejected(self):
        with pytest.raises(InvalidArgumentError):
            RibbonGraph(n=1, sigma=(1, 2, 0, 4, 5, 3), alpha=(0, 2, 1, 4, 3, 5))

    def test_sigma_with_short_cycle_rejected(self):
        with pytest.raises(InvalidArgumentError):
            RibbonGraph(n=1, sigma=(1, 0, 2, 4, 5, 3), alpha=(3, 4, 5, 0, 1, 2))

    def test_wrong_length_rejected(self):
        with pytest.raises(InvalidArgumentError):
            RibbonGraph(n=2, sigma=(1, 2, 0, 4, 5, 3), alpha=(3, 4, 5, 0, 1, 2))


class TestSerialization:

    def test_json_round_trip(self):
        g = sample_configuration(5, 1)
        assert RibbonGraph.from_json(g.to_json()) == g

    def test_reads_provenance_envelope(self, theta):
        envelope = {"provenance": {"tool": "belyi-lab"}, "data": theta.to_dict()}
        assert RibbonGraph.from_dict(envelope) == theta

    def test_missing_field(self):
        with pytest.raises(InvalidArgumentError):
            RibbonGraph.from_dict({"n": 1, "sigma": [1, 2, 0, 4, 5, 3]})


class TestUnderlyingGraph:

    def test_theta_adjacency(self, theta):
        assert theta.adjacency_matrix().toarray().tolist() == [[0, 3], [3, 0]]

    def test_loops_count_twice(self, dumbbell):
        assert dumbbell.adjacency_matrix().toarray().tolist() == [[2, 1], [1, 2]]

    def test_multigraph_keeps_loops_and_parallel_edges(self, dumbbell, theta):
        graph = dumbbell.to_multigraph()
        assert graph.number_of_edges() == 3
        assert sum(1 for u, v in graph.edges() if u == v) == 2
        assert theta.to_multigraph().number_of_edges() == 3


class TestCircuits:

    def test_theta(self, theta):
        assert count_circuits(theta, 3) == {1: 0, 2: 3, 3: 0}

    def test_dumbbell(self, dumbbell):
        assert count_circuits(dumbbell, 2) == {1: 2, 2: 0}

    def test_k33_four_and_six_cycles(self, k33):
        counts = count_circuits(k33, 6)
        assert counts == {1: 0, 2: 0, 3: 0, 4: 9, 5: 0, 6: 6}

    def test_budget(self, k33):
        with pytest.raises(BudgetExceededError) as info:
            count_circuits(k33, 6, max_walks=5)
        assert info.value.cap == 5

    def test_invalid_k_max(self, theta):
        with pytest.raises(InvalidArgumentError):
            count_circuits(theta, 0)


class TestExhaustiveN1:

    def test_sixty_configurations(self):
        assert len(enumerate_all_n1()) == 60

    def test_face_counts(self):
        counts = {len(faces(g)) for g in enumerate_all_n1()}
        assert counts == {1, 3}

    def test_faces_partition_darts(self):
        for g in enumerate_all_n1():
            darts = sorted(d for face in faces(g) for d in face)
            assert darts == list(range(6))
