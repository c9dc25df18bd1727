import pytest

from src.config.config_loader import ConfigLoader
from src.config.kinds import ExperimentKind
from src.factories.experiment import ExperimentFactory
from src.factories.service import ServiceFactory
from src.stats.bs_stats import BSTrial

BS_CONFIG = {
    "experiment": {"n_values": [4, 8], "trials": 3, "R": 2.0, "k_max": 2, "seed": 12, "tree_radii": [1]},
}


def _run(data, kind):
    return ServiceFactory.create_experiment_service(ConfigLoader.from_dict(data), kind).run()


def test_bs_summary_table():
    result = _run(BS_CONFIG, ExperimentKind.BS)
    assert result["success"]
    assert result["kind"] == "bs"
    assert [row["n"] for row in result["tables"]["summary"]] == [4, 8]
    assert result["payload"] is None
    assert result["seed"] == 12
    assert len(result["config_hash"]) == 64


def test_replay_is_identical():
    assert _run(BS_CONFIG, ExperimentKind.BS)["tables"] == _run(BS_CONFIG, ExperimentKind.BS)["tables"]


def test_process_pool_gives_same_tables():
    pooled = {**BS_CONFIG, "workers": 2}
    assert _run(pooled, ExperimentKind.BS)["tables"] == _run(BS_CONFIG, ExperimentKind.BS)["tables"]


def test_cache_resumes(tmp_path):
    cached = {**BS_CONFIG, "cache": {"enabled": True, "directory": str(tmp_path)}}
    first = _run(cached, ExperimentKind.BS)
    files = list(tmp_path.glob("trials_*.json"))
    assert len(files) == 1
    second = _run(cached, ExperimentKind.BS)
    assert first["tables"] == second["tables"]
    assert first["tables"] == _run(BS_CONFIG, ExperimentKind.BS)["tables"]


def test_poisson_table():
    result = _run({"experiment": {"n_values": [8], "trials": 4, "k_max": 3}}, ExperimentKind.POISSON)
    rows = result["tables"]["circuits"]
    assert [row["k"] for row in rows] == [1, 2, 3]
    assert rows[0]["poisson_mean"] == 1.0
    assert result["tables"]["stability"] == []


def test_poisson_stability_table():
    result = _run({"experiment": {"n_values": [8, 16], "trials": 4, "k_max": 2}}, ExperimentKind.POISSON)
    table = result["tables"]["stability"]
    assert [(row["n_small"], row["n_large"], row["k"]) for row in table] == [(8, 16, 1), (8, 16, 2)]
    assert all(row["stable"] == (row["within_rel_tol"] or row["within_sigma"]) for row in table)


def test_spectral_tables():
    data = {"experiment": {"n_values": [8, 16], "trials": 2}, "spectral": {"k_max": 4, "tol": 1.0}}
    result = _run(data, ExperimentKind.SPECTRAL)
    assert set(result["tables"]) == {"moments", "heat"}
    assert result["payload"]["weak_convergence_passed"] is True


def test_mtp_payload():
    data = {
        "experiment": {"n_values": [1], "seed": 3},
        "mtp": {
            "samples": 500,
            "window": 3,
            "blocks": {"vol0": 1.0, "vol1": 2.0},
            "shift_measures": [{"kind": "bernoulli", "p": 0.5}, {"kind": "periodic", "word": "01"}],
        },
    }
    result = _run(data, ExperimentKind.MTP)
    assert result["success"]
    measures = result["payload"]["measures"]
    assert [m["reweighted_marginal_one"] for m in measures] == ["2/3", "2/3"]
    assert [m["induced_from_lattice"] for m in measures] == [False, True]
    assert measures[1]["marginal_one"] == "1/2"


def test_domain_error_becomes_failed_result():
    data = {"experiment": {"n_values": [1]}, "mtp": {"transport": "teleport"}}
    result = _run(data, ExperimentKind.MTP)
    assert not result["success"]
    assert "teleport" in result["error"]


def test_trial_types():
    assert ExperimentFactory.trial_type(ExperimentKind.BS) is BSTrial
    assert ExperimentFactory.trial_type(ExperimentKind.MTP) is None


@pytest.mark.parametrize("kind", list(ExperimentKind))
def test_every_kind_has_a_runner(kind):
    experiment = ExperimentFactory.create_experiment(kind, ConfigLoader.from_dict(BS_CONFIG))
    assert experiment.kind == kind
