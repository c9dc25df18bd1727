import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional

import numpy as np

from src.config.models.experiment import ExperimentConfig
from src.config.models.spectral import SpectralConfig
from src.errors import BudgetExceededError
from src.ribbon.ribbon_graph import sample_configuration
from src.spectral.measure import (
    EIGENVALUE_DECIMALS,
    WeakConvergenceReport,
    laplacian_eigenvalues,
    normalized_spectral_measure,
    weak_convergence_check,
)
from src.spectral.moments import adjacency_moment_sequence, tree_heat_trace, tree_moment_sequence
from src.stats.seeding import MapFunction, TrialTask, sequential_map, trial_tasks

logger = logging.getLogger('belyi-lab')


@dataclass
class SpectralTrial:
    n: int
    trial: int
    moments: Optional[List[float]]  # momenti per vertice m_0..m_k
    eigenvalues: List[float] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"n": self.n, "trial": self.trial, "moments": self.moments, "eigenvalues": self.eigenvalues}

    @classmethod
    def from_dict(cls, data: dict) -> 'SpectralTrial':
        return cls(**data)


@dataclass
class SpectralSummary:
    moment_rows: List[Dict]
    report: WeakConvergenceReport
    n_values: List[int]

    def heat_rows(self) -> List[Dict]:
        rows = self.report.to_rows()
        for row in rows:
            row["n"] = self.n_values[row.pop("index")]
        return rows


def run_spectral_trial(exp_cfg: ExperimentConfig, spectral_cfg: SpectralConfig, task: TrialTask) -> SpectralTrial:
    g = sample_configuration(task.n, task.seed)
    try:
        moments = adjacency_moment_sequence(g, spectral_cfg.k_max, exp_cfg.budget.max_walks).per_vertex()
    except BudgetExceededError as e:
        logger.warning(f"n={task.n} trial={task.trial} censored: {e}")
        moments = None
    eigenvalues = np.round(laplacian_eigenvalues(g), EIGENVALUE_DECIMALS).tolist()
    return SpectralTrial(n=task.n, trial=task.trial, moments=moments, eigenvalues=eigenvalues)


def summarize_spectral(exp_cfg: ExperimentConfig,
                       spectral_cfg: SpectralConfig,
                       trials: List[SpectralTrial]) -> SpectralSummary:
    tree = tree_moment_sequence(spectral_cfg.d, spectral_cfg.k_max).per_vertex()
    moment_rows = []
    pooled = []
    for n in exp_cfg.n_values:
        group = sorted((t for t in trials if t.n == n), key=lambda t: t.trial)
        done = [t.moments for t in group if t.moments is not None]
        if done:
            means = np.mean(np.array(done), axis=0)
            for k in range(1, spectral_cfg.k_max + 1):
                moment_rows.append({
                    "n": n,
                    "k": k,
                    "mean_moment_per_vertex": float(means[k]),
                    "tree_moment": tree[k],
                    "deviation": abs(float(means[k]) - tree[k]),
                })
        # misura media sui trial: autovalori di tutti i campioni, normalizzata dal totale dei vertici
        values, counts = np.unique(np.concatenate([t.eigenvalues for t in group]), return_counts=True)
        pooled.append(normalized_spectral_measure(zip(values.tolist(), counts.tolist()), 2 * n * len(group)))

    report = weak_convergence_check(
        pooled,
        partial(tree_heat_trace, d=spectral_cfg.d),
        spectral_cfg.t_grid,
        spectral_cfg.tol,
    )
    return SpectralSummary(moment_rows=moment_rows, report=report, n_values=list(exp_cfg.n_values))


def run_spectral_experiment(exp_cfg: ExperimentConfig,
                            spectral_cfg: SpectralConfig,
                            map_fn: Optional[MapFunction] = None) -> SpectralSummary:
    """Moments and heat transforms of random cubic graphs against the regular tree"""
    map_fn = map_fn or sequential_map(exp_cfg.progress, desc="spectral")
    trials = map_fn(partial(run_spectral_trial, exp_cfg, spectral_cfg), trial_tasks(exp_cfg))
    return summarize_spectral(exp_cfg, spectral_cfg, trials)
