import math
import logging
from dataclasses import dataclass, asdict
from functools import partial
from typing import Dict, List, Optional

import numpy as np

from src.config.models.experiment import ExperimentConfig
from src.errors import BudgetExceededError, InvalidArgumentError
from src.ribbon.ribbon_graph import count_circuits, sample_configuration
from src.stats.seeding import MapFunction, TrialTask, sequential_map, trial_tasks

logger = logging.getLogger('belyi-lab')


@dataclass
class CircuitTrial:
    n: int
    trial: int
    counts: Optional[Dict[int, int]]  # None se il trial e' censurato

    def to_dict(self) -> dict:
        counts = None if self.counts is None else {str(k): v for k, v in self.counts.items()}
        return {"n": self.n, "trial": self.trial, "counts": counts}

    @classmethod
    def from_dict(cls, data: dict) -> 'CircuitTrial':
        counts = data.get('counts')
        return cls(n=data['n'], trial=data['trial'],
                   counts=None if counts is None else {int(k): v for k, v in counts.items()})


@dataclass
class PoissonRow:
    """Circuit-count statistics of length k at size n"""
    n: int
    k: int
    completed: int
    censored: int
    mean: Optional[float]
    variance: Optional[float]
    dispersion: Optional[float]
    poisson_mean: float

    @property
    def standard_error(self) -> Optional[float]:
        if self.variance is None:
            return None
        return math.sqrt(self.variance / self.completed)

    def to_record(self) -> dict:
        return asdict(self)


def poisson_limit_mean(k: int, degree: int = 3) -> float:
    """Asymptotic mean (d-1)^k / (2k) of the number of k-circuits in the d-regular configuration model"""
    return (degree - 1) ** k / (2 * k)


def run_circuit_trial(k_max: int, max_walks: int, task: TrialTask) -> CircuitTrial:
    g = sample_configuration(task.n, task.seed)
    try:
        return CircuitTrial(n=task.n, trial=task.trial, counts=count_circuits(g, k_max, max_walks))
    except BudgetExceededError as e:
        logger.warning(f"n={task.n} trial={task.trial} censored: {e}")
        return CircuitTrial(n=task.n, trial=task.trial, counts=None)


def summarize_circuits(cfg: ExperimentConfig, trials: List[CircuitTrial]) -> List[PoissonRow]:
    rows = []
    for n in cfg.n_values:
        group = sorted((t for t in trials if t.n == n), key=lambda t: t.trial)
        done = [t.counts for t in group if t.counts is not None]
        for k in range(1, cfg.k_max + 1):
            values = np.array([c[k] for c in done], dtype=float)
            mean = float(values.mean()) if len(values) else None
            variance = float(values.var(ddof=1)) if len(values) >= 2 else None
            dispersion = variance / mean if variance is not None and mean else None
            rows.append(PoissonRow(
                n=n,
                k=k,
                completed=len(done),
                censored=len(group) - len(done),
                mean=mean,
                variance=variance,
                dispersion=dispersion,
                poisson_mean=poisson_limit_mean(k),
            ))
    return rows


def circuit_poisson_test(cfg: ExperimentConfig, map_fn: Optional[MapFunction] = None) -> List[PoissonRow]:
    """Empirical mean, variance and dispersion index of the k-circuit counts for every (n, k)"""
    map_fn = map_fn or sequential_map(cfg.progress, desc="poisson")
    tasks = trial_tasks(cfg)
    trials = map_fn(partial(run_circuit_trial, cfg.k_max, cfg.budget.max_walks), tasks)
    return summarize_circuits(cfg, trials)


MEAN_REL_TOL = 0.10
MEAN_N_SIGMA = 4.0


@dataclass
class MeanStability:
    """Agreement of the k-circuit means at two sizes, with both verdicts kept apart"""
    k: int
    n_small: int
    n_large: int
    relative_gap: Optional[float]
    within_rel_tol: bool   # |gap| <= rel_tol * mean at the larger size
    within_sigma: bool     # |gap| <= n_sigma standard errors of the difference

    @property
    def stable(self) -> bool:
        return self.within_rel_tol or self.within_sigma

    def to_record(self) -> dict:
        return {**asdict(self), "stable": self.stable}


def mean_stability(small: PoissonRow, large: PoissonRow,
                   rel_tol: float = MEAN_REL_TOL, n_sigma: float = MEAN_N_SIGMA) -> MeanStability:
    if small.k != large.k:
        raise InvalidArgumentError(f"rows of different circuit lengths: {small.k} and {large.k}")
    result = MeanStability(k=large.k, n_small=small.n, n_large=large.n,
                           relative_gap=None, within_rel_tol=False, within_sigma=False)
    if small.mean is None or large.mean is None:
        return result
    gap = abs(small.mean - large.mean)
    if large.mean:
        result.relative_gap = gap / large.mean
    result.within_rel_tol = gap <= rel_tol * large.mean
    if small.standard_error is not None and large.standard_error is not None:
        result.within_sigma = gap <= n_sigma * math.hypot(small.standard_error, large.standard_error)
    return result


def means_stable(small: PoissonRow, large: PoissonRow,
                 rel_tol: float = MEAN_REL_TOL, n_sigma: float = MEAN_N_SIGMA) -> bool:
    """Means at two sizes agree within rel_tol of the larger one or within n_sigma standard errors"""
    return mean_stability(small, large, rel_tol, n_sigma).stable


def stability_table(rows: List[PoissonRow]) -> List[MeanStability]:
    """Mean stability of every k between consecutive sizes"""
    by_size = {(row.n, row.k): row for row in rows}
    sizes = sorted({row.n for row in rows})
    lengths = sorted({row.k for row in rows})
    return [mean_stability(by_size[(small, k)], by_size[(large, k)])
            for small, large in zip(sizes, sizes[1:]) for k in lengths]
