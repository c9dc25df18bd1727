import logging
from dataclasses import dataclass, field
from functools import partial
from itertools import groupby
from typing import Any, Dict, List, Optional

import networkx as nx
import numpy as np

from src.config.models.experiment import ExperimentConfig
from src.errors import BudgetExceededError, InvalidArgumentError
from src.holonomy.geodesics import count_NR, enumerate_geodesics
from src.ribbon.ribbon_graph import RibbonGraph, count_circuits, sample_configuration, surface_invariants
from src.stats.seeding import MapFunction, TrialTask, sequential_map, trial_tasks

logger = logging.getLogger('belyi-lab')


@dataclass
class BSTrial:
    """Statistics of a single sampled surface"""
    n: int
    trial: int
    censored: bool
    cusps: int
    genus: int
    hyperbolic: bool
    nr: Optional[int] = None
    systole: Optional[float] = None
    circuits: Dict[int, int] = field(default_factory=dict)
    tree_fractions: Dict[int, float] = field(default_factory=dict)
    brooks_ratio: Optional[float] = None
    error: Optional[str] = None

    @property
    def vol_S(self) -> float:
        return 2.0 * np.pi * self.n

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "trial": self.trial,
            "censored": self.censored,
            "cusps": self.cusps,
            "genus": self.genus,
            "hyperbolic": self.hyperbolic,
            "nr": self.nr,
            "systole": self.systole,
            "circuits": {str(k): v for k, v in self.circuits.items()},
            "tree_fractions": {str(r): v for r, v in self.tree_fractions.items()},
            "brooks_ratio": self.brooks_ratio,
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'BSTrial':
        values = dict(data)
        values['circuits'] = {int(k): v for k, v in data.get('circuits', {}).items()}
        values['tree_fractions'] = {int(r): v for r, v in data.get('tree_fractions', {}).items()}
        return cls(**values)


@dataclass
class SummaryRow:
    """Aggregated statistics for one n; censored trials are excluded from every mean"""
    n: int
    trials: int
    completed: int
    censored: int
    mean_nr_over_vol: Optional[float]
    var_nr_over_vol: Optional[float]
    mean_cusps_over_n: Optional[float]
    mean_genus: Optional[float]
    hyperbolic_fraction: Optional[float]
    mean_systole_indicator: Optional[float]
    circuit_means: Dict[int, float] = field(default_factory=dict)
    tree_fractions: Dict[int, float] = field(default_factory=dict)
    mean_brooks_ratio: Optional[float] = None

    def to_record(self) -> Dict[str, Any]:
        """Flat record for the CSV table"""
        record = {
            "n": self.n,
            "trials": self.trials,
            "completed": self.completed,
            "censored": self.censored,
            "mean_nr_over_vol": self.mean_nr_over_vol,
            "var_nr_over_vol": self.var_nr_over_vol,
            "mean_cusps_over_n": self.mean_cusps_over_n,
            "mean_genus": self.mean_genus,
            "hyperbolic_fraction": self.hyperbolic_fraction,
            "mean_systole_indicator": self.mean_systole_indicator,
        }
        for k, value in sorted(self.circuit_means.items()):
            record[f"circuits_k{k}"] = value
        for r, value in sorted(self.tree_fractions.items()):
            record[f"tree_fraction_r{r}"] = value
        record["mean_brooks_ratio"] = self.mean_brooks_ratio
        return record


def tree_ball_fraction(g: RibbonGraph, r: int) -> float:
    """Fraction of vertices whose radius-r ball (induced multigraph) is a tree"""
    if r < 1:
        raise InvalidArgumentError(f"radius must be positive, got {r}")
    return _tree_ball_fraction(g.to_multigraph(), r)


def _ball_is_tree(graph: nx.MultiGraph, v: int, r: int) -> bool:
    ball = nx.single_source_shortest_path_length(graph, v, cutoff=r)
    # loop e archi multipli contano: un albero ha esattamente |B| - 1 archi
    return graph.subgraph(ball).number_of_edges() == len(ball) - 1


def _tree_ball_fraction(graph: nx.MultiGraph, r: int) -> float:
    trees = sum(1 for v in graph.nodes if _ball_is_tree(graph, v, r))
    return trees / graph.number_of_nodes()


def max_tree_radius(g: RibbonGraph) -> int:
    """Largest r such that every r-ball is a tree (0 if some 1-ball already has a cycle)"""
    graph = g.to_multigraph()
    r = 0
    while r < g.num_vertices and _tree_ball_fraction(graph, r + 1) == 1.0:
        r += 1
    return r


def run_bs_trial(cfg: ExperimentConfig, task: TrialTask) -> BSTrial:
    """Samples one surface and computes its statistics; budget overruns censor the trial"""
    g = sample_configuration(task.n, task.seed)
    invariants = surface_invariants(g)
    graph = g.to_multigraph()
    trial = BSTrial(
        n=task.n,
        trial=task.trial,
        censored=False,
        cusps=invariants.cusps,
        genus=invariants.genus,
        hyperbolic=invariants.hyperbolic_compactification,
        tree_fractions={r: _tree_ball_fraction(graph, r) for r in cfg.tree_radii},
    )
    max_walks = cfg.budget.max_walks
    try:
        geodesics = enumerate_geodesics(g, cfg.R, max_walks)
        trial.nr = len(geodesics)
        trial.systole = min((geo.length for geo in geodesics), default=None)
        trial.circuits = count_circuits(g, cfg.k_max, max_walks)
        if cfg.brooks_bound:
            if invariants.hyperbolic_compactification:
                trial.brooks_ratio = 2.0 * count_NR(g, 2.0 * cfg.R, max_walks) / invariants.vol_S
            else:
                logger.debug(f"n={task.n} trial={task.trial}: genus {invariants.genus}, Brooks bound skipped")
    except BudgetExceededError as e:
        logger.warning(f"n={task.n} trial={task.trial} censored: {e}")
        trial.censored = True
        trial.error = str(e)
    return trial


def _mean(values: List[float]) -> Optional[float]:
    return float(np.mean(values)) if values else None


def _variance(values: List[float]) -> Optional[float]:
    return float(np.var(values, ddof=1)) if len(values) >= 2 else None


def summarize_bs(cfg: ExperimentConfig, trials: List[BSTrial]) -> List[SummaryRow]:
    """Reduces per-trial results to one SummaryRow per n, independent of input order"""
    ordered = sorted(trials, key=lambda t: (t.n, t.trial))
    rows = []
    for n, group in groupby(ordered, key=lambda t: t.n):
        group = list(group)
        done = [t for t in group if not t.censored]
        brooks = [t.brooks_ratio for t in done if t.brooks_ratio is not None]
        rows.append(SummaryRow(
            n=n,
            trials=len(group),
            completed=len(done),
            censored=len(group) - len(done),
            mean_nr_over_vol=_mean([t.nr / t.vol_S for t in done]),
            var_nr_over_vol=_variance([t.nr / t.vol_S for t in done]),
            mean_cusps_over_n=_mean([t.cusps / t.n for t in done]),
            mean_genus=_mean([t.genus for t in done]),
            hyperbolic_fraction=_mean([float(t.hyperbolic) for t in done]),
            mean_systole_indicator=_mean([float(t.systole is not None) for t in done]),
            circuit_means={k: _mean([t.circuits[k] for t in done]) for k in range(1, cfg.k_max + 1)} if done else {},
            tree_fractions={r: _mean([t.tree_fractions[r] for t in done]) for r in cfg.tree_radii} if done else {},
            mean_brooks_ratio=_mean(brooks) if cfg.brooks_bound else None,
        ))
    return rows


def run_bs_experiment(cfg: ExperimentConfig, map_fn: Optional[MapFunction] = None) -> List[SummaryRow]:
    """Monte Carlo test of Benjamini-Schramm convergence on the Brooks-Makover model

    Args:
        cfg: experiment parameters; seeds are derived from (cfg.seed, n, trial)
        map_fn: how trials are executed (sequential by default)
    Returns:
        List[SummaryRow]: one row per n, in increasing n
    """
    map_fn = map_fn or sequential_map(cfg.progress, desc="bs")
    tasks = trial_tasks(cfg)
    logger.info(f"Running BS experiment: {len(tasks)} trials over n={cfg.n_values}")
    trials = map_fn(partial(run_bs_trial, cfg), tasks)
    return summarize_bs(cfg, trials)
