from src.stats.seeding import TrialTask, trial_seed, trial_tasks, sequential_map
from src.stats.bs_stats import (
    BSTrial,
    SummaryRow,
    run_bs_experiment,
    run_bs_trial,
    summarize_bs,
    tree_ball_fraction,
    max_tree_radius,
)
from src.stats.poisson import (
    CircuitTrial,
    PoissonRow,
    circuit_poisson_test,
    poisson_limit_mean,
    means_stable,
    MeanStability,
    mean_stability,
    stability_table,
)
