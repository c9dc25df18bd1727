from src.spectral.measure import (
    SpectralMeasure,
    WeakConvergenceReport,
    normalized_spectral_measure,
    heat_trace,
    weak_convergence_check,
    graph_spectral_measure,
)
from src.spectral.moments import (
    MomentSequence,
    adjacency_moment_sequence,
    tree_moment_sequence,
    kesten_mckay_density,
    tree_heat_trace,
)
from src.spectral.reference import (
    lambda_exceptional,
    middle_betti_limit,
    betti_ratio_genus,
    h2_plancherel_density,
    h2_spectral_mass,
    h2_plancherel_heat_trace,
    h2_heat_trace_simpson,
)
