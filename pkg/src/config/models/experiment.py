from dataclasses import dataclass, field
from typing import List

from src.config.models.budget import BudgetConfig
from src.errors import ConfigError


@dataclass
class ExperimentConfig:
    """Parametri di un esperimento Monte Carlo sul modello di Brooks-Makover"""
    n_values: List[int]          # complessita' n (2n vertici), strettamente crescenti
    trials: int = 100            # campioni indipendenti per ogni n
    R: float = 4.0               # soglia di lunghezza per N_R
    k_max: int = 4               # lunghezza massima dei circuiti contati
    seed: int = 0                # master seed
    tree_radii: List[int] = field(default_factory=lambda: [1, 2])
    brooks_bound: bool = False   # calcola anche N_{2R} (costoso per R grande)
    progress: bool = False
    budget: BudgetConfig = field(default_factory=BudgetConfig)

    def __post_init__(self):
        if not self.n_values:
            raise ConfigError("experiment.n_values must not be empty")
        if any(not isinstance(n, int) or n < 1 for n in self.n_values):
            raise ConfigError(f"experiment.n_values must be positive integers, got {self.n_values}")
        if any(a >= b for a, b in zip(self.n_values, self.n_values[1:])):
            raise ConfigError(f"experiment.n_values must be strictly increasing, got {self.n_values}")
        if self.trials < 1:
            raise ConfigError(f"experiment.trials must be positive, got {self.trials}")
        if not self.R > 0:
            raise ConfigError(f"experiment.R must be positive, got {self.R}")
        if self.k_max < 1:
            raise ConfigError(f"experiment.k_max must be positive, got {self.k_max}")
        if any(r < 1 for r in self.tree_radii):
            raise ConfigError(f"experiment.tree_radii must be positive, got {self.tree_radii}")
