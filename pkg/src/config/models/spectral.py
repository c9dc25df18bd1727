from dataclasses import dataclass, field
from typing import List

from src.errors import ConfigError


@dataclass
class SpectralConfig:
    """Parametri dell'esperimento spettrale (momenti e traccia del calore)"""
    d: int = 3                    # grado dell'albero limite
    k_max: int = 8                # ordine massimo dei momenti
    t_grid: List[float] = field(default_factory=lambda: [0.5, 1.0, 2.0])
    tol: float = 0.05

    def __post_init__(self):
        if self.d < 3:
            raise ConfigError(f"spectral.d must be >= 3, got {self.d}")
        if self.k_max < 1:
            raise ConfigError(f"spectral.k_max must be positive, got {self.k_max}")
        if not self.t_grid or any(t <= 0 for t in self.t_grid):
            raise ConfigError(f"spectral.t_grid must be a nonempty list of positive reals, got {self.t_grid}")
        if self.tol <= 0:
            raise ConfigError(f"spectral.tol must be positive, got {self.tol}")
