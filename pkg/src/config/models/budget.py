from dataclasses import dataclass

from src.errors import ConfigError

# cap di default sui nodi visitati dalle enumerazioni di cammini
DEFAULT_MAX_WALKS = 2_000_000


@dataclass
class BudgetConfig:
    """Limiti di calcolo per le enumerazioni di cammini"""
    max_walks: int = DEFAULT_MAX_WALKS  # nodi massimi visitati per singola enumerazione

    def __post_init__(self):
        if not isinstance(self.max_walks, int) or self.max_walks <= 0:
            raise ConfigError(f"budget.max_walks must be a positive integer, got {self.max_walks!r}")
