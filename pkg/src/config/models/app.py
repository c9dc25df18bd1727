from dataclasses import dataclass, field
from typing import Optional
from src.config.models.experiment import ExperimentConfig
from src.config.models.budget import BudgetConfig
from src.config.models.spectral import SpectralConfig
from src.config.models.unimodular import MTPConfig
from src.config.models.cache import CacheConfig

@dataclass
class RunConfig:
    experiment: ExperimentConfig
    budget: BudgetConfig = field(default_factory=BudgetConfig)
    spectral: SpectralConfig = field(default_factory=SpectralConfig)
    mtp: MTPConfig = field(default_factory=MTPConfig)
    cache: CacheConfig = field(default_factory=CacheConfig)
    workers: int = 1
    debug: bool = False
    source_path: Optional[str] = None  # file da cui e' stata letta la config
