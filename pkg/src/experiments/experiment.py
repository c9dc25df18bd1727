import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.config.kinds import ExperimentKind
from src.config.models.app import RunConfig
from src.errors import BelyiLabError
from src.stats.seeding import MapFunction, sequential_map

logger = logging.getLogger('belyi-lab')


@dataclass
class ExperimentResult:
    """Risultato di un esperimento: tabelle (liste di record) e/o payload JSON"""
    success: bool
    kind: ExperimentKind
    tables: Dict[str, List[Dict[str, Any]]] = field(default_factory=dict)
    payload: Optional[Dict[str, Any]] = None
    error: Optional[str] = None


class Experiment(ABC):
    """Classe base per gli esperimenti"""

    kind: ExperimentKind

    def __init__(self, config: RunConfig, map_fn: Optional[MapFunction] = None):
        self.config = config
        self.map_fn = map_fn or sequential_map(config.experiment.progress, desc=self.kind.value)

    def run(self) -> ExperimentResult:
        """Esegue l'esperimento; gli errori di dominio diventano un risultato fallito"""
        logger.debug(f"Running {self.kind.value} experiment with seed {self.config.experiment.seed}")
        try:
            return self._run()
        except BelyiLabError as e:
            logger.error(f"{self.kind.value} experiment failed: {e}")
            return ExperimentResult(success=False, kind=self.kind, error=str(e))

    @abstractmethod
    def _run(self) -> ExperimentResult:
        pass
