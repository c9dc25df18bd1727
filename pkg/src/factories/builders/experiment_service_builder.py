import logging
from typing import Optional

from src.cache.trial_cache import TrialCache
from src.config.kinds import ExperimentKind
from src.config.models.app import RunConfig
from src.experiments.experiment import Experiment
from src.factories.builders.service_builder import ServiceBuilder
from src.factories.experiment import ExperimentFactory
from src.output.result_writer import config_hash
from src.services.experiment_service import ExperimentService
from src.services.trial_executor import TrialExecutor

logger = logging.getLogger('belyi-lab')


class ExperimentServiceBuilder(ServiceBuilder[ExperimentService]):
    """Builder per la creazione dell'ExperimentService"""

    def __init__(self, run_config: RunConfig, kind: ExperimentKind):
        self.config = run_config
        self.kind = kind
        self.config_hash = config_hash(run_config)
        self.cache: Optional[TrialCache] = None
        self.executor: Optional[TrialExecutor] = None
        self.experiment: Optional[Experiment] = None

    def build_cache(self) -> 'ExperimentServiceBuilder':
        """Costruisce la cache dei trial se abilitata"""
        if self.config.cache.enabled:
            logger.info(f"Trial cache enabled in {self.config.cache.directory}")
            self.cache = TrialCache(
                cache_dir=self.config.cache.directory,
                config_hash=self.config_hash,
                ttl_hours=self.config.cache.ttl_hours,
            )
        return self

    def build_executor(self) -> 'ExperimentServiceBuilder':
        """Costruisce l'esecutore dei trial (sequenziale o pool di processi)"""
        self.executor = TrialExecutor(
            workers=self.config.workers,
            progress=self.config.experiment.progress,
            cache=self.cache,
            trial_type=ExperimentFactory.trial_type(self.kind),
            prefix=self.kind.value,
        )
        return self

    def build_experiment(self) -> 'ExperimentServiceBuilder':
        if not self.executor:
            raise RuntimeError("Trial executor must be built before the experiment")
        self.experiment = ExperimentFactory.create_experiment(self.kind, self.config, self.executor)
        return self

    def build(self) -> ExperimentService:
        """Costruisce e restituisce l'ExperimentService"""
        if not all([self.executor, self.experiment]):
            raise RuntimeError("Not all required components have been built")
        return ExperimentService(experiment=self.experiment, config_hash=self.config_hash)
