import logging
from typing import Dict, Optional, Type

from src.config.kinds import ExperimentKind
from src.config.models.app import RunConfig
from src.experiments.experiment import Experiment
from src.experiments.runners import BSExperiment, MTPExperiment, PoissonExperiment, SpectralExperiment
from src.spectral.experiment import SpectralTrial
from src.stats.bs_stats import BSTrial
from src.stats.poisson import CircuitTrial
from src.stats.seeding import MapFunction

logger = logging.getLogger('belyi-lab')


class ExperimentFactory:
    """Factory per la creazione degli esperimenti"""

    EXPERIMENTS: Dict[ExperimentKind, Type[Experiment]] = {
        ExperimentKind.BS: BSExperiment,
        ExperimentKind.POISSON: PoissonExperiment,
        ExperimentKind.SPECTRAL: SpectralExperiment,
        ExperimentKind.MTP: MTPExperiment,
    }

    # tipo del risultato per trial, usato dalla cache (mtp non ha trial)
    TRIAL_TYPES: Dict[ExperimentKind, Type] = {
        ExperimentKind.BS: BSTrial,
        ExperimentKind.POISSON: CircuitTrial,
        ExperimentKind.SPECTRAL: SpectralTrial,
    }

    @staticmethod
    def create_experiment(kind: ExperimentKind, config: RunConfig,
                          map_fn: Optional[MapFunction] = None) -> Experiment:
        """Crea l'esperimento corrispondente al kind richiesto"""
        try:
            experiment_class = ExperimentFactory.EXPERIMENTS[kind]
        except KeyError:
            logger.exception(f"Experiment kind {kind} not supported")
            raise
        return experiment_class(config, map_fn)

    @staticmethod
    def trial_type(kind: ExperimentKind) -> Optional[Type]:
        return ExperimentFactory.TRIAL_TYPES.get(kind)
