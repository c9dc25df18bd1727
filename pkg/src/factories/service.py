import logging
from src.config.kinds import ExperimentKind
from src.config.models.app import RunConfig
from src.services.experiment_service import ExperimentService
from src.factories.builders.experiment_service_builder import ExperimentServiceBuilder

logger = logging.getLogger('belyi-lab')

class ServiceFactory:
    """Factory principale per la creazione dei servizi dell'applicazione"""

    @staticmethod
    def create_experiment_service(run_config: RunConfig, kind: ExperimentKind) -> ExperimentService:
        """Crea il servizio che esegue l'esperimento configurando cache ed esecutore"""
        try:
            return (ExperimentServiceBuilder(run_config, kind)
                    .build_cache()
                    .build_executor()
                    .build_experiment()
                    .build())

        except Exception:
            logger.exception("Failed to create experiment service")
            raise
