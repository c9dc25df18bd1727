import logging

from src.experiments.experiment import Experiment

logger = logging.getLogger('belyi-lab')


class ExperimentService:
    def __init__(self, experiment: Experiment, config_hash: str):
        self.experiment = experiment
        self.config_hash = config_hash

    def run(self) -> dict:
        """Esegue l'esperimento e restituisce il risultato in forma di dizionario"""
        result = self.experiment.run()
        return {
            "success": result.success,
            "kind": result.kind.value,
            "tables": result.tables,
            "payload": result.payload,
            "error": result.error,
            "config_hash": self.config_hash,
            "seed": self.experiment.config.experiment.seed,
        }
