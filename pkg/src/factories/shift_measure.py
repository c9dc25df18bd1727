import logging

from src.config.models.unimodular import BlockSystemConfig, ShiftMeasureConfig
from src.errors import ConfigError
from src.unimodular.shift import BernoulliShift, BlockSystem, MarkovShift, PeriodicShift, ShiftMeasure

logger = logging.getLogger('belyi-lab')


class ShiftMeasureFactory:
    """Factory per le misure di shift descritte nel file di configurazione"""

    @staticmethod
    def create_measure(config: ShiftMeasureConfig) -> ShiftMeasure:
        """Crea la misura di shift appropriata"""
        try:
            if config.kind == "bernoulli":
                if config.p is None:
                    raise ConfigError("bernoulli shift measure requires 'p'")
                return BernoulliShift(config.p)
            elif config.kind == "markov":
                if config.matrix is None:
                    raise ConfigError("markov shift measure requires 'matrix'")
                return MarkovShift(config.matrix)
            elif config.kind == "periodic":
                if config.word is None:
                    raise ConfigError("periodic shift measure requires 'word'")
                return PeriodicShift(str(config.word))
            else:
                raise ConfigError(f"Shift measure kind {config.kind} not supported")

        except Exception as e:
            logger.exception(f"Error creating shift measure {config.label}: {e}")
            raise

    @staticmethod
    def create_blocks(config: BlockSystemConfig) -> BlockSystem:
        return BlockSystem(vol0=config.vol0, vol1=config.vol1)
