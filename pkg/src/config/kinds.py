from enum import Enum

from src.errors import InvalidArgumentError


class ExperimentKind(Enum):
    """Experiment kinds accepted by the `experiment` subcommand.
    Ogni kind corrisponde a un runner in src/experiments."""

    BS = "bs"
    POISSON = "poisson"
    SPECTRAL = "spectral"
    MTP = "mtp"

    @classmethod
    def get_default(cls) -> "ExperimentKind":
        """Restituisce il kind di default"""
        return cls.BS

    @classmethod
    def is_supported(cls, kind: str) -> bool:
        """Verifica se il kind richiesto e' supportato"""
        return kind.lower() in [k.value for k in cls]

    @classmethod
    def supported_kinds(cls) -> list[str]:
        return [k.value for k in cls]

    @classmethod
    def from_string(cls, kind: str) -> "ExperimentKind":
        """Converte una stringa nel kind corrispondente

        Args:
            kind: nome del kind (bs, poisson, spectral, mtp)
        Returns:
            ExperimentKind corrispondente
        Raises:
            InvalidArgumentError se il kind non esiste
        """
        try:
            return next(k for k in cls if k.value == kind.lower())
        except StopIteration:
            raise InvalidArgumentError(
                f"Unknown experiment kind '{kind}'. "
                f"Supported kinds: {', '.join(cls.supported_kinds())}"
            )
