from dataclasses import dataclass, field
from typing import List, Optional, Literal

from src.errors import ConfigError

# "kind" possibili di misura di shift
ShiftKind = Literal['bernoulli', 'markov', 'periodic']


@dataclass
class ShiftMeasureConfig:
    """Misura invariante per shift su {0,1}^Z, come scritta nel file di config"""
    kind: ShiftKind
    p: Optional[float] = None                   # bernoulli: P(alpha_i = 1)
    matrix: Optional[List[List[float]]] = None  # markov: matrice stocastica 2x2
    word: Optional[str] = None                  # periodic: parola su {0,1}
    name: Optional[str] = None

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        if self.kind == 'bernoulli':
            return f"bernoulli({self.p})"
        if self.kind == 'markov':
            return f"markov({self.matrix})"
        return f"periodic({self.word})"


@dataclass
class BlockSystemConfig:
    """Volumi dei due blocchi N_0, N_1"""
    vol0: float = 1.0
    vol1: float = 2.0

    def __post_init__(self):
        if not (self.vol0 > 0 and self.vol1 > 0):
            raise ConfigError(f"blocks volumes must be positive, got {self.vol0}, {self.vol1}")


@dataclass
class MTPConfig:
    """Configurazione dell'esperimento di trasporto di massa"""
    shift_measures: List[ShiftMeasureConfig] = field(default_factory=list)
    blocks: BlockSystemConfig = field(default_factory=BlockSystemConfig)
    window: int = 5
    samples: int = 20000
    transport: str = 'label-drop'

    def __post_init__(self):
        if self.window < 1:
            raise ConfigError(f"mtp.window must be positive, got {self.window}")
        if self.samples < 2:
            raise ConfigError(f"mtp.samples must be at least 2, got {self.samples}")
