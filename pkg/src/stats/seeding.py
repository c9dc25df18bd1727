import hashlib
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, TypeVar

from tqdm import tqdm

from src.config.models.experiment import ExperimentConfig

T = TypeVar('T')
R = TypeVar('R')

# funzione che applica un task a una lista di input (map sequenziale o pool di processi)
MapFunction = Callable[[Callable[[T], R], List[T]], List[R]]


@dataclass(frozen=True)
class TrialTask:
    n: int
    trial: int
    seed: int


def trial_seed(master_seed: int, n: int, trial: int) -> int:
    """Stable 64-bit seed of one trial, independent of execution order"""
    digest = hashlib.blake2b(f"{master_seed}:{n}:{trial}".encode('utf-8'), digest_size=8).digest()
    return int.from_bytes(digest, 'big')


def trial_tasks(cfg: ExperimentConfig) -> List[TrialTask]:
    """All (n, trial) pairs of the experiment, sorted by (n, trial)"""
    return [
        TrialTask(n=n, trial=t, seed=trial_seed(cfg.seed, n, t))
        for n in cfg.n_values
        for t in range(cfg.trials)
    ]


def sequential_map(progress: bool = False, desc: Optional[str] = None) -> MapFunction:
    """Map in the current process, with an optional progress bar"""

    def _map(fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        items = list(items)
        return [fn(item) for item in tqdm(items, desc=desc, disable=not progress)]

    return _map
