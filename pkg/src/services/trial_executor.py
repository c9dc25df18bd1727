import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Optional, Type

from tqdm import tqdm

from src.cache.trial_cache import TrialCache
from src.stats.seeding import TrialTask

logger = logging.getLogger('belyi-lab')


class TrialExecutor:
    """Runs per-trial tasks sequentially or in a process pool, reusing cached trials"""

    def __init__(self,
                 workers: int = 1,
                 progress: bool = False,
                 cache: Optional[TrialCache] = None,
                 trial_type: Optional[Type] = None,
                 prefix: str = ""):
        """
        Args:
            workers: numero di processi (1 = esecuzione nel processo corrente)
            progress: mostra una barra di avanzamento su stderr
            cache: cache su disco dei trial completati (opzionale)
            trial_type: classe del risultato, con to_dict/from_dict, necessaria per la cache
            prefix: prefisso delle chiavi di cache (tipo di esperimento)
        """
        self.workers = workers
        self.progress = progress
        self.cache = cache if trial_type is not None else None
        self.trial_type = trial_type
        self.prefix = prefix

    def _key(self, task: TrialTask) -> str:
        return f"{self.prefix}:{task.n}:{task.trial}"

    def __call__(self, fn: Callable[[TrialTask], Any], tasks: List[TrialTask]) -> List[Any]:
        results: List[Any] = [None] * len(tasks)
        pending = []
        for i, task in enumerate(tasks):
            cached = self.cache.get(self._key(task)) if self.cache else None
            if cached is not None:
                results[i] = self.trial_type.from_dict(cached)
            else:
                pending.append(i)
        if self.cache:
            logger.info(f"{len(tasks) - len(pending)} of {len(tasks)} trials found in cache")

        computed = self._run(fn, [tasks[i] for i in pending])
        for i, result in zip(pending, computed):
            results[i] = result

        if self.cache and pending:
            self.cache.set_many({self._key(tasks[i]): results[i].to_dict() for i in pending})
        return results

    def _run(self, fn: Callable[[TrialTask], Any], tasks: List[TrialTask]) -> List[Any]:
        if not tasks:
            return []
        bar = dict(total=len(tasks), desc=self.prefix or None, disable=not self.progress)
        if self.workers <= 1:
            return [fn(task) for task in tqdm(tasks, **bar)]
        logger.debug(f"Running {len(tasks)} trials on {self.workers} worker processes")
        chunksize = max(1, len(tasks) // (4 * self.workers))
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            return list(tqdm(pool.map(fn, tasks, chunksize=chunksize), **bar))
