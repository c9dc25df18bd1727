from typing import Dict, Any, Optional, Iterable
from dataclasses import fields
from pathlib import Path
import json
import yaml
import os
from dotenv import load_dotenv
from src.config.models.app import RunConfig
from src.config.models.budget import BudgetConfig, DEFAULT_MAX_WALKS
from src.config.models.cache import CacheConfig
from src.config.models.experiment import ExperimentConfig
from src.config.models.spectral import SpectralConfig
from src.config.models.unimodular import MTPConfig, ShiftMeasureConfig, BlockSystemConfig
from src.errors import ConfigError

import logging

logger = logging.getLogger('belyi-lab')

# variabile d'ambiente per il cap di default sulle enumerazioni
BUDGET_ENV_VAR = 'BELYI_BUDGET_CAP'

TOP_LEVEL_KEYS = {'experiment', 'budget', 'spectral', 'mtp', 'cache', 'workers', 'debug'}


class ConfigLoader:

    @staticmethod
    def _resolve_refs(config: Any, context: Dict[str, Any]) -> Any:
        """Risolve i riferimenti interni nel dizionario di configurazione"""
        if isinstance(config, dict):
            return {k: ConfigLoader._resolve_refs(v, context) for k, v in config.items()}
        elif isinstance(config, list):
            return [ConfigLoader._resolve_refs(v, context) for v in config]
        elif isinstance(config, str) and config.startswith('${') and config.endswith('}'):
            var_name = config[2:-1]
            # prima cerca nelle variabili di contesto
            if var_name in context:
                return context[var_name]
            # poi nelle variabili d'ambiente
            value = os.getenv(var_name)
            if value is None:
                raise ConfigError(f"Unresolved reference ${{{var_name}}}")
            return yaml.safe_load(value)
        return config

    @staticmethod
    def _check_keys(section: str, data: Dict[str, Any], allowed: Iterable[str]) -> None:
        """Rifiuta chiavi sconosciute in una sezione"""
        if not isinstance(data, dict):
            raise ConfigError(f"Section '{section}' must be a mapping, got {type(data).__name__}")
        unknown = sorted(set(data) - set(allowed))
        if unknown:
            raise ConfigError(f"Unknown keys in section '{section}': {', '.join(unknown)}")

    @staticmethod
    def _dataclass_keys(cls) -> set:
        return {f.name for f in fields(cls)}

    @staticmethod
    def default_max_walks() -> int:
        """Cap di default: variabile d'ambiente se presente, altrimenti costante"""
        raw = os.getenv(BUDGET_ENV_VAR)
        if not raw:
            return DEFAULT_MAX_WALKS
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}")

    @staticmethod
    def _read(config_path: str) -> Dict[str, Any]:
        path = Path(config_path)
        with open(path, 'r', encoding='utf-8') as f:
            if path.suffix.lower() == '.json':
                return json.load(f)
            return yaml.safe_load(f) or {}

    @staticmethod
    def load_config(config_path: str, seed_override: Optional[int] = None) -> RunConfig:
        """Legge un file di esperimento (YAML, o JSON se il suffisso e' .json)

        Args:
            config_path: path del file di configurazione
            seed_override: seed passato da riga di comando, ha la precedenza su quello del file
        Returns:
            RunConfig validata
        """
        load_dotenv()
        config_data = ConfigLoader._read(config_path)
        config = ConfigLoader.from_dict(config_data, seed_override=seed_override)
        config.source_path = str(config_path)
        logger.debug(f"Loaded config from {config_path}")
        return config

    @staticmethod
    def from_dict(config_data: Dict[str, Any], seed_override: Optional[int] = None) -> RunConfig:
        """Costruisce e valida la RunConfig a partire da un dizionario gia' letto"""
        ConfigLoader._check_keys('<root>', config_data, TOP_LEVEL_KEYS)
        if 'experiment' not in config_data:
            raise ConfigError("Missing 'experiment' section")

        context = {'default_budget': ConfigLoader.default_max_walks()}
        config_data = ConfigLoader._resolve_refs(config_data, context)

        budget_data = config_data.get('budget', {}) or {}
        ConfigLoader._check_keys('budget', budget_data, ConfigLoader._dataclass_keys(BudgetConfig))
        budget_config = BudgetConfig(
            max_walks=budget_data.get('max_walks', context['default_budget'])
        )

        experiment_data = dict(config_data['experiment'])
        allowed = ConfigLoader._dataclass_keys(ExperimentConfig) - {'budget'}
        ConfigLoader._check_keys('experiment', experiment_data, allowed)
        if seed_override is not None:
            logger.info(f"Seed {experiment_data.get('seed')} overridden by command line: {seed_override}")
            experiment_data['seed'] = seed_override
        try:
            experiment_config = ExperimentConfig(budget=budget_config, **experiment_data)
        except TypeError as e:
            raise ConfigError(f"Invalid experiment section: {e}")

        spectral_data = config_data.get('spectral', {}) or {}
        ConfigLoader._check_keys('spectral', spectral_data, ConfigLoader._dataclass_keys(SpectralConfig))
        spectral_config = SpectralConfig(**spectral_data)

        cache_data = config_data.get('cache', {}) or {}
        ConfigLoader._check_keys('cache', cache_data, ConfigLoader._dataclass_keys(CacheConfig))
        cache_config = CacheConfig(
            enabled=cache_data.get('enabled', False),
            directory=cache_data.get('directory'),
            ttl_hours=cache_data.get('ttl_hours', 336)
        )
        if cache_config.enabled and not cache_config.directory:
            raise ConfigError("cache.directory is required when the cache is enabled")

        mtp_config = ConfigLoader._load_mtp_config(config_data)

        workers = config_data.get('workers', 1)
        if not isinstance(workers, int) or workers < 1:
            raise ConfigError(f"workers must be a positive integer, got {workers!r}")

        return RunConfig(
            experiment=experiment_config,
            budget=budget_config,
            spectral=spectral_config,
            mtp=mtp_config,
            cache=cache_config,
            workers=workers,
            debug=bool(config_data.get('debug', False))
        )

    @staticmethod
    def _load_mtp_config(config_data: dict) -> MTPConfig:
        """Carica la configurazione delle misure di shift e dei blocchi"""
        mtp_data = config_data.get('mtp', {}) or {}
        ConfigLoader._check_keys('mtp', mtp_data, ConfigLoader._dataclass_keys(MTPConfig))

        measures = []
        for i, measure_data in enumerate(mtp_data.get('shift_measures', []) or []):
            ConfigLoader._check_keys(f'mtp.shift_measures[{i}]', measure_data,
                                     ConfigLoader._dataclass_keys(ShiftMeasureConfig))
            if 'kind' not in measure_data:
                raise ConfigError(f"mtp.shift_measures[{i}] is missing 'kind'")
            measures.append(ShiftMeasureConfig(**measure_data))

        blocks_data = mtp_data.get('blocks', {}) or {}
        ConfigLoader._check_keys('mtp.blocks', blocks_data, ConfigLoader._dataclass_keys(BlockSystemConfig))

        return MTPConfig(
            shift_measures=measures,
            blocks=BlockSystemConfig(**blocks_data),
            window=mtp_data.get('window', 5),
            samples=mtp_data.get('samples', 20000),
            transport=mtp_data.get('transport', 'label-drop'),
        )
