import json
import logging
import os
import tempfile
import threading

from typing import Any, Dict, Optional
from datetime import datetime, timedelta
from pathlib import Path

logger = logging.getLogger('belyi-lab')


class TrialCache:
    """Thread-safe on-disk cache of completed trials, one JSON file per config hash"""

    def __init__(self,
                 cache_dir: str,
                 config_hash: str,
                 ttl_hours: int = 336):
        """Initialize the trial cache

        Args:
            cache_dir: Directory where to store cache files
            config_hash: Hash of the run configuration (used in cache file name)
            ttl_hours: Cache validity period in hours
        """
        self.cache_dir = Path(cache_dir)
        self.config_hash = config_hash
        self.ttl = timedelta(hours=ttl_hours)
        self.cache_file = self.cache_dir / f"trials_{config_hash[:16]}.json"
        self._lock = threading.Lock()
        self._entries: Optional[Dict[str, Any]] = None
        self._ensure_cache_dir()

    def _ensure_cache_dir(self) -> None:
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            logger.error(f"Failed to create cache directory {self.cache_dir}: {e}")
            raise

    def _is_cache_valid(self) -> bool:
        if not self.cache_file.exists():
            return False
        mtime = datetime.fromtimestamp(self.cache_file.stat().st_mtime)
        return datetime.now() - mtime <= self.ttl

    def _load(self) -> Dict[str, Any]:
        if self._entries is not None:
            return self._entries
        self._entries = {}
        if not self._is_cache_valid():
            logger.debug("Trial cache invalid or expired")
            return self._entries
        try:
            with open(self.cache_file, 'r', encoding='utf-8') as f:
                data = json.load(f)
            if data.get('config_hash') == self.config_hash:
                self._entries = data.get('trials', {})
        except json.JSONDecodeError as e:
            logger.error(f"Error decoding cache file: {e}")
        return self._entries

    def get(self, key: str) -> Optional[Dict[str, Any]]:
        """Cached trial record, or None"""
        with self._lock:
            return self._load().get(key)

    def set_many(self, records: Dict[str, Dict[str, Any]]) -> bool:
        """Adds trial records and rewrites the cache file atomically"""
        with self._lock:
            entries = self._load()
            entries.update(records)
            try:
                fd, tmp_path = tempfile.mkstemp(dir=self.cache_dir, suffix='.tmp')
                with os.fdopen(fd, 'w', encoding='utf-8') as f:
                    json.dump({"config_hash": self.config_hash, "trials": entries}, f)
                os.replace(tmp_path, self.cache_file)
                logger.debug(f"Cached {len(records)} trials ({len(entries)} total)")
                return True
            except OSError as e:
                logger.error(f"Error writing trial cache: {e}")
                return False

    def invalidate(self) -> None:
        """Invalidate the cache by deleting the cache file"""
        with self._lock:
            self._entries = None
            try:
                if self.cache_file.exists():
                    self.cache_file.unlink()
                    logger.debug(f"Trial cache {self.cache_file.name} invalidated")
            except OSError as e:
                logger.error(f"Error invalidating cache: {e}")
