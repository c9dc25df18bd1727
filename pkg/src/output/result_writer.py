import hashlib
import io
import json
import logging
import os
import sys
import tempfile
from dataclasses import asdict, is_dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

logger = logging.getLogger('belyi-lab')

TOOL_NAME = "belyi-lab"
TOOL_VERSION = "0.1.0"

EXECUTION_ONLY_KEYS = ("source_path", "workers", "debug", "cache")


def config_hash(config: Any) -> str:
    """sha256 of the canonical JSON form of a configuration (dataclass or mapping)"""
    data = asdict(config) if is_dataclass(config) else dict(config)
    # campi che non cambiano i dati prodotti
    for key in EXECUTION_ONLY_KEYS:
        data.pop(key, None)
    canonical = json.dumps(data, sort_keys=True, default=str, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


class ResultWriter:
    """Writes CSV and JSON results preceded by a provenance header"""

    def __init__(self, config_hash: str, seed: Optional[int] = None, command: Optional[str] = None):
        self.provenance = {
            "tool": f"{TOOL_NAME} {TOOL_VERSION}",
            "config_hash": config_hash,
            "seed": seed,
            "command": command,
        }

    def _header_lines(self) -> List[str]:
        lines = [f"# tool: {self.provenance['tool']}", f"# config_hash: {self.provenance['config_hash']}"]
        if self.provenance['seed'] is not None:
            lines.append(f"# seed: {self.provenance['seed']}")
        if self.provenance['command']:
            lines.append(f"# command: {self.provenance['command']}")
        return lines

    def render_csv(self, records: List[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
        df = pd.DataFrame(records, columns=columns)
        buffer = io.StringIO()
        buffer.write('\n'.join(self._header_lines()) + '\n')
        df.to_csv(buffer, index=False, lineterminator='\n')
        return buffer.getvalue()

    def render_json(self, data: Any) -> str:
        return json.dumps({"provenance": self.provenance, "data": data}, indent=2, sort_keys=True) + '\n'

    def write_csv(self, records: List[Dict[str, Any]], out: Optional[str] = None,
                  columns: Optional[List[str]] = None) -> None:
        self._emit(self.render_csv(records, columns), out)

    def write_json(self, data: Any, out: Optional[str] = None) -> None:
        self._emit(self.render_json(data), out)

    @staticmethod
    def _emit(text: str, out: Optional[str]) -> None:
        if out is None:
            sys.stdout.write(text)
            return
        atomic_write(out, text)
        logger.info(f"Wrote {out}")


def atomic_write(path: str, text: str) -> None:
    """Writes a temporary file next to the target, then renames it over the target"""
    target = Path(path)
    directory = target.parent if str(target.parent) else Path('.')
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=f".{target.name}.", suffix='.tmp')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        os.replace(tmp_path, target)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def read_data_section(text: str) -> str:
    """Strips the provenance header: comment lines of a CSV, or the provenance object of a JSON file"""
    stripped = text.lstrip()
    if stripped.startswith('{'):
        return json.dumps(json.loads(text).get('data'), indent=2, sort_keys=True)
    return ''.join(line for line in text.splitlines(keepends=True) if not line.startswith('#'))
