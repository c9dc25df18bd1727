import json
from pathlib import Path

import pytest
import yaml

from src.ribbon.catalog import dumbbell as make_dumbbell
from src.ribbon.catalog import k33 as make_k33
from src.ribbon.catalog import theta_graph

CONFIGS_DIR = Path(__file__).resolve().parent.parent / 'configs'


@pytest.fixture
def theta():
    """Once-punctured torus: one face"""
    return theta_graph(planar=False)


@pytest.fixture
def theta_planar():
    """Thrice-punctured sphere: three faces"""
    return theta_graph(planar=True)


@pytest.fixture
def dumbbell():
    return make_dumbbell()


@pytest.fixture
def k33():
    return make_k33()


@pytest.fixture
def write_yaml(tmp_path):
    def _write(data, name='config.yaml'):
        path = tmp_path / name
        path.write_text(yaml.safe_dump(data), encoding='utf-8')
        return str(path)
    return _write


@pytest.fixture
def write_json(tmp_path):
    def _write(data, name='input.json'):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding='utf-8')
        return str(path)
    return _write
