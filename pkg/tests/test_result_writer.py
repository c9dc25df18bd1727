import json
import os

from src.config.config_loader import ConfigLoader
from src.output.result_writer import TOOL_VERSION, ResultWriter, atomic_write, config_hash, read_data_section

RECORDS = [{"n": 16, "mean": 0.5}, {"n": 32, "mean": 0.25}]


def test_csv_header_and_data():
    text = ResultWriter("abc123", seed=7, command="experiment bs").render_csv(RECORDS)
    lines = text.splitlines()
    assert lines[0] == f"# tool: belyi-lab {TOOL_VERSION}"
    assert lines[1] == "# config_hash: abc123"
    assert lines[2] == "# seed: 7"
    assert lines[3] == "# command: experiment bs"
    assert lines[4:] == ["n,mean", "16,0.5", "32,0.25"]


def test_csv_fixed_columns_on_empty_table():
    text = ResultWriter("abc").render_csv([], columns=["word", "trace", "length"])
    assert read_data_section(text).strip() == "word,trace,length"


def test_json_envelope():
    data = json.loads(ResultWriter("abc", seed=1).render_json({"genus": 2}))
    assert data["provenance"]["config_hash"] == "abc"
    assert data["provenance"]["seed"] == 1
    assert data["data"] == {"genus": 2}


def test_data_section_ignores_provenance():
    first = ResultWriter("hash-a", seed=1).render_csv(RECORDS)
    second = ResultWriter("hash-b", seed=2).render_csv(RECORDS)
    assert read_data_section(first) == read_data_section(second)
    assert json.loads(read_data_section(ResultWriter("x").render_json([1, 2]))) == [1, 2]


def test_write_to_file(tmp_path):
    out = tmp_path / "summary.csv"
    ResultWriter("abc").write_csv(RECORDS, str(out))
    assert out.read_text(encoding='utf-8').startswith("# tool:")
    assert os.listdir(tmp_path) == ["summary.csv"]


def test_write_to_stdout(capsys):
    ResultWriter("abc").write_json({"a": 1})
    assert json.loads(capsys.readouterr().out)["data"] == {"a": 1}


def test_atomic_write_replaces(tmp_path):
    target = tmp_path / "out.json"
    target.write_text("old", encoding='utf-8')
    atomic_write(str(target), "new")
    assert target.read_text(encoding='utf-8') == "new"
    assert len(os.listdir(tmp_path)) == 1


def test_config_hash(write_yaml):
    base = {"experiment": {"n_values": [8], "seed": 1}}
    first = ConfigLoader.from_dict(base)
    assert config_hash(first) == config_hash(ConfigLoader.from_dict(base))
    assert config_hash(first) != config_hash(ConfigLoader.from_dict(base, seed_override=2))
    assert config_hash(first) == config_hash(ConfigLoader.from_dict({**base, "workers": 4}))
    assert config_hash(first) == config_hash(ConfigLoader.load_config(write_yaml(base)))
    assert len(config_hash(first)) == 64
