import io
import json

import pytest

import jsdmix
from jsdmix.data import SCENARIO_FILES, data_path
from jsdmix.experiments import csv_text, dump_scenario, emit_csv, emit_json, epsilon_scan, line_eval, load_scenario
from jsdmix.models import EpsilonFamily
from jsdmix.sampling import random_scenario
from jsdmix.util import make_rng


def test_bundled_reference():
    s = load_scenario(data_path("reference_scenario.json"))
    assert s == EpsilonFamily(epsilon=0.3).scenario(0.3, 0.7)


def test_bundled_disjoint():
    s = load_scenario(data_path("reference_disjoint_scenario.json"))
    assert s == EpsilonFamily(epsilon=0.3).disjoint_scenario(0.3, 0.7)


def test_bundled_listing():
    for name in SCENARIO_FILES:
        assert data_path(name).is_file()
    with pytest.raises(FileNotFoundError):
        data_path("missing_scenario.json")


def test_roundtrip_random(tmp_path):
    rng = make_rng(41)
    for i in range(20):
        s = random_scenario(rng)
        path = tmp_path / f"s{i}.json"
        dump_scenario(s, path)
        assert load_scenario(path) == s


def _write(tmp_path, data, name="scenario.json"):
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data, indent=2))
    return path


def test_reject_mass_sum(tmp_path):
    data = EpsilonFamily().scenario(0.3, 0.7).to_flat()
    data["q"] = [0.5, 0.3, 0.025, 0.025, 0.025, 0.025]
    path = _write(tmp_path, data)
    with pytest.raises(jsdmix.ScenarioFormatError, match="sum to one") as e:
        load_scenario(path)
    assert e.value.path == str(path)
    assert e.value.line == [n for n, ln in enumerate(path.read_text().splitlines(), 1) if '"q"' in ln][0]


def test_reject_length(tmp_path):
    data = EpsilonFamily().scenario(0.3, 0.7).to_flat()
    data["p_tilde_1"] = [1.0, 0.0]
    with pytest.raises(jsdmix.ScenarioFormatError, match="p_tilde_1"):
        load_scenario(_write(tmp_path, data))


def test_reject_proportion(tmp_path):
    data = EpsilonFamily().scenario(0.3, 0.7).to_flat()
    data["lambda_2"] = 1.7
    with pytest.raises(jsdmix.ScenarioFormatError, match="lambda_2"):
        load_scenario(_write(tmp_path, data))


def test_reject_malformed_json(tmp_path):
    path = _write(tmp_path, '{\n  "alphabet": [1, 2],\n  "q": [0.5, 0.5,\n}\n')
    with pytest.raises(jsdmix.ScenarioFormatError, match="malformed JSON") as e:
        load_scenario(path)
    assert e.value.line == 4


def test_reject_non_object(tmp_path):
    with pytest.raises(jsdmix.ScenarioFormatError, match="JSON object"):
        load_scenario(_write(tmp_path, "[1, 2, 3]"))


def test_reject_missing_file(tmp_path):
    with pytest.raises(jsdmix.ScenarioFormatError, match="cannot read"):
        load_scenario(tmp_path / "nope.json")


def test_csv_layout():
    r = line_eval(EpsilonFamily(), "lambda_1", 0.5, resolution=2)
    text = csv_text(r)
    lines = text.split("\n")
    assert lines[0] == "lambda_1,lambda_2,sjsd_nats"
    assert lines[1].startswith("0.5,0,")
    assert text.endswith("\n") and "\r" not in text
    assert len(lines) == 5

    # 17 significant digits recover every double
    for line, (_, value) in zip(lines[1:], r.records()):
        assert float(line.split(",")[-1]) == value


def test_csv_epsilon_header():
    assert csv_text(epsilon_scan(0.3, 0.7, resolution=2)).startswith("epsilon,sjsd_nats\n")


def test_emit_csv_targets(tmp_path):
    r = epsilon_scan(0.3, 0.7, resolution=4)
    stream = io.StringIO()
    emit_csv(r, stream=stream)
    emit_csv(r, "-", stream=stream)
    emit_csv(r, tmp_path / "scan.csv")
    assert stream.getvalue() == 2 * csv_text(r)
    assert (tmp_path / "scan.csv").read_text() == csv_text(r)


def test_emit_json(tmp_path):
    r = epsilon_scan(0.3, 0.7, resolution=4)
    stream = io.StringIO()
    emit_json(r, stream=stream)
    data = json.loads(stream.getvalue())
    assert data["axis_names"] == ["epsilon"]
    assert data["metadata"]["fixed"] == {"lambda_1": 0.3, "lambda_2": 0.7}
    assert len(data["values"]) == 5

    emit_json({"inf": float("inf")}, tmp_path / "x.json")
    assert json.loads((tmp_path / "x.json").read_text()) == {"inf": "inf"}
