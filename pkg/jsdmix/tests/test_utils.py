import json
import math
import os

import numpy as np
import pytest

import jsdmix
from jsdmix.models import Alphabet, Pmf


def test_which_import_t():
    ans = jsdmix.util.which_import('pint')
    assert ans.split(os.path.sep)[-1] == '__init__.py'


def test_which_import_t_bool():
    ans = jsdmix.util.which_import('pint', return_bool=True)
    assert ans is True


def test_which_import_f():
    ans = jsdmix.util.which_import('evilpint')
    assert ans is None


def test_which_import_f_bool():
    ans = jsdmix.util.which_import('evilpint', return_bool=True)
    assert ans is False


def test_which_import_f_raise():
    with pytest.raises(ModuleNotFoundError) as e:
        jsdmix.util.which_import('evilpint', raise_error=True)

    assert str(e.value).endswith("Python module 'evilpint' not found in envvar PYTHONPATH.")


def test_which_import_f_raisemsg():
    with pytest.raises(ModuleNotFoundError) as e:
        jsdmix.util.which_import('evilpint', raise_error=True, raise_msg='Install `evilpint`.')

    assert str(e.value).endswith("Python module 'evilpint' not found in envvar PYTHONPATH. Install `evilpint`.")


@pytest.mark.parametrize("inp,expected", [
    (0.1, "0.10000000000000001"),
    (0.5, "0.5"),
    (0.0, "0"),
    (1, "1"),
    (math.log(2), "0.69314718055994529"),
    (np.float64(0.7), "0.69999999999999996"),
])  # yapf: disable
def test_format_float(inp, expected):
    assert jsdmix.util.format_float(inp) == expected
    assert float(jsdmix.util.format_float(inp)) == float(inp)


def test_json_dumps_models_and_arrays():
    r = Pmf(alphabet=Alphabet.range(2), mass=[0.25, 0.75])
    data = json.loads(jsdmix.util.json_dumps({"r": r, "a": np.arange(3), "x": np.float64(0.5), "k": math.inf}))
    assert data == {"r": {"alphabet": {"labels": [1, 2]}, "mass": [0.25, 0.75]}, "a": [0, 1, 2], "x": 0.5, "k": "inf"}


def test_serialize_roundtrip():
    blob = jsdmix.util.serialize({"a": [1, 2.5, "b"]}, "json")
    assert jsdmix.util.deserialize(blob, "JSON") == {"a": [1, 2.5, "b"]}


@pytest.mark.parametrize("fn,arg", [
    (jsdmix.util.serialize, {}),
    (jsdmix.util.deserialize, "{}"),
])
def test_serialize_unknown_encoding(fn, arg):
    with pytest.raises(KeyError, match="not understood"):
        fn(arg, "msgpack")


def test_make_rng_reproducible():
    a = jsdmix.util.make_rng(7).random(5)
    b = jsdmix.util.make_rng(7).random(5)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, jsdmix.util.make_rng(8).random(5))
    assert type(jsdmix.util.make_rng(7).bit_generator).__name__ == jsdmix.util.GENERATOR_NAME


def test_spawn_rngs_independent_of_count():
    few = [g.random(3) for g in jsdmix.util.spawn_rngs(11, 2)]
    many = [g.random(3) for g in jsdmix.util.spawn_rngs(11, 5)]
    assert np.array_equal(few[0], many[0]) and np.array_equal(few[1], many[1])
    assert not np.array_equal(many[0], many[1])


def test_provenance_stamp():
    stamp = jsdmix.util.provenance_stamp("sweep_grid")
    assert stamp == {"creator": "JSDMix", "version": jsdmix.__version__, "routine": "sweep_grid"}


@pytest.mark.parametrize("key,expected", [
    ("version", jsdmix.__version__),
    ("VERSION", jsdmix.__version__),
    ("divergence_unit", "nat"),
    ("generator", "PCG64"),
    ("shard_size", 65536),
])
def test_get_information(key, expected):
    assert jsdmix.extras.get_information(key) == expected


@pytest.mark.parametrize("key", ["bogus", "git_revision"])
def test_get_information_unknown(key):
    with pytest.raises(KeyError, match="not understood"):
        jsdmix.extras.get_information(key)


def test_divergence_unit_matches_results():
    r = Pmf(alphabet=Alphabet.range(2), mass=[1.0, 0.0])
    s = Pmf(alphabet=Alphabet.range(2), mass=[0.0, 1.0])
    assert jsdmix.extras.get_information("divergence_unit") == "nat"
    assert jsdmix.information.sym_js(r, s) == pytest.approx(math.log(2), abs=1.e-15)
