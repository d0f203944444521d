"""
Misc information and runtime information.
"""

from . import _version

__all__ = ["get_information"]

versions = _version.get_versions()

# Unit every divergence and entropy is returned in; bounds convert from here.
DIVERGENCE_UNIT = "nat"


def _runtime_information():
    # deferred: both modules import this one through util
    from .bounds import SHARD_SIZE
    from .util.rng import GENERATOR_NAME

    return {
        "version": versions["version"],
        "divergence_unit": DIVERGENCE_UNIT,
        "generator": GENERATOR_NAME,
        "shard_size": SHARD_SIZE,
    }


def get_information(key: str):
    """
    Obtains a variety of runtime information about JSDMix.

    Parameters
    ----------
    key : {'version', 'divergence_unit', 'generator', 'shard_size'}
        Package version, unit of every computed divergence, bit generator of the
        randomized routines, or urn-game rounds per independent random stream.

    Raises
    ------
    KeyError
        Unknown `key`.

    """
    key = key.lower()
    if key == "version":
        return versions["version"]

    info = _runtime_information()
    if key not in info:
        raise KeyError(f"Information key '{key}' not understood, valid options: {sorted(info)}")

    return info[key]
