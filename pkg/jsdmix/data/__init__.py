"""
Bundled scenario files.
"""

from pathlib import Path

__all__ = ["data_path", "SCENARIO_FILES"]

SCENARIO_FILES = ("reference_scenario.json", "reference_disjoint_scenario.json")


def data_path(name: str) -> Path:
    """Absolute path of the bundled file `name`."""
    path = Path(__file__).parent / name
    if not path.is_file():
        raise FileNotFoundError(f"No bundled data file '{name}'. Available: {SCENARIO_FILES}")
    return path
