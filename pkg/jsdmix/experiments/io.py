"""
Scenario files and result emission.

Scenario files are JSON objects with one shared alphabet::

    {"alphabet": [1, 2, 3], "p_tilde_1": [...], "p_tilde_2": [...], "q": [...],
     "lambda_1": 0.3, "lambda_2": 0.7}

Sweep results go out as CSV with 17 significant digits; reports as JSON.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, TextIO, Union

import pydantic

from ..exceptions import ScenarioFormatError
from ..models import MixtureScenario, SweepResult
from ..util import format_float, json_dumps

__all__ = ["load_scenario", "dump_scenario", "emit_csv", "emit_json", "csv_text"]

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _line_of(text: str, key: str) -> Optional[int]:
    needle = f'"{key}"'
    for n, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return n
    return None


def load_scenario(path: PathLike) -> MixtureScenario:
    """Read a scenario file.

    Raises
    ------
    ScenarioFormatError
        Unreadable file, malformed JSON, or content violating the scenario
        constraints (mass sums, alphabet lengths, proportions). The message names
        the file and, where it can be located, the line.

    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ScenarioFormatError(path, f"cannot read file ({e.strerror})") from e

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioFormatError(path, f"malformed JSON: {e.msg} (column {e.colno})", line=e.lineno) from e

    if not isinstance(data, dict):
        raise ScenarioFormatError(path, f"expected a JSON object, found {type(data).__name__}", line=1)

    try:
        scenario = MixtureScenario.model_validate(data)
    except pydantic.ValidationError as e:
        first = e.errors()[0]
        loc = [str(part) for part in first["loc"]]
        line = _line_of(text, loc[0]) if loc else None
        where = ".".join(loc) or "scenario"
        raise ScenarioFormatError(path, f"{where}: {first['msg']}", line=line) from e

    logger.debug(f"loaded {scenario} from {path}")
    return scenario


def dump_scenario(s: MixtureScenario, path: PathLike) -> None:
    """Write `s` in the scenario-file layout; :py:func:`load_scenario` reads it back exactly."""
    Path(path).write_text(json.dumps(s.to_flat(), indent=2) + "\n")


def csv_text(result: SweepResult) -> str:
    """CSV rendering: one header row of axis names plus ``sjsd_nats``, then one row per record."""
    rows = [",".join(result.axis_names + ("sjsd_nats", ))]
    for point, value in zip(result.points, result.values):
        rows.append(",".join([format_float(x) for x in point] + [format_float(value)]))
    return "\n".join(rows) + "\n"


def _write(text: str, path: Optional[PathLike], stream: TextIO) -> None:
    if path is None or str(path) == "-":
        stream.write(text)
    else:
        Path(path).write_text(text)
        logger.info(f"wrote {path}")


def emit_csv(result: SweepResult, path: Optional[PathLike] = None, *, stream: TextIO = None) -> None:
    """Write `result` as CSV to `path`, or to `stream` (standard output) when `path` is None or '-'."""
    _write(csv_text(result), path, stream or sys.stdout)


def emit_json(report: Any, path: Optional[PathLike] = None, *, stream: TextIO = None) -> None:
    """Write a model or mapping as indented JSON to `path`, or to `stream` (standard output)."""
    _write(json_dumps(report, indent=2) + "\n", path, stream or sys.stdout)
