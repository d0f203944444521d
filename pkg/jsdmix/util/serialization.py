import json
import math
from typing import Any

import numpy as np
from pydantic import BaseModel
from pydantic_core import to_jsonable_python

__all__ = ["json_dumps", "json_loads", "serialize", "deserialize", "format_float"]


def format_float(value: float) -> str:
    """Locale-independent decimal text with 17 significant digits, enough to
    round-trip any IEEE double."""

    return f"{float(value):.17g}"


class JSONArrayEncoder(json.JSONEncoder):
    def default(self, obj: Any) -> Any:
        if isinstance(obj, BaseModel):
            return obj.model_dump(mode="json")

        if isinstance(obj, np.ndarray):
            return obj.ravel().tolist() if obj.shape else obj.tolist()

        if isinstance(obj, np.generic):
            return obj.item()

        try:
            return to_jsonable_python(obj)
        except Exception:
            pass

        return json.JSONEncoder.default(self, obj)


def _strip_nonfinite(data: Any) -> Any:
    # JSON has no infinity; +inf KL values travel as the string "inf"
    if isinstance(data, float) and not math.isfinite(data):
        return str(data)
    if isinstance(data, dict):
        return {k: _strip_nonfinite(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [_strip_nonfinite(v) for v in data]
    return data


def json_dumps(data: Any, *, indent: int = None) -> str:
    """Safe serialization of a Python object to JSON string representation using all known encoders.

    Parameters
    ----------
    data : Any
        A encodable python object. Pydantic models and NumPy arrays are flattened to plain JSON.
    indent : int, optional
        Passed to :py:func:`json.dumps`.

    Returns
    -------
    str
        A JSON representation of the data.
    """
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="python", by_alias=True)

    return json.dumps(_strip_nonfinite(data), cls=JSONArrayEncoder, indent=indent, allow_nan=False)


def json_loads(data: str) -> Any:
    """Deserializes a json representation of known objects into those objects."""

    return json.loads(data)


def serialize(data: Any, encoding: str) -> str:
    """Encoding Python objects using the provided encoder.

    Parameters
    ----------
    data : Any
        A encodable python object.
    encoding : str
        The type of encoding to perform: {'json'}

    """
    if encoding.lower() == "json":
        return json_dumps(data)
    else:
        raise KeyError(f"Encoding '{encoding}' not understood, valid options: 'json'")


def deserialize(blob: str, encoding: str) -> Any:
    """Decode a blob produced by :py:func:`serialize`."""
    if encoding.lower() == "json":
        return json_loads(blob)
    else:
        raise KeyError(f"Encoding '{encoding}' not understood, valid options: 'json'")
