"""JSON encoding for CLI results: integers become decimal strings, rationals
become {"num": ..., "den": ...} objects, sequences become arrays."""

import dataclasses
import json
from fractions import Fraction
from typing import Any

import numpy as np


def to_json_value(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, Fraction):
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, (float, np.floating)):
        return repr(float(obj))
    if isinstance(obj, np.ndarray):
        return [to_json_value(x) for x in obj.tolist()]
    if dataclasses.is_dataclass(obj):
        return {f.name: to_json_value(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(key): to_json_value(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json_value(x) for x in obj]
    raise TypeError(f"cannot encode {type(obj)} as JSON")


def dumps(obj: Any) -> str:
    return json.dumps(to_json_value(obj), indent=2)
