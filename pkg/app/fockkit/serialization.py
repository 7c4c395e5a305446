"""Deterministic JSON and CSV rendering of results.

Rationals are written as "a/b" strings, never floats. JSON keys are sorted so
identical results give byte-identical output.
"""

import io
import json
from collections.abc import Mapping
from enum import Enum
from fractions import Fraction
from typing import Any

import pandas as pd

from .cyclotomic import CycloNumber
from .errors import InvalidInput


def to_jsonable(obj: Any) -> Any:
    """Recursively convert domain objects to plain JSON values."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, CycloNumber):
        return obj.to_json()
    if isinstance(obj, float):
        raise InvalidInput(f"refusing to serialize float {obj!r}")
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    if isinstance(obj, Mapping):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_jsonable(x) for x in obj]
        return sorted(items, key=json.dumps) if isinstance(obj, (set, frozenset)) else items
    raise InvalidInput(f"cannot serialize {type(obj).__name__}")


def dump_json(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, ensure_ascii=False)


def dump_csv(frame: pd.DataFrame, index: bool = True) -> str:
    """RFC-4180 CSV (minimal quoting, CRLF line endings)."""
    buffer = io.StringIO()
    frame.to_csv(buffer, index=index, lineterminator="\r\n")
    return buffer.getvalue()


def payload_frame(payload: Any) -> pd.DataFrame:
    """Tabular view of a JSON payload without a dedicated frame."""
    if isinstance(payload, Mapping):
        return records_frame([payload])
    if isinstance(payload, (list, tuple)) and all(isinstance(x, Mapping) for x in payload):
        return records_frame(list(payload))
    if isinstance(payload, (list, tuple)):
        return pd.DataFrame({"value": [to_jsonable(x) for x in payload]})
    return pd.DataFrame({"value": [to_jsonable(payload)]})


def records_frame(records: list[Mapping[str, Any]]) -> pd.DataFrame:
    """One row per record, values rendered like their JSON form."""
    rows = []
    for record in records:
        row = {}
        for key, value in record.items():
            plain = to_jsonable(value)
            row[key] = plain if isinstance(plain, (int, str)) else json.dumps(plain, sort_keys=True)
        rows.append(row)
    return pd.DataFrame(rows)
