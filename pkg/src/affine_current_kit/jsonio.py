"""Canonical JSON: sorted keys, rationals as "p/q" strings, byte-stable output."""
from __future__ import annotations

import json
from dataclasses import is_dataclass
from fractions import Fraction
from typing import Any

from .rootdata import DominantWeight

SCHEMA = "affine-current-kit/1"

__all__ = ["SCHEMA", "to_jsonable", "emit_json", "document"]


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, DominantWeight):
        return list(obj.labels)
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if is_dataclass(obj):
        raise TypeError(f"{type(obj).__name__} has no JSON form")
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def document(command: str, result: Any) -> dict:
    return {"schema": SCHEMA, "command": command, "result": result}


def emit_json(result: Any) -> bytes:
    text = json.dumps(to_jsonable(result), sort_keys=True, indent=2, ensure_ascii=False)
    return (text + "\n").encode("utf-8")
