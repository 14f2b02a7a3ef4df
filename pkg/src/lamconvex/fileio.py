"""JSON laminate files.

Schema: {"breakpoints": [-1.0, ..., 1.0], "angles_deg": [...], "name": "..."}
with `name` optional and no other fields allowed. Angles are stored in
degrees (ply-table convention) and converted to radians on load; full
float precision round-trips through the shortest-repr serialization.
"""

import json
import math
import os
from typing import Any

from .errors import ParseError
from .step import StepLaminate, normalize_breakpoints

_REQUIRED = ("breakpoints", "angles_deg")
_ALLOWED = frozenset(_REQUIRED) | {"name"}


def _number_list(data: dict, key: str) -> list[float]:
    value = data[key]
    if not isinstance(value, list) or not value:
        raise ParseError(f"'{key}' must be a non-empty list of numbers", field=key)
    out = []
    for i, v in enumerate(value):
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
            raise ParseError(f"'{key}[{i}]' is not a finite number: {v!r}", field=key)
        out.append(float(v))
    return out


def laminate_from_dict(data: Any, normalize: bool = False) -> StepLaminate:
    """Build a laminate from parsed JSON. Unknown fields are rejected so
    unit or spelling mistakes cannot pass silently."""
    if not isinstance(data, dict):
        raise ParseError(f"laminate file must contain a JSON object, got {type(data).__name__}")
    unknown = sorted(set(data) - _ALLOWED)
    if unknown:
        raise ParseError(f"unknown field(s): {', '.join(unknown)}", field=unknown[0])
    for key in _REQUIRED:
        if key not in data:
            raise ParseError(f"missing required field '{key}'", field=key)
    if "name" in data and not isinstance(data["name"], str):
        raise ParseError("'name' must be a string", field="name")
    breakpoints = _number_list(data, "breakpoints")
    angles_deg = _number_list(data, "angles_deg")
    if normalize:
        breakpoints = list(normalize_breakpoints(breakpoints))
    angles = tuple(math.radians(a) for a in angles_deg)
    return StepLaminate(tuple(breakpoints), angles)


def laminate_to_dict(t: StepLaminate, name: str | None = None) -> dict:
    data: dict[str, Any] = {
        "breakpoints": list(t.breakpoints),
        "angles_deg": [math.degrees(a) for a in t.angles],
    }
    if name is not None:
        data["name"] = name
    return data


def load_laminate(path: str | os.PathLike, normalize: bool = False) -> StepLaminate:
    """Load and validate a laminate file.

    Raises:
        ParseError: malformed JSON or schema violations.
        InvariantViolation: structurally valid file with invalid laminate data.
        OSError: unreadable path.
    """
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh, parse_constant=_reject_constant)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    return laminate_from_dict(data, normalize=normalize)


def _reject_constant(token: str):
    raise ParseError(f"non-finite number {token!r} not allowed in laminate files")


def save_laminate(t: StepLaminate, path: str | os.PathLike,
                  name: str | None = None) -> None:
    """Write a laminate file; load_laminate(save_laminate(t)) reproduces
    breakpoints exactly and angles to within one degree<->radian rounding."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(laminate_to_dict(t, name=name), fh, indent=2, allow_nan=False)
        fh.write("\n")
