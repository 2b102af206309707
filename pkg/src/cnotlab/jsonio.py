"""JSON wire format for complex matrices.

A matrix is carried as ``{"rows": R, "cols": C, "entries": [[re, im], ...]}``
with entries listed row-major.  Parsing is strict: non-finite numbers
(NaN, Infinity), wrong entry counts, and malformed shapes are rejected
with :class:`~cnotlab.errors.ParseError`.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import ParseError
from .linalg import as_matrix


def _reject_constant(name: str):
    raise ParseError(f"non-finite number {name!r} is not allowed")


def loads_strict(text: str):
    """Parse JSON, rejecting NaN/Infinity tokens instead of accepting them."""
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _as_index(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise ParseError(f"{name} must be positive, got {value}")
    return value


def _as_finite(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where} must be a number, got {value!r}")
    if not math.isfinite(value):
        raise ParseError(f"{where} must be finite, got {value!r}")
    return float(value)


def matrix_to_dict(a) -> dict:
    a = as_matrix(a)
    if not np.isfinite(a).all():
        raise ValueError("matrix has non-finite entries, refusing to serialize")
    entries = [[float(z.real), float(z.imag)] for z in a.ravel()]
    return {"rows": a.shape[0], "cols": a.shape[1], "entries": entries}


def matrix_from_dict(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise ParseError(f"matrix object must be a JSON object, got {type(obj).__name__}")
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except KeyError as exc:
        raise ParseError(f"matrix object is missing key {exc.args[0]!r}") from exc
    rows = _as_index(rows, "rows")
    cols = _as_index(cols, "cols")
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise ParseError(
            f"entries must be a list of {rows * cols} pairs for a {rows}x{cols} matrix"
        )
    flat = np.empty(rows * cols, dtype=complex)
    for i, pair in enumerate(entries):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"entry {i} must be a [re, im] pair, got {pair!r}")
        flat[i] = complex(_as_finite(pair[0], f"entry {i} real part"),
                          _as_finite(pair[1], f"entry {i} imaginary part"))
    return flat.reshape(rows, cols)


def dumps_matrix(a) -> str:
    return json.dumps(matrix_to_dict(a), allow_nan=False)


def loads_matrix(text: str) -> np.ndarray:
    return matrix_from_dict(loads_strict(text))


def load_matrix(path) -> np.ndarray:
    """Read one matrix from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        return loads_matrix(fh.read())
