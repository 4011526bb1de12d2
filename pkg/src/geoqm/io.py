"""
JSON codec for state files.

Pure states::

    {"dim": n, "vector": [[re, im], ...]}

Matrices (density states, Hamiltonians)::

    {"dim": n, "matrix": [[[re, im], ...], ...]}

Complex numbers are ``[re, im]`` pairs and matrices are row-major.
Python's float repr round-trips, so serialization is bit-stable for
finite doubles.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .exceptions import DimensionError, GeometryError

__all__ = ["encode_vector", "encode_matrix", "decode", "dumps", "load", "save"]


def _pair(c) -> list[float]:
    c = complex(c)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise GeometryError("state files only hold finite numbers")
    return [c.real, c.imag]


def _complex(pair, where: str) -> complex:
    if (
        not isinstance(pair, (list, tuple))
        or len(pair) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
    ):
        raise GeometryError(f"{where}: expected a [re, im] pair, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def encode_vector(v) -> dict:
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise DimensionError("vector must be 1-d")
    return {"dim": int(v.size), "vector": [_pair(c) for c in v]}


def encode_matrix(M) -> dict:
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError("matrix must be square")
    return {"dim": int(M.shape[0]), "matrix": [[_pair(c) for c in row] for row in M]}


def decode(doc) -> tuple[str, np.ndarray]:
    """Return ``("vector", v)`` or ``("matrix", M)`` from a parsed document."""
    if not isinstance(doc, dict) or "dim" not in doc:
        raise GeometryError("state file must be an object with a 'dim' field")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise GeometryError(f"'dim' must be a positive integer, got {dim!r}")
    if ("vector" in doc) == ("matrix" in doc):
        raise GeometryError("state file needs exactly one of 'vector' or 'matrix'")
    if "vector" in doc:
        entries = doc["vector"]
        if not isinstance(entries, list) or len(entries) != dim:
            raise DimensionError(f"'vector' must hold {dim} entries")
        return "vector", np.array([_complex(e, f"vector[{i}]") for i, e in enumerate(entries)])
    rows = doc["matrix"]
    if not isinstance(rows, list) or len(rows) != dim or any(
        not isinstance(r, list) or len(r) != dim for r in rows
    ):
        raise DimensionError(f"'matrix' must be {dim} rows of {dim} entries")
    return "matrix", np.array(
        [[_complex(e, f"matrix[{i}][{j}]") for j, e in enumerate(r)] for i, r in enumerate(rows)]
    )


def dumps(kind: str, data) -> str:
    doc = encode_vector(data) if kind == "vector" else encode_matrix(data)
    return json.dumps(doc)


def load(path) -> tuple[str, np.ndarray]:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GeometryError(f"{path}: not valid JSON ({exc})") from exc
    return decode(doc)


def save(path, kind: str, data) -> None:
    Path(path).write_text(dumps(kind, data) + "\n")
